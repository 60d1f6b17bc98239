#include "farey/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "farey/io.hpp"
#include "farey/svg_render.hpp"

namespace farey {

namespace {

struct CertificateFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ShearFunction shear_from_arg(const std::string& arg) {
  if (arg == "zero") return ShearFunction::zero();
  if (arg == "paper-example") return ShearFunction::example();
  if (!arg.empty() && arg.front() == '{') {
    try {
      return shear_from_json(Json::parse(arg));
    } catch (const Json::parse_error& e) {
      throw SchemaError(std::string("inline shear is not valid JSON: ") + e.what());
    }
  }
  return shear_from_json(load_json_file(arg));
}

Window window_from_flags(const std::vector<std::string>& w, bool no_infinity) {
  if (w.size() != 2) throw SchemaError("--window takes two values: MAX_NUM MAX_DEN");
  Window win;
  try {
    win.max_num = Int(w[0]);
    win.max_den = Int(w[1]);
  } catch (const std::exception&) {
    throw SchemaError("--window values must be integers");
  }
  if (win.max_num < 1 || win.max_den < 1) throw SchemaError("window bounds must be positive");
  win.include_infinity = !no_infinity;
  return win;
}

std::vector<ExtRat> tips_from_flag(const std::string& arg) {
  std::vector<ExtRat> tips;
  std::string cur;
  std::stringstream ss(arg);
  while (std::getline(ss, cur, ',')) {
    if (cur == "inf" || cur == "oo") {
      tips.push_back(ExtRat::infinity());
    } else {
      try {
        tips.push_back(parse_extrat(cur));
      } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
      }
    }
  }
  if (tips.empty()) throw SchemaError("--tips needs at least one vertex");
  return tips;
}

void k_range_from_flag(const std::string& arg, Int& lo, Int& hi) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos) throw SchemaError("--k-range must look like LO:HI");
  try {
    lo = Int(arg.substr(0, colon));
    hi = Int(arg.substr(colon + 1));
  } catch (const std::exception&) {
    throw SchemaError("--k-range bounds must be integers");
  }
  if (lo > hi) throw SchemaError("--k-range must have LO <= HI");
}

FareyTriangle normalization_from_flag(const std::string& arg) {
  std::vector<ExtRat> v;
  std::string cur;
  std::stringstream ss(arg);
  while (std::getline(ss, cur, ',')) v.push_back(parse_extrat(cur));
  if (v.size() != 3) throw SchemaError("--normalization takes three vertices");
  try {
    return make_farey_triangle(v[0], v[1], v[2]);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << payload;
    if (payload.empty() || payload.back() != '\n') out << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw SchemaError("cannot write to " + out_path);
  f << payload;
}

void emit_json(const Json& j, const std::string& out_path, std::ostream& out) {
  emit(j.dump(2), out_path, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations on the Farey triangulation: shears, lambda lengths, flips"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write the result to a file instead of stdout");

  // farey
  auto* cmd_farey = app.add_subcommand("farey", "enumerate windowed Farey edges");
  std::vector<std::string> w_farey;
  bool no_inf_farey = false;
  cmd_farey->add_option("--window", w_farey, "MAX_NUM MAX_DEN")->expected(2)->required();
  cmd_farey->add_flag("--no-infinity", no_inf_farey, "exclude the vertex at infinity");

  // develop
  auto* cmd_dev = app.add_subcommand("develop", "develop a shear function over a window");
  std::string dev_shear = "zero", dev_norm = "0/1,1/1,1/0";
  std::vector<std::string> w_dev;
  bool no_inf_dev = false, dev_float = false, dev_exact = true;
  cmd_dev->add_option("--shear", dev_shear, "builtin name, file, or inline JSON");
  cmd_dev->add_option("--window", w_dev, "MAX_NUM MAX_DEN")->expected(2)->required();
  cmd_dev->add_option("--normalization", dev_norm, "triangle fixed pointwise (default 0/1,1/1,1/0)");
  cmd_dev->add_flag("--no-infinity", no_inf_dev, "exclude the vertex at infinity");
  cmd_dev->add_flag("--float", dev_float, "binary64 development");
  cmd_dev->add_flag("--exact,!--no-exact", dev_exact, "exact rational development (default)");

  // check-qs / check-ps
  auto* cmd_qs = app.add_subcommand("check-qs", "scan fan ratios for a quasisymmetry certificate");
  auto* cmd_ps = app.add_subcommand("check-ps", "scan fan shear partial sums");
  std::string qs_shear = "zero", qs_tips = "inf", qs_krange = "-16:16";
  long long qs_nmax = 16;
  double qs_bound = 1.0;
  bool qs_assert = false;
  cmd_qs->add_option("--shear", qs_shear);
  cmd_qs->add_option("--tips", qs_tips, "comma list of fan tips ('inf' allowed)");
  cmd_qs->add_option("--k-range", qs_krange, "LO:HI");
  cmd_qs->add_option("--n-max", qs_nmax)->check(CLI::PositiveNumber);
  cmd_qs->add_option("--bound", qs_bound, "certificate constant M")->required();
  cmd_qs->add_flag("--assert", qs_assert, "exit 5 when the certificate fails");

  std::string ps_shear = "zero", ps_tips = "inf", ps_krange = "-16:16";
  double ps_bound = -1.0;
  bool ps_assert = false;
  cmd_ps->add_option("--shear", ps_shear);
  cmd_ps->add_option("--tips", ps_tips, "comma list of fan tips ('inf' allowed)");
  cmd_ps->add_option("--k-range", ps_krange, "LO:HI");
  cmd_ps->add_option("--bound", ps_bound, "bound checked under --assert");
  cmd_ps->add_flag("--assert", ps_assert, "exit 5 when the sup exceeds --bound");

  // flip
  auto* cmd_flip = app.add_subcommand("flip", "apply a flip sequence, with optional lambda lengths");
  std::string flip_tri, flip_seq, flip_lams;
  cmd_flip->add_option("--triangulation", flip_tri, "triangulation JSON file")->required();
  cmd_flip->add_option("--flips", flip_seq, "flip sequence JSON file")->required();
  cmd_flip->add_option("--lambdas", flip_lams, "lambda assignment JSON file");

  // intersect
  auto* cmd_int = app.add_subcommand("intersect", "windowed crossing bounds between triangulations");
  std::string int_t1, int_t2, int_t3;
  cmd_int->add_option("--t1", int_t1)->required();
  cmd_int->add_option("--t2", int_t2)->required();
  cmd_int->add_option("--t3", int_t3, "also check the transitivity bound through --t2");

  // example
  auto* cmd_ex = app.add_subcommand("example", "golden values and scans for the built-in example");
  int ex_max_k = 8, ex_grid_pow = 5, ex_extra = 0;
  unsigned ex_seed = 0;
  std::string ex_falsifier = "2,10,100";
  cmd_ex->add_option("--max-k", ex_max_k)->check(CLI::Range(1, 12));
  cmd_ex->add_option("--grid-pow", ex_grid_pow)->check(CLI::Range(0, 8));
  cmd_ex->add_option("--seed", ex_seed, "seed for extra jittered scan samples");
  cmd_ex->add_option("--extra", ex_extra, "number of extra jittered samples");
  cmd_ex->add_option("--falsifier-bounds", ex_falsifier, "comma list of pinching bounds");

  // render
  auto* cmd_render = app.add_subcommand("render", "SVG of the Poincaré disk");
  std::vector<std::string> w_render;
  bool no_inf_render = false, render_canonical = false;
  std::string render_tri, render_dec, render_shear;
  int render_px = 800;
  cmd_render->add_option("--window", w_render, "MAX_NUM MAX_DEN")->expected(2);
  cmd_render->add_flag("--no-infinity", no_inf_render);
  cmd_render->add_option("--triangulation", render_tri, "triangulation JSON file");
  cmd_render->add_option("--decoration", render_dec, "decoration JSON file");
  cmd_render->add_flag("--canonical-decoration", render_canonical);
  cmd_render->add_option("--shear", render_shear, "render the image triangulation of a shear");
  cmd_render->add_option("--size", render_px, "image size in pixels")->check(CLI::Range(64, 4096));

  std::vector<std::string> argv(args);
  try {
    std::vector<const char*> cargs;
    cargs.push_back("farey");
    for (const auto& a : argv) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());

    if (*cmd_farey) {
      const Window w = window_from_flags(w_farey, no_inf_farey);
      Json edges = Json::array();
      for (const auto& e : farey_edges_in_window(w)) edges.push_back(edge_str(e));
      emit_json(Json{{"window", window_to_json(w)}, {"edges", std::move(edges)}}, out_path, out);
      return 0;
    }

    if (*cmd_dev) {
      const Window w = window_from_flags(w_dev, no_inf_dev);
      const ShearFunction s = shear_from_arg(dev_shear);
      const FareyTriangle norm = normalization_from_flag(dev_norm);
      if (dev_float || !dev_exact || !s.exact()) {
        const VertexMapF m = develop_float(s, w, norm);
        Json pairs = Json::array();
        for (const auto& [v, h] : m.pairs) pairs.push_back(Json::array({v.str(), h}));
        emit_json(Json{{"mode", "float"},
                       {"normalization", Json::array({norm.a.str(), norm.b.str(), norm.c.str()})},
                       {"pairs", std::move(pairs)}},
                  out_path, out);
        return 0;
      }
      const VertexMap m = develop(s, w, norm);
      Json j = vertex_map_to_json(m);
      j["mode"] = "exact";
      emit_json(j, out_path, out);
      return 0;
    }

    if (*cmd_qs) {
      FanScanParams p;
      p.tips = tips_from_flag(qs_tips);
      k_range_from_flag(qs_krange, p.k_lo, p.k_hi);
      p.n_max = qs_nmax;
      const auto rep = check_qs_certificate(shear_from_arg(qs_shear), p, qs_bound);
      emit_json(qs_report_to_json(rep), out_path, out);
      if (qs_assert && !rep.pass) throw CertificateFailure("fan ratio left [1/M, M] in the window");
      return 0;
    }

    if (*cmd_ps) {
      FanScanParams p;
      p.tips = tips_from_flag(ps_tips);
      k_range_from_flag(ps_krange, p.k_lo, p.k_hi);
      const auto rep = check_ps_certificate(shear_from_arg(ps_shear), p);
      emit_json(ps_report_to_json(rep), out_path, out);
      if (ps_assert) {
        if (ps_bound < 0) throw SchemaError("--assert needs --bound for check-ps");
        if (rep.sup_abs_partial_sum > ps_bound) {
          throw CertificateFailure("partial sums exceed the bound in the window");
        }
      }
      return 0;
    }

    if (*cmd_flip) {
      WindowTriangulation t = triangulation_from_json(load_json_file(flip_tri));
      std::optional<LambdaAssignment> lams;
      if (!flip_lams.empty()) lams = lambdas_from_json(load_json_file(flip_lams));
      const auto seq = flip_sequence_from_json(load_json_file(flip_seq));
      for (const auto& move : seq) {
        FlipResult r = simultaneous_flip(t, move, lams);
        t = std::move(r.triangulation);
        lams = std::move(r.lambdas);
      }
      Json j{{"triangulation", triangulation_to_json(t)}};
      if (lams) j["lambdas"] = lambdas_to_json(*lams);
      emit_json(j, out_path, out);
      return 0;
    }

    if (*cmd_int) {
      const WindowTriangulation t1 = triangulation_from_json(load_json_file(int_t1));
      const WindowTriangulation t2 = triangulation_from_json(load_json_file(int_t2));
      Json j = cross_report_to_json(max_crossing(t1, t2));
      if (!int_t3.empty()) {
        const WindowTriangulation t3 = triangulation_from_json(load_json_file(int_t3));
        j["transitivity"] = transitivity_report_to_json(check_transitivity_bound(t1, t2, t3));
      }
      emit_json(j, out_path, out);
      return 0;
    }

    if (*cmd_ex) {
      Json golden = Json::array();
      Int p = 16;
      for (int k = 1; k <= ex_max_k; ++k) {
        golden.push_back(Json{{"k", k},
                              {"x", ExtRat(p).str()},
                              {"h", rat_str(example_h(Rat(p)))},
                              {"h_neg", rat_str(example_h(Rat(-p)))}});
        p *= 16;
      }
      const auto grid = default_qs_grid(ex_grid_pow, ex_seed, ex_extra);
      Json falsifiers = Json::array();
      {
        std::stringstream ss(ex_falsifier);
        std::string cur;
        while (std::getline(ss, cur, ',')) {
          const Rat M = parse_rat(cur);
          int k = 1;
          FalsifierReport rep = not_pinched_falsifier(k, M);
          while (!rep.fails_pinching && k < 64) rep = not_pinched_falsifier(++k, M);
          falsifiers.push_back(Json{{"M", rat_str(M)}, {"first_failing_k", rep.k},
                                    {"report", falsifier_report_to_json(rep)}});
        }
      }
      emit_json(Json{{"golden", std::move(golden)},
                     {"qs_scan", qs_scan_report_to_json(qs_ratio_scan(grid))},
                     {"seed", ex_seed},
                     {"falsifiers", std::move(falsifiers)}},
                out_path, out);
      return 0;
    }

    if (*cmd_render) {
      WindowTriangulation t;
      if (!render_tri.empty()) {
        t = triangulation_from_json(load_json_file(render_tri));
      } else {
        if (w_render.empty()) throw SchemaError("render needs --window or --triangulation");
        const Window w = window_from_flags(w_render, no_inf_render);
        if (!render_shear.empty()) {
          t = WindowTriangulation::image_of_farey(w, develop(shear_from_arg(render_shear), w));
        } else {
          t = WindowTriangulation::farey(w);
        }
      }
      std::optional<Decoration> dec;
      if (render_canonical) dec = canonical_decoration(t.window());
      if (!render_dec.empty()) dec = decoration_from_json(load_json_file(render_dec));
      RenderOptions opt;
      opt.size_px = render_px;
      emit(render_svg(t, dec, opt), out_path, out);
      return 0;
    }
    throw SchemaError("no subcommand given");
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const CertificateFailure& e) {
    err << Json{{"error", "certificate-failed"}, {"detail", e.what()}}.dump() << "\n";
    return 5;
  } catch (const DegenerateDevelopment& e) {
    err << Json{{"error", "degenerate-development"}, {"detail", e.what()}}.dump() << "\n";
    return 3;
  } catch (const InvalidFlipSet& e) {
    err << Json{{"error", "invalid-flip-set"}, {"detail", e.what()}}.dump() << "\n";
    return 4;
  } catch (const SchemaError& e) {
    err << Json{{"error", "schema"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << Json{{"error", "schema"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  }
}

}  // namespace farey
