#include "farey/io.hpp"

#include <fstream>

namespace farey {

namespace {

[[noreturn]] void fail(const std::string& what) { throw SchemaError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::exception&) {
      fail(std::string("field '") + key + "' is not an integer");
    }
  }
  fail(std::string("field '") + key + "' must be an integer");
}

ExtRat extrat_field(const Json& j, const char* key) {
  try {
    return parse_extrat(str_field(j, key));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Rat rat_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_number()) return Rat(v.get<double>());
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  fail(std::string("field '") + key + "' must be a rational");
}

}  // namespace

Json window_to_json(const Window& w) {
  return Json{{"max_num", w.max_num.str()}, {"max_den", w.max_den.str()},
              {"infinity", w.include_infinity}};
}

Window window_from_json(const Json& j) {
  Window w;
  w.max_num = int_field(j, "max_num");
  w.max_den = int_field(j, "max_den");
  if (w.max_num < 1 || w.max_den < 1) fail("window bounds must be positive");
  w.include_infinity = j.contains("infinity") ? field(j, "infinity").get<bool>() : true;
  return w;
}

Json mobius_to_json(const Mobius& m) {
  return Json{{"a", rat_str(m.a)}, {"b", rat_str(m.b)}, {"c", rat_str(m.c)}, {"d", rat_str(m.d)}};
}

Mobius mobius_from_json(const Json& j) {
  Mobius m{rat_field(j, "a"), rat_field(j, "b"), rat_field(j, "c"), rat_field(j, "d")};
  if (m.determinant() == 0) fail("mobius map must have nonzero determinant");
  return m;
}

Json horocycle_to_json(const Horocycle& h) {
  return Json{{"base", h.base.str()}, {"size", rat_str(h.size)}};
}

Horocycle horocycle_from_json(const Json& j) {
  const Rat size = rat_field(j, "size");
  if (size <= 0) fail("horocycle size must be positive");
  return Horocycle{extrat_field(j, "base"), size};
}

Json shear_to_json(const ShearFunction& s) {
  switch (s.kind()) {
    case ShearFunction::Kind::zero:
      return Json{{"rule", "zero"}};
    case ShearFunction::Kind::example:
      return Json{{"rule", "paper-example"}};
    case ShearFunction::Kind::sparse: {
      Json entries = Json::array();
      for (const auto& [e, v] : s.entries()) {
        Json entry{{"edge", edge_str(e)}};
        if (v.mult) {
          entry["mult"] = rat_str(*v.mult);
        } else {
          entry["log"] = v.log;
        }
        entries.push_back(std::move(entry));
      }
      return Json{{"default", 0}, {"entries", std::move(entries)}};
    }
  }
  fail("unknown shear kind");
}

ShearFunction shear_from_json(const Json& j) {
  if (j.is_string()) {  // builtin shorthand
    const std::string rule = j.get<std::string>();
    if (rule == "zero") return ShearFunction::zero();
    if (rule == "paper-example") return ShearFunction::example();
    fail("unknown shear rule '" + rule + "'");
  }
  if (!j.is_object()) fail("shear must be an object or a builtin name");
  if (j.contains("rule")) {
    const std::string rule = str_field(j, "rule");
    if (rule == "zero") return ShearFunction::zero();
    if (rule == "paper-example") return ShearFunction::example();
    fail("unknown shear rule '" + rule + "'");
  }
  if (j.contains("default")) {
    const Json& d = field(j, "default");
    if (!d.is_number() || d.get<double>() != 0.0) fail("only a zero default shear is supported");
  }
  std::map<GeodesicEdge, ShearValue> entries;
  const Json& list = field(j, "entries");
  if (!list.is_array()) fail("'entries' must be an array");
  for (const Json& entry : list) {
    GeodesicEdge e;
    try {
      e = parse_edge(str_field(entry, "edge"));
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
    if (!edge_in_farey(e)) fail("shear entry off the Farey triangulation: " + edge_str(e));
    if (entries.count(e)) fail("duplicate shear entry for " + edge_str(e));
    if (entry.contains("mult")) {
      const Rat m = rat_field(entry, "mult");
      if (m <= 0) fail("shear multiplier must be positive");
      entries.emplace(e, ShearValue::from_mult(m));
    } else if (entry.contains("log")) {
      const Json& lg = field(entry, "log");
      if (!lg.is_number()) fail("'log' must be a number");
      entries.emplace(e, ShearValue::from_log(lg.get<double>()));
    } else {
      fail("shear entry needs 'mult' or 'log'");
    }
  }
  return ShearFunction::sparse(std::move(entries));
}

Json vertex_map_to_json(const VertexMap& m) {
  Json pairs = Json::array();
  for (const auto& [v, h] : m.pairs) pairs.push_back(Json::array({v.str(), h.str()}));
  return Json{{"normalization", Json::array({m.normalization.a.str(), m.normalization.b.str(),
                                             m.normalization.c.str()})},
              {"pairs", std::move(pairs)}};
}

VertexMap vertex_map_from_json(const Json& j) {
  VertexMap m;
  const Json& norm = field(j, "normalization");
  if (!norm.is_array() || norm.size() != 3) fail("'normalization' must be a triple");
  try {
    m.normalization = make_farey_triangle(parse_extrat(norm[0].get<std::string>()),
                                          parse_extrat(norm[1].get<std::string>()),
                                          parse_extrat(norm[2].get<std::string>()));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array()) fail("'pairs' must be an array");
  for (const Json& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      fail("vertex map pair must be [\"p/q\", \"r/s\"]");
    }
    try {
      const ExtRat v = parse_extrat(p[0].get<std::string>());
      if (!m.pairs.emplace(v, parse_extrat(p[1].get<std::string>())).second) {
        fail("duplicate vertex " + v.str());
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  try {
    validate_vertex_map(m);
  } catch (const DegenerateDevelopment& e) {
    fail(std::string("vertex map is not circular-order preserving: ") + e.what());
  }
  return m;
}

Json decoration_to_json(const Decoration& d) {
  Json out = Json::array();
  for (const auto& [v, h] : d.at) out.push_back(Json{{"vertex", v.str()}, {"size", rat_str(h.size)}});
  return out;
}

Decoration decoration_from_json(const Json& j) {
  if (!j.is_array()) fail("decoration must be an array");
  Decoration d;
  for (const Json& item : j) {
    const ExtRat v = extrat_field(item, "vertex");
    const Rat size = rat_field(item, "size");
    if (size <= 0) fail("horocycle size must be positive");
    if (!d.at.emplace(v, Horocycle{v, size}).second) fail("duplicate decoration vertex " + v.str());
  }
  return d;
}

Json lambdas_to_json(const LambdaAssignment& l) {
  Json out = Json::array();
  for (const auto& [e, v] : l.lam) out.push_back(Json{{"edge", edge_str(e)}, {"lambda", rat_str(v)}});
  return out;
}

LambdaAssignment lambdas_from_json(const Json& j) {
  if (!j.is_array()) fail("lambda assignment must be an array");
  LambdaAssignment l;
  for (const Json& item : j) {
    GeodesicEdge e;
    try {
      e = parse_edge(str_field(item, "edge"));
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
    const Rat v = rat_field(item, "lambda");
    if (v <= 0) fail("lambda lengths must be positive");
    if (!l.lam.emplace(e, v).second) fail("duplicate lambda for " + edge_str(e));
  }
  return l;
}

Json triangulation_to_json(const WindowTriangulation& t) {
  Json backend;
  switch (t.backend()) {
    case WindowTriangulation::Backend::farey_base:
      backend = "farey";
      break;
    case WindowTriangulation::Backend::finite_diff: {
      Json removed = Json::array(), added = Json::array();
      for (const auto& e : t.removed()) removed.push_back(edge_str(e));
      for (const auto& e : t.added()) added.push_back(edge_str(e));
      backend = Json{{"diff", Json{{"removed", std::move(removed)}, {"added", std::move(added)}}}};
      break;
    }
    case WindowTriangulation::Backend::image_of_farey:
      backend = Json{{"image_of", vertex_map_to_json(*t.image_map())}};
      break;
  }
  return Json{{"backend", std::move(backend)}, {"window", window_to_json(t.window())}};
}

namespace {

std::vector<GeodesicEdge> edge_list_from_json(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array of edges");
  std::vector<GeodesicEdge> out;
  for (const Json& item : j) {
    if (!item.is_string()) fail(std::string(what) + " entries must be edge strings");
    try {
      out.push_back(parse_edge(item.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  return out;
}

}  // namespace

WindowTriangulation triangulation_from_json(const Json& j) {
  const Window w = window_from_json(field(j, "window"));
  const Json& backend = field(j, "backend");
  try {
    if (backend.is_string()) {
      if (backend.get<std::string>() != "farey") {
        fail("unknown triangulation backend '" + backend.get<std::string>() + "'");
      }
      return WindowTriangulation::farey(w);
    }
    if (backend.is_object() && backend.contains("diff")) {
      const Json& diff = backend.at("diff");
      return WindowTriangulation::finite_diff(w, edge_list_from_json(field(diff, "removed"), "removed"),
                                              edge_list_from_json(field(diff, "added"), "added"));
    }
    if (backend.is_object() && backend.contains("image_of")) {
      const Json& ref = backend.at("image_of");
      Json map_json;
      if (ref.is_string()) {
        map_json = load_json_file(ref.get<std::string>());
      } else if (ref.is_object() && ref.contains("shear")) {
        // develop a shear over the window and take the image triangulation
        const ShearFunction s = shear_from_json(ref.at("shear"));
        const VertexMap m = develop(s, w);
        return WindowTriangulation::image_of_farey(w, m);
      } else {
        map_json = ref;
      }
      return WindowTriangulation::image_of_farey(w, vertex_map_from_json(map_json));
    }
  } catch (const InvalidFlipSet& e) {
    fail(e.what());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  fail("unknown triangulation backend");
}

Json flip_sequence_to_json(const std::vector<FlipSet>& seq) {
  Json out = Json::array();
  for (const auto& fs : seq) {
    Json move = Json::array();
    for (const auto& e : fs.edges) move.push_back(edge_str(e));
    out.push_back(std::move(move));
  }
  return out;
}

std::vector<FlipSet> flip_sequence_from_json(const Json& j) {
  if (!j.is_array()) fail("flip sequence must be an array of edge lists");
  std::vector<FlipSet> out;
  for (const Json& move : j) {
    out.push_back(FlipSet{edge_list_from_json(move, "flip move")});
  }
  return out;
}

Json qs_report_to_json(const QsCertificateReport& r) {
  const auto witness = [](const QsWitness& w) {
    return Json{{"tip", w.tip.str()}, {"k", w.k.str()}, {"n", w.n.str()}, {"ratio", w.ratio}};
  };
  return Json{{"pass", r.pass},
              {"bound", r.bound},
              {"max_ratio", r.max_ratio},
              {"min_ratio", r.min_ratio},
              {"max_witness", witness(r.max_at)},
              {"min_witness", witness(r.min_at)},
              {"note", "finite-window certificate"}};
}

Json ps_report_to_json(const PsCertificateReport& r) {
  Json out{{"sup_abs_partial_sum", r.sup_abs_partial_sum},
           {"witness", Json{{"tip", r.witness.tip.str()},
                            {"n", r.witness.n.str()},
                            {"m", r.witness.m.str()}}},
           {"note", "finite-window certificate"}};
  if (r.sup_mult) out["sup_mult"] = rat_str(*r.sup_mult);
  return out;
}

Json cross_report_to_json(const CrossReport& r) {
  Json witnesses = Json::array();
  if (r.n_witness) witnesses.push_back(edge_str(*r.n_witness));
  if (r.m_witness) witnesses.push_back(edge_str(*r.m_witness));
  return Json{{"n", r.n}, {"m", r.m}, {"witnesses", std::move(witnesses)},
              {"note", "windowed lower bounds"}};
}

Json transitivity_report_to_json(const TransitivityReport& r) {
  return Json{{"n", r.n},     {"m", r.m},       {"measured", r.measured},
              {"bound", r.bound}, {"pass", r.pass}, {"slack", r.slack}};
}

Json pinch_report_to_json(const PinchReport& r) {
  return Json{{"pass", r.pass},
              {"min_lambda", rat_str(r.min_lambda)},
              {"max_lambda", rat_str(r.max_lambda)},
              {"min_edge", edge_str(r.min_edge)},
              {"max_edge", edge_str(r.max_edge)}};
}

Json qs_scan_report_to_json(const QsScanReport& r) {
  const auto extremes = [](const QsCaseExtremes& e) {
    if (!e.seen) return Json{{"seen", false}};
    return Json{{"seen", true},
                {"min_ratio", rat_str(e.min_ratio)},
                {"max_ratio", rat_str(e.max_ratio)},
                {"min_at", Json::array({rat_str(e.min_at.x), rat_str(e.min_at.t)})},
                {"max_at", Json::array({rat_str(e.max_at.x), rat_str(e.max_at.t)})}};
  };
  Json cases;
  for (int c = 0; c < 5; ++c) {
    cases[qs_case_name(static_cast<QsSampleCase>(c))] = extremes(r.per_case[c]);
  }
  return Json{{"pass", r.pass},
              {"full_block_ok", r.full_block_ok},
              {"samples", r.samples},
              {"global", extremes(r.global)},
              {"cases", std::move(cases)}};
}

Json falsifier_report_to_json(const FalsifierReport& r) {
  return Json{{"k", r.k},
              {"gap", rat_str(r.gap)},
              {"forced_lambda_upper_bound", rat_str(r.forced_lambda_upper_bound)},
              {"fails_pinching", r.fails_pinching}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace farey
