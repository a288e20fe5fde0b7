#include "kreg/report.hpp"

#include "kreg/parser.hpp"

namespace kreg {

using nlohmann::json;

namespace {

[[noreturn]] void syntax(const std::string& msg) { throw CaseFileError(CaseFileError::Kind::syntax, msg); }
[[noreturn]] void semantic(const std::string& msg) { throw CaseFileError(CaseFileError::Kind::semantic, msg); }

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) syntax(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) syntax(what + " must be an integer");
  return v.get<std::int64_t>();
}

const json& as_array(const json& v, const std::string& what) {
  if (!v.is_array()) syntax(what + " must be an array");
  return v;
}

Polynomial as_poly(const json& v, const Ring& ring, const std::string& what) {
  if (!v.is_string()) syntax(what + " must be a string");
  try {
    return parse_polynomial(v.get<std::string>(), ring);
  } catch (const ParseError& e) {
    syntax(what + ": " + e.what());
  }
}

}  // namespace

CaseFile parse_case_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    syntax(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) syntax("case file must be a JSON object");
  if (as_int(field(doc, "schema_version"), "schema_version") != kSchemaVersion)
    semantic("unsupported schema_version");

  const json& jring = field(doc, "ring");
  if (!jring.is_object()) syntax("ring must be an object");
  const std::int64_t ch = as_int(field(jring, "char"), "ring.char");
  std::vector<std::string> vars;
  for (const auto& v : as_array(field(jring, "vars"), "ring.vars")) {
    if (!v.is_string()) syntax("ring.vars entries must be strings");
    vars.push_back(v.get<std::string>());
  }
  if (ch <= 0 || ch > UINT32_MAX) semantic("ring.char out of range");
  Ring ring;
  try {
    ring = make_ring(static_cast<std::uint32_t>(ch), vars);
  } catch (const std::invalid_argument& e) {
    semantic(std::string("ring: ") + e.what());
  }

  std::vector<Polynomial> ideal;
  for (const auto& g : as_array(field(doc, "ideal"), "ideal")) ideal.push_back(as_poly(g, ring, "ideal entry"));

  std::optional<ModulePresentation> module;
  if (auto it = doc.find("module"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) syntax("module must be an object or null");
    GradedFreeModule F0;
    for (const auto& t : as_array(field(*it, "twists"), "module.twists"))
      F0.twists.push_back(static_cast<int>(as_int(t, "module.twists entry")));
    std::vector<FreeVector> rels;
    for (const auto& col : as_array(field(*it, "relations"), "module.relations")) {
      std::vector<Polynomial> comps;
      for (const auto& e : as_array(col, "module.relations column")) comps.push_back(as_poly(e, ring, "relation entry"));
      if (comps.size() != F0.rank()) semantic("relation column length differs from the number of twists");
      rels.push_back(FreeVector::from_components(ring, comps));
    }
    if (F0.is_zero()) semantic("module needs at least one generator");
    try {
      module = ModulePresentation::from_relations(ring, F0, rels);
    } catch (const std::invalid_argument& e) {
      semantic(std::string("module: ") + e.what());
    }
  }

  CaseFile out{TheoremCase{"", GeneratorList(ring, {}), std::move(module), {}}, std::nullopt, std::nullopt, std::nullopt};
  if (ideal.empty()) semantic("ideal needs at least one generator");
  try {
    out.theorem_case.generators = GeneratorList(ring, std::move(ideal));
  } catch (const std::invalid_argument& e) {
    semantic(std::string("ideal: ") + e.what());
  }

  if (auto it = doc.find("theorem"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) syntax("theorem must be a string or null");
    out.theorem = parse_bound_id(it->get<std::string>());
    if (!out.theorem) semantic("unknown theorem id \"" + it->get<std::string>() + "\"");
    out.theorem_case.theorems = {*out.theorem};
  }
  if (auto it = doc.find("options"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) syntax("options must be an object");
    if (auto d = it->find("dmax"); d != it->end() && !d->is_null()) out.d_max = static_cast<int>(as_int(*d, "options.dmax"));
    if (auto s = it->find("seed"); s != it->end() && !s->is_null()) {
      if (!s->is_number_unsigned()) syntax("options.seed must be a nonnegative integer");
      out.seed = s->get<std::uint64_t>();
    }
  }
  out.theorem_case.id = "input";
  return out;
}

json ring_json(const Ring& ring) { return {{"char", ring->characteristic()}, {"vars", ring->variables()}}; }

json module_json(const ModulePresentation& M) {
  json rels = json::array();
  for (const auto& col : M.relations.columns) {
    json c = json::array();
    for (std::size_t i = 0; i < M.generators.rank(); ++i) c.push_back(col.component(i).to_string());
    rels.push_back(std::move(c));
  }
  return {{"twists", M.generators.twists}, {"relations", std::move(rels)}};
}

json case_file_json(const TheoremCase& c, std::optional<BoundKind> theorem) {
  json ideal = json::array();
  for (const auto& g : c.generators.elements()) ideal.push_back(g.to_string());
  return {{"schema_version", kSchemaVersion},
          {"ring", ring_json(c.ring())},
          {"ideal", std::move(ideal)},
          {"module", c.module ? module_json(*c.module) : json(nullptr)},
          {"theorem", theorem ? json(std::string(bound_id(*theorem))) : json(nullptr)},
          {"options", {{"dmax", nullptr}, {"seed", nullptr}}}};
}

json betti_json(const BettiTable& B) {
  json entries = json::array();
  for (const auto& [ij, b] : B.entries) entries.push_back({ij.first, ij.second, b});
  return {{"entries", std::move(entries)}};
}

json hilbert_json(const HilbertFunction& hf) {
  return {{"d_min", hf.d_min}, {"d_max", hf.d_max()}, {"values", hf.values}};
}

json reg_json(std::optional<int> reg) { return reg ? json(*reg) : json("-inf"); }

json report_json(const BoundReport& rep, const TheoremCase& c) {
  json ideal = json::array();
  for (const auto& g : c.generators.elements()) ideal.push_back(g.to_string());
  const json module = uses_module(rep.kind) && c.module ? module_json(*c.module) : json("S");
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json slack = r.vacuous ? json("vacuous") : (r.slack ? json(*r.slack) : json(nullptr));
    rows.push_back({{"k", r.k},
                    {"reg", reg_json(r.reg)},
                    {"bound", r.bound ? json(*r.bound) : json(nullptr)},
                    {"slack", std::move(slack)},
                    {"vacuous", r.vacuous},
                    {"in_scope", r.in_scope},
                    {"oracle_match", r.oracle_match ? json(*r.oracle_match) : json(nullptr)}});
  }
  const auto& f = rep.flags;
  return {{"schema_version", kSchemaVersion},
          {"case_id", rep.case_id},
          {"ring", ring_json(c.ring())},
          {"ideal", std::move(ideal)},
          {"module", module},
          {"theorem", std::string(bound_id(rep.kind))},
          {"preconditions",
           {{"is_zero_dimensional", f.is_zero_dimensional},
            {"is_CM_ideal", f.is_CM_ideal},
            {"is_strongly_CM", f.is_strongly_CM},
            {"is_perfect_of_grade", f.is_perfect_of_grade},
            {"finite_colength", f.finite_colength}}},
          {"rows", std::move(rows)},
          {"oracle_window", {rep.oracle_d_min, rep.oracle_d_max}},
          {"duality_checked", rep.duality_checked ? json(*rep.duality_checked) : json(nullptr)},
          {"verdict", std::string(verdict_name(rep.verdict))}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace kreg
