#include "sbp/json_io.hpp"

#include <fstream>
#include <sstream>

namespace sbp {

using nlohmann::json;

namespace {

json int_rows(const std::vector<std::vector<int>>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

std::vector<std::vector<int>> rows_from(const json& j, const char* what) {
  if (!j.is_array())
    throw Error(ErrorCode::ParseError,
                std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array())
      throw Error(ErrorCode::ParseError,
                  std::string(what) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw Error(ErrorCode::ParseError,
                    std::string(what) + " entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<int> ints_from(const json& j, const char* what) {
  if (!j.is_array())
    throw Error(ErrorCode::ParseError,
                std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw Error(ErrorCode::ParseError,
                  std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::ParseError,
                std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json monoid_to_json(const MonoidTable& m) {
  json out;
  out["table"] = int_rows(m.rows());
  if (m.has_labels()) out["labels"] = m.labels();
  return out;
}

MonoidTable monoid_from_json(const json& j, const Registry& reg) {
  if (j.is_string()) return reg.get(j.get<std::string>());
  if (!j.is_object())
    throw Error(ErrorCode::ParseError,
                "monoid must be a registry name or an object with a table");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& ls = j.at("labels");
    if (!ls.is_array())
      throw Error(ErrorCode::ParseError, "labels must be an array");
    for (const auto& l : ls) {
      if (!l.is_string())
        throw Error(ErrorCode::ParseError, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return make_monoid(rows_from(field(j, "table"), "table"),
                     std::move(labels));
}

json map_to_json(const PointedMap& f, const Registry& reg) {
  json out;
  const auto name_or_doc = [&reg](const MonoidTable& m) -> json {
    if (auto n = reg.name_of(m)) return *n;
    return monoid_to_json(m);
  };
  out["dom"] = name_or_doc(f.dom());
  out["cod"] = name_or_doc(f.cod());
  out["values"] = f.values();
  return out;
}

PointedMap map_from_json(const json& j, const Registry& reg) {
  MonoidTable dom = monoid_from_json(field(j, "dom"), reg);
  MonoidTable cod = monoid_from_json(field(j, "cod"), reg);
  return PointedMap(std::move(dom), std::move(cod),
                    ints_from(field(j, "values"), "values"));
}

Homomorphism hom_from_json(const json& j, const Registry& reg) {
  return Homomorphism(map_from_json(j, reg));
}

json semibiproduct_to_json(const Semibiproduct& S) {
  json out;
  out["X"] = monoid_to_json(S.X());
  out["A"] = monoid_to_json(S.A());
  out["B"] = monoid_to_json(S.B());
  out["p"] = S.p().values();
  out["k"] = S.k().values();
  out["q"] = S.q().values();
  out["s"] = S.s().values();
  return out;
}

Semibiproduct semibiproduct_from_json(const json& j, const Registry& reg) {
  MonoidTable X = monoid_from_json(field(j, "X"), reg);
  MonoidTable A = monoid_from_json(field(j, "A"), reg);
  MonoidTable B = monoid_from_json(field(j, "B"), reg);
  Homomorphism p(A, B, ints_from(field(j, "p"), "p"));
  Homomorphism k(X, A, ints_from(field(j, "k"), "k"));
  PointedMap q(A, X, ints_from(field(j, "q"), "q"));
  PointedMap s(B, A, ints_from(field(j, "s"), "s"));
  return Semibiproduct(std::move(X), std::move(A), std::move(B), std::move(p),
                       std::move(k), std::move(q), std::move(s));
}

json action_system_to_json(const ActionSystem& T) {
  json out;
  out["X"] = monoid_to_json(T.X());
  out["B"] = monoid_to_json(T.B());
  out["rho"] = int_rows(T.rho_rows());
  out["phi"] = int_rows(T.phi_rows());
  out["gamma"] = int_rows(T.gamma_rows());
  return out;
}

ActionSystem action_system_from_json(const json& j, const Registry& reg) {
  MonoidTable X = monoid_from_json(field(j, "X"), reg);
  MonoidTable B = monoid_from_json(field(j, "B"), reg);
  return ActionSystem(std::move(X), std::move(B),
                      rows_from(field(j, "rho"), "rho"),
                      rows_from(field(j, "phi"), "phi"),
                      rows_from(field(j, "gamma"), "gamma"));
}

json report_to_json(const VerificationReport& r) {
  json out;
  out["passed"] = r.passed();
  json vs = json::array();
  for (const auto& v : r.violations()) {
    json w = json::object();
    for (const auto& [name, value] : v.witness) w[name] = value;
    vs.push_back(json{{"law", v.law}, {"witness", w}});
  }
  out["violations"] = vs;
  return out;
}

json error_to_json(const Error& e) {
  json details = json::object();
  for (const auto& [name, value] : e.details()) details[name] = value;
  return json{{"error",
               {{"code", to_string(e.code())},
                {"message", e.what()},
                {"details", details}}}};
}

json obstruction_to_json(const CompositionObstruction& o) {
  return json{{"composable", false},
              {"obstruction",
               {{"b", o.b}, {"expected", o.expected}, {"actual", o.actual}}}};
}

json census_entry_to_json(const CensusEntry& e, int item,
                          const Registry& reg) {
  const auto name_or_doc = [&reg](const MonoidTable& m) -> json {
    if (auto n = reg.name_of(m)) return *n;
    return monoid_to_json(m);
  };
  json out;
  out["item"] = item;
  out["X"] = name_or_doc(e.system.X());
  out["B"] = name_or_doc(e.system.B());
  out["rho"] = int_rows(e.system.rho_rows());
  out["phi"] = int_rows(e.system.phi_rows());
  out["gamma"] = int_rows(e.system.gamma_rows());
  json tags = json::array();
  for (Tag t : e.tags) tags.push_back(to_string(t));
  out["tags"] = tags;
  out["realization_size"] = e.realization_size;
  return out;
}

void seed_registry(Registry& reg, const json& j) {
  if (!j.is_object())
    throw Error(ErrorCode::ParseError,
                "registry seed must be an object of name -> monoid");
  for (const auto& [name, doc] : j.items())
    reg.add(name, monoid_from_json(doc, reg));
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

std::string jsonl_dump(const json& j) { return j.dump() + "\n"; }

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorCode::ParseError, "input is not valid JSON");
  return j;
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace sbp
