#include "toricsys/json_io.hpp"

#include <fstream>

namespace toricsys {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<Int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array of integers");
  std::vector<Int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw DomainError(std::string(what) + " must be an array of integers");
    out.push_back(v.get<Int>());
  }
  return out;
}

LatticePtr lattice_field(const Json& j) {
  const Json& id = field(j, "lattice");
  if (!id.is_string()) throw DomainError("\"lattice\" must be a string");
  return lattice_by_id(id.get<std::string>());
}

Json coords(const DivisorClass& d) {
  Json a = Json::array();
  for (std::size_t i = 0; i < d.rank(); ++i) a.push_back(d[i]);
  return a;
}

std::string to_string_or_inf(const std::optional<Int>& v) { return v ? std::to_string(*v) : "infinity"; }

}  // namespace

Json to_json(const DivisorClass& d) { return Json{{"lattice", d.lattice()->id()}, {"coords", coords(d)}}; }

DivisorClass divisor_from_json(const Json& j) {
  return lattice_field(j)->make(int_list(field(j, "coords"), "\"coords\""));
}

Json to_json(const ToricSystem& ts) {
  Json entries = Json::array();
  for (const auto& a : ts.entries()) entries.push_back(coords(a));
  return Json{{"lattice", ts.lattice()->id()}, {"entries", entries}};
}

ToricSystem toric_system_from_json(const Json& j) {
  const LatticePtr lattice = lattice_field(j);
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw DomainError("\"entries\" must be an array");
  std::vector<DivisorClass> out;
  for (const auto& e : entries) out.push_back(lattice->make(int_list(e, "an entry")));
  return ToricSystem(lattice, std::move(out));
}

Json to_json(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const auto& c : trace.steps) steps.push_back(to_json(c));
  return Json{{"start", to_json(trace.start)}, {"steps", steps}, {"result", to_json(trace.result)}};
}

ReductionTrace trace_from_json(const Json& j) {
  ReductionTrace t{divisor_from_json(field(j, "start")), {}, divisor_from_json(field(j, "result"))};
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) throw DomainError("\"steps\" must be an array");
  for (const auto& s : steps) t.steps.push_back(divisor_from_json(s));
  return t;
}

Json to_json(const ExceptionalityReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back(Json{{"property", property_name(w.property)},
                             {"segment", Json::array({w.segment.k, w.segment.l})},
                             {"reason", w.reason}});
  return Json{{"exceptional", r.exceptional},
              {"strong", r.strong},
              {"cyclic_strong", r.cyclic_strong},
              {"witnesses", witnesses},
              {"segments_examined", r.segments_examined},
              {"used_fast_path", r.used_fast_path}};
}

Json to_json(const EInvariant& e) {
  if (e.infinite) return "infinity";
  return e.value;
}

Json to_json(const ChainEvaluation& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms) terms.push_back(to_json(t));
  Json total = c.total ? Json(*c.total) : Json("infinity");
  return Json{{"indices", c.indices}, {"terms", terms}, {"total", total}};
}

Json to_json(const PseudoheightResult& r) {
  return Json{{"pseudoheight", r.value ? Json(*r.value) : Json(to_string_or_inf(r.value))},
              {"argmin", to_json(r.argmin)},
              {"chains", r.chains}};
}

Json to_json(const Sequence& s) { return Json(std::vector<Int>(s.begin(), s.end())); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

}  // namespace toricsys
