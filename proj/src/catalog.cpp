#include <map>
#include <mutex>

#include <json.hpp>

#include "catalog_data.hpp"
#include "toricsys/surface.hpp"

namespace toricsys {

namespace {

std::string default_lattice(Int degree) {
  if (degree < 1 || degree > 9) throw DomainError("catalog degree out of range: " + std::to_string(degree));
  if (degree == 9) return "P2";
  return "Bl" + std::to_string(9 - degree);
}

std::vector<CatalogEntry> parse_catalog() {
  const auto doc = nlohmann::json::parse(kCatalogJson);
  if (!doc.is_array()) throw InternalError("catalog must be a JSON array");
  std::vector<CatalogEntry> out;
  for (const auto& row : doc) {
    CatalogEntry e;
    e.name = row.at("name").get<std::string>();
    e.degree = row.at("degree").get<Int>();
    e.lattice_id = row.contains("lattice") ? row["lattice"].get<std::string>() : default_lattice(e.degree);
    e.type = row.value("type", std::string{});
    if (row.contains("lines")) e.lines = row["lines"].get<int>();
    e.simple_roots = row.at("simple_roots").get<std::vector<std::vector<Int>>>();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = parse_catalog();
  return entries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.name);
  return names;
}

SurfacePtr catalog_surface(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, SurfacePtr> built;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = built.find(name); it != built.end()) return it->second;
  for (const auto& e : catalog_entries()) {
    if (e.name != name) continue;
    LatticePtr lat = lattice_by_id(e.lattice_id);
    if (lat->degree() != e.degree)
      throw InternalError("catalog entry " + name + " has degree " + std::to_string(e.degree) +
                          " but lattice " + e.lattice_id + " has degree " + std::to_string(lat->degree()));
    std::vector<DivisorClass> roots;
    for (const auto& c : e.simple_roots) roots.push_back(lat->make(c));
    SurfacePtr x = build_surface(lat, std::move(roots), name);
    if (x->dynkin_type() != e.type)
      throw InternalError("catalog entry " + name + " declares type '" + e.type + "' but its roots form '" +
                          x->dynkin_type() + "'");
    if (e.lines && static_cast<std::size_t>(*e.lines) != x->irreducible_minus1().size())
      throw InternalError("catalog entry " + name + " declares " + std::to_string(*e.lines) +
                          " lines but has " + std::to_string(x->irreducible_minus1().size()));
    built.emplace(name, x);
    return x;
  }
  throw DomainError("unknown catalog surface: " + name);
}

}  // namespace toricsys
