#include "toricsys/tables.hpp"

#include <filesystem>
#include <map>
#include <set>

namespace toricsys {

namespace {

struct Golden {
  const char* id;
  const char* file;
};

constexpr Golden kGoldens[] = {
    {"root-counts", "root_counts.json"},
    {"cyclic-strong-admissible", "cyclic_strong_admissible.json"},
    {"strong-not-cyclic", "strong_not_cyclic.json"},
    {"length-le5", "length_le5.json"},
    {"degree-systems", "degree_systems.json"},
    {"del-pezzo-systems", "del_pezzo_systems.json"},
};

Json load_golden(const std::string& data_dir, const char* file) {
  const std::filesystem::path path = std::filesystem::path(data_dir) / file;
  if (!std::filesystem::exists(path)) throw MissingGolden("golden file not found: " + path.string());
  try {
    return read_json_file(path.string());
  } catch (const DomainError& e) {
    throw MissingGolden(e.what());
  }
}

Sequence sequence_of(const Json& j) { return j.get<std::vector<Int>>(); }

ToricSystem system_of(const Json& row) { return toric_system_from_json(row); }

class Differ {
 public:
  explicit Differ(TableReport& r) : r_(r) {}
  void expect(bool ok, std::string expected, std::string actual) {
    if (!ok) r_.diffs.push_back({std::move(expected), std::move(actual)});
  }

 private:
  TableReport& r_;
};

void root_counts(const Json& g, TableReport& r) {
  Differ diff(r);
  for (const auto& row : g.at("rows")) {
    const auto lattice = lattice_by_id(row.at("lattice").get<std::string>());
    const std::size_t roots = enumerate_r_classes(lattice, -2).size();
    const std::size_t lines = enumerate_r_classes(lattice, -1).size();
    const std::string tag = "degree " + std::to_string(lattice->degree());
    diff.expect(lattice->degree() == row.at("degree").get<Int>(), tag, "lattice " + lattice->id() + " has another degree");
    diff.expect(roots == row.at("roots").get<std::size_t>(), tag + ": " + row.at("roots").dump() + " roots",
                std::to_string(roots) + " roots");
    diff.expect(lines == row.at("minus_one_classes").get<std::size_t>(),
                tag + ": " + row.at("minus_one_classes").dump() + " (-1)-classes", std::to_string(lines) + " (-1)-classes");
    r.rows.push_back(Json{{"degree", lattice->degree()}, {"lattice", lattice->id()}, {"roots", roots}, {"minus_one_classes", lines}});
  }
}

void cyclic_strong_admissible(const Json& g, TableReport& r) {
  Differ diff(r);
  const CyclicStrongClassification c = classify_cyclic_strong();
  std::map<Sequence, std::string> golden;
  for (const auto& row : g.at("rows")) {
    const Sequence s = sequence_of(row.at("sequence"));
    const std::string label = row.at("label").get<std::string>();
    diff.expect(is_admissible(s), label + " " + to_string(s) + " admissible", "not admissible");
    golden[canonical_form(s)] = label;
  }
  const std::set<Sequence> found(c.rows.begin(), c.rows.end());
  for (const auto& [s, label] : golden)
    diff.expect(found.count(s) > 0, label + " " + to_string(s), "missing");
  for (const auto& s : c.rows) {
    auto it = golden.find(s);
    diff.expect(it != golden.end(), "no row", to_string(s));
    r.rows.push_back(Json{{"label", it == golden.end() ? "?" : it->second}, {"sequence", to_json(s)}});
  }
  if (g.contains("p2_row")) {
    const Sequence p2 = canonical_form(sequence_of(g.at("p2_row").at("sequence")));
    diff.expect(c.p2_row && *c.p2_row == p2, to_string(p2), c.p2_row ? to_string(*c.p2_row) : "missing");
    if (c.p2_row) r.rows.push_back(Json{{"label", g.at("p2_row").at("label")}, {"sequence", to_json(*c.p2_row)}});
  }
  diff.expect(c.count_without_p2() == golden.size(), std::to_string(golden.size()) + " rows",
              std::to_string(c.count_without_p2()) + " rows");
}

void strong_not_cyclic(const Json& g, TableReport& r) {
  Differ diff(r);
  const int max_length = g.at("max_length").get<int>();
  const Int ceiling = g.at("entry_ceiling").get<Int>();
  std::map<std::string, std::size_t> counts;
  for (const auto& f : g.at("families")) counts[f.get<std::string>()] = 0;

  for (const auto& sample : g.at("samples")) {
    const Sequence s = sequence_of(sample.at("sequence"));
    const std::string family = sample.at("family").get<std::string>();
    diff.expect(is_admissible(s), family + " sample " + to_string(s) + " admissible", "not admissible");
    std::optional<std::string> tag;
    try {
      tag = matches_strong_family(s);
    } catch (const DomainError&) {
      diff.expect(false, family + " sample " + to_string(s) + " strong and not cyclic strong", "precondition fails");
      continue;
    }
    diff.expect(tag == family, family + " sample " + to_string(s), tag ? "matches " + *tag : "matches nothing");
  }

  std::size_t orientations = 0;
  for (int n = 4; n <= max_length; ++n) {
    // n - 1 entries are >= -2 and the sum is 12 - 3n, which bounds the last one.
    const Int floor = 12 - 3 * static_cast<Int>(n) - static_cast<Int>(n - 1) * ceiling;
    for (const auto& s : generate_admissible(n, floor, ceiling)) {
      for (const auto& o : strong_not_cyclic_orientations(s)) {
        ++orientations;
        const auto tag = matches_strong_family(o);
        diff.expect(tag.has_value(), "a family for " + to_string(o), "none");
        if (tag) ++counts[*tag];
      }
    }
  }
  for (const auto& [family, count] : counts) {
    diff.expect(count > 0, family + " occurs", "no member found");
    r.rows.push_back(Json{{"family", family}, {"orientations", count}});
  }
  r.rows.push_back(Json{{"family", "total"}, {"orientations", orientations}});
}

void length_le5(const Json& g, TableReport& r) {
  Differ diff(r);
  const Le5Classification c = classify_length_le5(g.at("bound").get<Int>());
  const std::set<Sequence> found(c.enumerated.begin(), c.enumerated.end());
  const std::set<Sequence> expected(c.expected.begin(), c.expected.end());
  for (const auto& s : expected) diff.expect(found.count(s) > 0, to_string(s), "missing");
  for (const auto& s : found) diff.expect(expected.count(s) > 0, "no family member", to_string(s));
  for (const auto& row : g.at("rows")) {
    const Sequence s = canonical_form(sequence_of(row.at("sequence")));
    diff.expect(found.count(s) > 0, row.at("family").get<std::string>() + " " + to_string(s), "not enumerated");
  }
  diff.expect(c.matches, "classification matches", "mismatch");
  for (const auto& row : c.rows)
    r.rows.push_back(Json{{"family", row.family}, {"param", row.param}, {"sequence", to_json(row.sequence)}});
}

// Cyclic strong by both checkers, with matching flags.
void expect_cyclic_strong(Differ& diff, const SurfaceModel& x, const ToricSystem& ts, const std::string& tag) {
  const auto naive = exceptionality_naive(x, ts);
  const auto fast = exceptionality_fast(x, ts);
  diff.expect(naive.cyclic_strong, tag + " cyclic strong on " + x.name(), "not cyclic strong");
  diff.expect(naive.exceptional == fast.exceptional && naive.strong == fast.strong &&
                  naive.cyclic_strong == fast.cyclic_strong,
              tag + " fast check agrees on " + x.name(), "fast check disagrees");
}

void degree_systems(const Json& g, TableReport& r) {
  Differ diff(r);
  for (const auto& row : g.at("rows")) {
    const std::string tag = "degree " + row.at("label").get<std::string>();
    const ToricSystem ts = system_of(row);
    const auto v = validate(ts);
    diff.expect(v.valid, tag + " valid", v.problems.empty() ? "invalid" : v.problems.front());
    if (!v.valid) continue;
    diff.expect(generates_picard(ts), tag + " generates the lattice", "does not");
    diff.expect(is_admissible(self_intersections(ts)), tag + " squares admissible", to_string(self_intersections(ts)));
    const bool bounds = check_segment_bounds(ts, ts.lattice()->degree());
    diff.expect(bounds, tag + " segment squares in [-2, d-2]", "out of range");
    Json surfaces = Json::array();
    for (const auto& name : row.at("surfaces")) {
      const SurfacePtr x = catalog_surface(name.get<std::string>());
      diff.expect(x->lattice()->id() == ts.lattice()->id(), tag + " lattice " + ts.lattice()->id(),
                  x->name() + " lives on " + x->lattice()->id());
      if (x->lattice()->id() != ts.lattice()->id()) continue;
      expect_cyclic_strong(diff, *x, ts, tag);
      const auto ph = pseudoheight(*x, ts);
      diff.expect(ph.value && *ph.value <= -2, tag + " pseudoheight <= -2 on " + x->name(),
                  ph.value ? std::to_string(*ph.value) : "infinity");
      surfaces.push_back(Json{{"surface", x->name()}, {"pseudoheight", ph.value ? Json(*ph.value) : Json("infinity")}});
    }
    r.rows.push_back(Json{{"label", row.at("label")}, {"lattice", ts.lattice()->id()}, {"valid", v.valid},
                          {"segment_bounds", bounds}, {"surfaces", surfaces}});
  }
}

void del_pezzo_systems(const Json& g, TableReport& r) {
  Differ diff(r);
  for (const auto& row : g.at("rows")) {
    const std::string tag = "r = " + row.at("r").dump();
    const ToricSystem ts = system_of(row);
    const auto v = validate(ts);
    diff.expect(v.valid, tag + " valid", v.problems.empty() ? "invalid" : v.problems.front());
    if (!v.valid) continue;
    const auto squares = self_intersections(ts);
    bool ok = true;
    for (Int s : squares) ok = ok && s >= -2;
    diff.expect(ok, tag + " squares >= -2", to_string(squares));
    const SurfacePtr x = catalog_surface(row.at("surface").get<std::string>());
    diff.expect(x->simple_roots().empty(), tag + " on a del Pezzo surface", x->name() + " has (-2)-curves");
    expect_cyclic_strong(diff, *x, ts, tag);
    r.rows.push_back(Json{{"r", row.at("r")}, {"surface", x->name()}, {"squares", to_json(squares)}, {"valid", v.valid}});
  }
  if (g.contains("collection")) {
    const Json& c = g.at("collection");
    const auto lattice = lattice_by_id(c.at("lattice").get<std::string>());
    std::vector<DivisorClass> members;
    for (const auto& m : c.at("members")) members.push_back(lattice->make(m.get<std::vector<Int>>()));
    const ToricSystem got = from_collection(members);
    const ToricSystem want = system_of(Json{{"lattice", lattice->id()}, {"entries", c.at("expected_entries")}});
    diff.expect(got == want, "collection differences " + to_json(want).dump(), to_json(got).dump());
  }
}

}  // namespace

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& g : kGoldens) out.emplace_back(g.id);
    return out;
  }();
  return ids;
}

std::string default_data_dir() { return TORICSYS_DATA_DIR; }

TableReport verify_table(const std::string& table_id, const std::string& data_dir) {
  const Golden* golden = nullptr;
  for (const auto& g : kGoldens)
    if (table_id == g.id) golden = &g;
  if (!golden) throw DomainError("unknown table \"" + table_id + "\"");
  const Json g = load_golden(data_dir, golden->file);
  TableReport r;
  r.table_id = table_id;
  try {
    if (table_id == "root-counts") root_counts(g, r);
    else if (table_id == "cyclic-strong-admissible") cyclic_strong_admissible(g, r);
    else if (table_id == "strong-not-cyclic") strong_not_cyclic(g, r);
    else if (table_id == "length-le5") length_le5(g, r);
    else if (table_id == "degree-systems") degree_systems(g, r);
    else del_pezzo_systems(g, r);
  } catch (const Json::exception& e) {
    throw MissingGolden(std::string(golden->file) + " is malformed: " + e.what());
  }
  r.passed = r.diffs.empty();
  return r;
}

Json to_json(const TableReport& r) {
  Json diffs = Json::array();
  for (const auto& d : r.diffs) diffs.push_back(Json{{"expected", d.expected}, {"actual", d.actual}});
  return Json{{"table", r.table_id}, {"status", r.passed ? "pass" : "fail"}, {"diffs", diffs}, {"rows", r.rows}};
}

}  // namespace toricsys
