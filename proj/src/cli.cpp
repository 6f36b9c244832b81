#include "toricsys/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "toricsys/tables.hpp"

namespace toricsys::cli {

namespace {

// Aligned ASCII table.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_)
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], row[i].size());
      }
    auto line = [&](const std::vector<std::string>& row) {
      std::string s;
      for (std::size_t i = 0; i < row.size(); ++i) {
        s += row[i];
        if (i + 1 < row.size()) s += std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << s << '\n';
    };
    line(rows_.front());
    std::vector<std::string> rule;
    for (std::size_t w : width) rule.emplace_back(w, '-');
    line(rule);
    for (std::size_t i = 1; i < rows_.size(); ++i) line(rows_[i]);
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

// Arrays of objects render as "a:b, c:d" to keep text rows short.
std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array() || v.empty() || !v.front().is_object()) return v.dump();
  std::string s;
  for (const auto& obj : v) {
    std::string item;
    for (const auto& [k, x] : obj.items()) item += (item.empty() ? "" : ":") + (x.is_string() ? x.get<std::string>() : x.dump());
    s += (s.empty() ? "" : ", ") + item;
  }
  return s;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<DivisorClass>& v) {
  std::string s;
  for (const auto& d : v) s += (s.empty() ? "" : ", ") + d.to_string();
  return s.empty() ? "-" : s;
}

std::string indices(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Options {
  std::string format = "table";
  std::string lattice, surface, system, klass, table = "all", data_dir = default_data_dir();
  Int r = 0;
  bool count = false, all = false, no_p2 = false;
  int length = 0, p_min = 1;
  Int floor = 0;
  std::optional<Int> ceiling;
};

// Accepts a path as given, then relative to the bundled systems directory.
std::string resolve_system_path(const std::string& path, const std::string& data_dir) {
  if (std::filesystem::exists(path)) return path;
  const auto bundled = std::filesystem::path(data_dir) / "systems" / path;
  if (std::filesystem::exists(bundled)) return bundled.string();
  return path;
}

int cmd_classes(const Options& o, std::ostream& out) {
  const auto lattice = lattice_by_id(o.lattice);
  const auto classes = enumerate_r_classes(lattice, o.r);
  if (o.format == "json") {
    Json j{{"lattice", lattice->id()}, {"r", o.r}, {"count", classes.size()}};
    if (!o.count) {
      Json list = Json::array();
      for (const auto& d : classes) list.push_back(to_json(d));
      j["classes"] = list;
    }
    out << j.dump(2) << '\n';
  } else if (o.count) {
    out << classes.size() << '\n';
  } else {
    TextTable t({"class", "coords"});
    for (const auto& d : classes) t.add({d.to_string(), to_json(d).at("coords").dump()});
    t.print(out);
    out << classes.size() << " classes\n";
  }
  return kExitOk;
}

Json surface_json(const SurfaceModel& x) {
  auto list = [](const std::vector<DivisorClass>& v) {
    Json a = Json::array();
    for (const auto& d : v) a.push_back(to_json(d));
    return a;
  };
  return Json{{"name", x.name()},
              {"lattice", x.lattice()->id()},
              {"degree", x.degree()},
              {"type", x.dynkin_type()},
              {"simple_roots", list(x.simple_roots())},
              {"roots", x.root_system().size()},
              {"effective_roots", x.effective_roots().size()},
              {"minus_one_classes", x.minus_one_classes().size()},
              {"lines", list(x.irreducible_minus1())},
              {"ample_probe", to_json(x.ample_probe())}};
}

int cmd_surface_info(const Options& o, std::ostream& out) {
  std::vector<SurfacePtr> surfaces;
  if (o.all) {
    for (const auto& name : catalog_names()) surfaces.push_back(catalog_surface(name));
  } else {
    surfaces.push_back(catalog_surface(o.surface));
  }
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto& x : surfaces) a.push_back(surface_json(*x));
    out << (o.all ? a : a.front()).dump(2) << '\n';
    return kExitOk;
  }
  if (o.all) {
    TextTable t({"name", "lattice", "degree", "type", "roots", "effective", "lines"});
    for (const auto& x : surfaces)
      t.add({x->name(), x->lattice()->id(), std::to_string(x->degree()), x->dynkin_type().empty() ? "-" : x->dynkin_type(),
             std::to_string(x->root_system().size()), std::to_string(x->effective_roots().size()),
             std::to_string(x->irreducible_minus1().size())});
    t.print(out);
    return kExitOk;
  }
  const SurfaceModel& x = *surfaces.front();
  TextTable t({"field", "value"});
  t.add({"name", x.name()});
  t.add({"lattice", x.lattice()->id()});
  t.add({"degree", std::to_string(x.degree())});
  t.add({"type", x.dynkin_type().empty() ? "-" : x.dynkin_type()});
  t.add({"simple roots", join(x.simple_roots())});
  t.add({"roots", std::to_string(x.root_system().size())});
  t.add({"effective roots", std::to_string(x.effective_roots().size())});
  t.add({"(-1)-classes", std::to_string(x.minus_one_classes().size())});
  t.add({"lines", std::to_string(x.irreducible_minus1().size())});
  t.add({"ample probe", x.ample_probe().to_string()});
  t.print(out);
  return kExitOk;
}

int cmd_check_system(const Options& o, std::ostream& out) {
  const SurfacePtr x = catalog_surface(o.surface);
  const ToricSystem ts = toric_system_from_json(read_json_file(resolve_system_path(o.system, o.data_dir)));
  if (ts.lattice()->id() != x->lattice()->id())
    throw DomainError("system lives on " + ts.lattice()->id() + " but " + x->name() + " on " + x->lattice()->id());
  const ValidationResult v = validate(ts);
  if (!v.valid) {
    if (o.format == "json") {
      out << Json{{"valid", false}, {"problems", v.problems}}.dump(2) << '\n';
    } else {
      out << "invalid toric system\n";
      for (const auto& p : v.problems) out << "  " << p << '\n';
    }
    return kExitFailed;
  }
  const ExceptionalityReport r = exceptionality_fast(*x, ts);
  const bool bounds = check_segment_bounds(ts, x->degree());
  if (o.format == "json") {
    Json j{{"surface", x->name()}, {"system", to_json(ts)}, {"valid", true},
           {"self_intersections", to_json(self_intersections(ts))}, {"segment_bounds", bounds}};
    const Json report = to_json(r);
    for (const auto& [k, val] : report.items()) j[k] = val;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  TextTable t({"property", "value"});
  t.add({"surface", x->name()});
  t.add({"self-intersections", to_string(self_intersections(ts))});
  t.add({"exceptional", yes_no(r.exceptional)});
  t.add({"strong", yes_no(r.strong)});
  t.add({"cyclic_strong", yes_no(r.cyclic_strong)});
  t.add({"segment bounds", yes_no(bounds)});
  t.add({"segments examined", std::to_string(r.segments_examined)});
  t.add({"fast path", yes_no(r.used_fast_path)});
  t.print(out);
  for (const auto& w : r.witnesses)
    out << "witness " << property_name(w.property) << " [" << w.segment.k << ".." << w.segment.l << "]: " << w.reason
        << '\n';
  return kExitOk;
}

int cmd_classify_admissible(const Options& o, std::ostream& out) {
  if (o.length < 3) throw DomainError("--length must be at least 3");
  if (o.ceiling && *o.ceiling < o.floor) throw DomainError("--ceiling is below --floor");
  const AdmissibleOptions opts{!o.no_p2};
  const auto seqs = generate_admissible(o.length, o.floor, o.ceiling, opts);
  Json rows = Json::array();
  TextTable t({"sequence", "cyclic_strong", "families"});
  for (const auto& s : seqs) {
    const bool cs = std::all_of(s.begin(), s.end(), [](Int a) { return a >= -2; });
    std::vector<std::string> families;
    for (const auto& orient : strong_not_cyclic_orientations(s))
      if (auto tag = matches_strong_family(orient)) families.push_back(*tag);
    std::sort(families.begin(), families.end());
    families.erase(std::unique(families.begin(), families.end()), families.end());
    rows.push_back(Json{{"sequence", to_json(s)}, {"cyclic_strong", cs}, {"strong_families", families}});
    std::string fam;
    for (const auto& f : families) fam += (fam.empty() ? "" : ",") + f;
    t.add({to_string(s), yes_no(cs), fam.empty() ? "-" : fam});
  }
  if (o.format == "json") {
    Json j{{"length", o.length}, {"floor", o.floor}, {"ceiling", o.ceiling ? Json(*o.ceiling) : Json(nullptr)},
           {"p2_base", !o.no_p2}, {"count", seqs.size()}, {"sequences", rows}};
    out << j.dump(2) << '\n';
  } else {
    t.print(out);
    out << seqs.size() << " sequences\n";
  }
  return kExitOk;
}

int cmd_pseudoheight(const Options& o, std::ostream& out) {
  const SurfacePtr x = catalog_surface(o.surface);
  const ToricSystem ts = toric_system_from_json(read_json_file(resolve_system_path(o.system, o.data_dir)));
  const ValidationResult v = validate(ts);
  if (!v.valid) throw DomainError("not a toric system: " + v.problems.front());
  if (ts.lattice()->id() != x->lattice()->id()) throw DomainError("system and surface live on different lattices");
  const PseudoheightResult r = pseudoheight(*x, ts, o.p_min);
  const Fullness f = (r.value && *r.value <= -2) ? Fullness::PossiblyFull : Fullness::NotFull;
  if (o.format == "json") {
    Json j = to_json(r);
    j["p_min"] = o.p_min;
    j["fullness"] = fullness_name(f);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << (r.value ? std::to_string(*r.value) : "infinity") << '\n';
  TextTable t({"chain", "terms", "total"});
  std::string terms;
  for (const auto& e : r.argmin.terms) terms += (terms.empty() ? "" : ",") + e.to_string();
  t.add({indices(r.argmin.indices), terms, r.argmin.total ? std::to_string(*r.argmin.total) : "infinity"});
  t.print(out);
  out << "chains " << r.chains << ", " << fullness_name(f) << '\n';
  return kExitOk;
}

int cmd_reduce_torsion(const Options& o, std::ostream& out) {
  const SurfacePtr x = catalog_surface(o.surface);
  Json j;
  const bool inline_json = o.klass.find_first_not_of(" \t") != std::string::npos &&
                           o.klass[o.klass.find_first_not_of(" \t")] == '{';
  if (inline_json) {
    try {
      j = Json::parse(o.klass);
    } catch (const Json::parse_error& e) {
      throw DomainError(std::string("--class: ") + e.what());
    }
  } else {
    j = read_json_file(o.klass);
  }
  const ReductionTrace t = reduce(*x, divisor_from_json(j));
  if (o.format == "json") {
    out << to_json(t).dump(2) << '\n';
    return kExitOk;
  }
  TextTable tab({"step", "curve", "class"});
  DivisorClass cur = t.start;
  tab.add({"0", "-", cur.to_string()});
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    cur = cur - t.steps[i];
    tab.add({std::to_string(i + 1), t.steps[i].to_string(), cur.to_string()});
  }
  tab.print(out);
  return kExitOk;
}

int cmd_verify_tables(const Options& o, std::ostream& out) {
  std::vector<std::string> ids;
  if (o.table == "all") ids = table_ids();
  else ids.push_back(o.table);
  std::vector<TableReport> reports;
  for (const auto& id : ids) reports.push_back(verify_table(id, o.data_dir));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const TableReport& r) { return r.passed; });
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto& r : reports) a.push_back(to_json(r));
    out << (ids.size() == 1 ? a.front() : a).dump(2) << '\n';
    return ok ? kExitOk : kExitFailed;
  }
  for (const auto& r : reports) {
    out << r.table_id << ": " << (r.passed ? "pass" : "fail") << '\n';
    if (!r.rows.empty()) {
      std::vector<std::string> header;
      for (auto& [k, v] : r.rows.front().items()) header.push_back(k);
      TextTable t(header);
      for (const auto& row : r.rows) {
        std::vector<std::string> cells;
        for (const auto& k : header) {
          const Json& v = row.contains(k) ? row.at(k) : Json("");
          cells.push_back(cell(v));
        }
        t.add(cells);
      }
      t.print(out);
    }
    for (const auto& d : r.diffs) out << "  expected " << d.expected << ", got " << d.actual << '\n';
    out << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor-lattice combinatorics of exceptional collections on rational surfaces", "toricsys"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--data-dir", o.data_dir, "Directory holding golden tables and bundled systems");

  auto* classes = app.add_subcommand("classes", "Enumerate r-classes of a lattice");
  classes->add_option("--lattice", o.lattice, "P2, Bl1..Bl8, F0 or F2")->required();
  classes->add_option("--r", o.r, "Self-intersection r")->required();
  classes->add_flag("--count", o.count, "Print only the number of classes");

  auto* info = app.add_subcommand("surface-info", "Describe a catalog surface");
  auto* surf_opt = info->add_option("--surface", o.surface, "Catalog name");
  auto* all_opt = info->add_flag("--all", o.all, "Summarize the whole catalog");
  surf_opt->excludes(all_opt);
  info->require_option(1);

  auto* check = app.add_subcommand("check-system", "Exceptionality report of a toric system");
  check->add_option("--surface", o.surface, "Catalog name")->required();
  check->add_option("--system", o.system, "Toric system JSON file")->required();

  auto* classify = app.add_subcommand("classify-admissible", "Admissible sequences up to dihedral symmetry");
  classify->add_option("--length", o.length, "Sequence length")->required();
  classify->add_option("--floor", o.floor, "Least allowed entry")->required();
  classify->add_option("--ceiling", o.ceiling, "Largest allowed entry");
  classify->add_flag("--no-p2-base", o.no_p2, "Do not admit (1,1,1) as a base");

  auto* ph = app.add_subcommand("pseudoheight", "Anticanonical pseudoheight of a toric system");
  ph->add_option("--surface", o.surface, "Catalog name")->required();
  ph->add_option("--system", o.system, "Toric system JSON file")->required();
  ph->add_option("--p-min", o.p_min, "Shortest chain length minus one")->check(CLI::IsMember({0, 1}));

  auto* red = app.add_subcommand("reduce-torsion", "Reduce a (-1)-class to a (-1)-curve by twists");
  red->add_option("--surface", o.surface, "Catalog name")->required();
  red->add_option("--class", o.klass, "Divisor class as inline JSON or a JSON file")->required();

  auto* verify = app.add_subcommand("verify-tables", "Recompute reference tables and diff them");
  std::vector<std::string> table_choices = table_ids();
  table_choices.push_back("all");
  verify->add_option("--table", o.table, "Table id or all")->check(CLI::IsMember(table_choices));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classes) return cmd_classes(o, out);
    if (*info) return cmd_surface_info(o, out);
    if (*check) return cmd_check_system(o, out);
    if (*classify) return cmd_classify_admissible(o, out);
    if (*ph) return cmd_pseudoheight(o, out);
    if (*red) return cmd_reduce_torsion(o, out);
    return cmd_verify_tables(o, out);
  } catch (const MissingGolden& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace toricsys::cli
