#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "toricsys/admissible.hpp"
#include "toricsys/json_io.hpp"
#include "toricsys/tables.hpp"
#include "toricsys/toric.hpp"

using namespace toricsys;

namespace {

ToricSystem make(const std::string& id, std::vector<std::vector<Int>> entries) {
  const auto lat = lattice_by_id(id);
  std::vector<DivisorClass> out;
  for (auto& e : entries) out.push_back(lat->make(std::move(e)));
  return ToricSystem(lat, std::move(out));
}

ToricSystem lll() { return make("P2", {{1}, {1}, {1}}); }

// (L-E12, E2, L-E23, E3, L-E13, E1)
ToricSystem hexagon() {
  return make("Bl3", {{1, -1, -1, 0}, {0, 0, 1, 0}, {1, 0, -1, -1}, {0, 0, 0, 1}, {1, -1, 0, -1}, {0, 1, 0, 0}});
}

std::vector<std::pair<ToricSystem, std::vector<std::string>>> reference_systems() {
  const Json g = read_json_file(default_data_dir() + "/degree_systems.json");
  std::vector<std::pair<ToricSystem, std::vector<std::string>>> out;
  for (const auto& row : g.at("rows")) out.emplace_back(toric_system_from_json(row), row.at("surfaces").get<std::vector<std::string>>());
  return out;
}

bool same_flags(const ExceptionalityReport& a, const ExceptionalityReport& b) {
  return a.exceptional == b.exceptional && a.strong == b.strong && a.cyclic_strong == b.cyclic_strong;
}

// Direct check of the three axioms.
bool axioms_hold(const ToricSystem& ts) {
  const int n = ts.size();
  DivisorClass sum = ts.lattice()->zero();
  for (int i = 1; i <= n; ++i) {
    sum = sum + ts.at(i);
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const bool adjacent = (j - i + n) % n == 1 || (i - j + n) % n == 1;
      if (oracle::dot(ts.lattice(), ts.at(i).coords(), ts.at(j).coords()) != (adjacent ? 1 : 0)) return false;
    }
  }
  return static_cast<std::size_t>(n) == ts.lattice()->rank() + 2 && sum == -ts.lattice()->canonical();
}

}  // namespace

TEST_CASE("collections and toric systems") {
  const auto p2 = lattice_by_id("P2");
  CHECK(from_collection({p2->make({0}), p2->make({1}), p2->make({2})}) == lll());
  CHECK(to_collection(lll(), p2->zero()) == std::vector<DivisorClass>{p2->make({0}), p2->make({1}), p2->make({2})});
  CHECK_FALSE(validate(from_collection({p2->zero(), p2->zero(), p2->zero()})).valid);
  const auto b1 = lattice_by_id("Bl1");
  CHECK(from_collection({b1->make({0, 1}), b1->make({1, 0}), b1->make({1, 1}), b1->make({2, 0})}) ==
        make("Bl1", {{1, -1}, {0, 1}, {1, -1}, {1, 0}}));
  CHECK_THROWS_AS(from_collection({p2->zero(), p2->zero()}), DomainError);
  const auto shifted = to_collection(lll(), p2->make({5}));
  CHECK(shifted.front() == p2->make({5}));
  CHECK(shifted.back() == p2->make({7}));
}

TEST_CASE("validation") {
  CHECK(validate(hexagon()).valid);
  CHECK(validate(cyclic_shift(hexagon())).valid);
  const auto bad = validate(make("P2", {{1}, {1}, {2}}));
  CHECK_FALSE(bad.valid);
  CHECK(bad.problems.size() >= 2);
  CHECK_FALSE(validate(make("Bl1", {{1, 0}, {1, 0}, {1, 0}})).valid);
}

TEST_CASE("segment sums") {
  CHECK(segment_sum(lll(), 1, 3, true) == -lattice_by_id("P2")->canonical());
  CHECK(segment_sum(hexagon(), 4, 4) == hexagon().at(4));
  CHECK(segment_sum(lll(), 1, 2) == lattice_by_id("P2")->make({2}));
  CHECK(segment_sum(hexagon(), 6, 1) == hexagon().at(6) + hexagon().at(1));
  CHECK_THROWS_AS(segment_sum(lll(), 2, 1), DomainError);
  CHECK(proper_segments(4).size() == 12);
  CHECK(proper_segments(3).front() == Segment{1, 1});
}

TEST_CASE("exceptionality examples") {
  const auto p2 = catalog_surface("P2");
  const auto r = exceptionality_naive(*p2, lll());
  CHECK(r.exceptional);
  CHECK(r.strong);
  CHECK(r.cyclic_strong);

  const auto dp6 = catalog_surface("dP6");
  const auto fast = exceptionality_fast(*dp6, hexagon());
  CHECK(fast.cyclic_strong);
  CHECK(fast.used_fast_path);
  CHECK(fast.segments_examined == 0);
  CHECK(same_flags(fast, exceptionality_naive(*dp6, hexagon())));
}

TEST_CASE("an effective (-2)-segment breaks strong exceptionality") {
  // Reflect and rotate reference systems on Bl4 until some non-wrapping
  // segment equals the simple root of X5_A1.
  const auto x = catalog_surface("X5_A1");
  const auto root = x->simple_roots().front();
  bool found = false;
  for (const auto& [ts, names] : reference_systems()) {
    if (ts.lattice()->id() != "Bl4") continue;
    for (int k = 0; k < ts.size() && !found; ++k) {
      for (const auto& w : x->root_system()) {
        const ToricSystem t = cyclic_shift(reflect(ts, w), k);
        bool has_root_segment = false;
        for (const auto& s : proper_segments(t.size()))
          if (!wraps(s) && s.l < t.size() && segment_sum(t, s.k, s.l) == root) has_root_segment = true;
        if (!has_root_segment) continue;
        const auto rep = exceptionality_naive(*x, t);
        CHECK_FALSE(rep.strong);
        bool witnessed = false;
        for (const auto& wit : rep.witnesses)
          if (wit.property == Property::Strong && segment_sum(t, wit.segment.k, wit.segment.l) == root) witnessed = true;
        CHECK(witnessed);
        CHECK(same_flags(rep, exceptionality_fast(*x, t)));
        found = true;
        break;
      }
    }
  }
  CHECK(found);
}

TEST_CASE("fast path with a very negative last entry") {
  // Blowing up on both sides of E1 turns it into E1-E2-E3 of square -3.
  const ToricSystem base = make("Bl1", {{1, -1}, {0, 1}, {1, -1}, {1, 0}});
  const ToricSystem t = augment_blowup(augment_blowup(base, 2), 4);
  const auto sq = self_intersections(t);
  CHECK(*std::min_element(sq.begin(), sq.end()) <= -3);
  // Rotate so the most negative entry is last.
  const auto pos = static_cast<int>(std::min_element(sq.begin(), sq.end()) - sq.begin()) + 1;
  const ToricSystem rotated = cyclic_shift(t, pos);
  CHECK(self_intersections(rotated).back() <= -3);
  for (const auto& name : catalog_names()) {
    const auto s = catalog_surface(name);
    if (s->lattice()->id() != "Bl3") continue;
    const auto fast = exceptionality_fast(*s, rotated);
    CHECK(same_flags(fast, exceptionality_naive(*s, rotated)));
    CHECK_FALSE(fast.cyclic_strong);
  }
}

TEST_CASE("flags come with witnesses and nest") {
  for (const auto& [ts, names] : reference_systems()) {
    for (int m = 1; m <= ts.size() + 1 && ts.lattice()->blowup_points() >= 0 && ts.lattice()->blowup_points() < 6; ++m) {
      const ToricSystem t = augment_blowup(ts, m);
      for (const auto& name : catalog_names()) {
        const auto x = catalog_surface(name);
        if (x->lattice()->id() != t.lattice()->id()) continue;
        const auto r = exceptionality_naive(*x, t);
        if (r.cyclic_strong) CHECK(r.strong);
        if (r.strong) CHECK(r.exceptional);
        for (Property p : {Property::Exceptional, Property::Strong, Property::CyclicStrong}) {
          const bool flag = p == Property::Exceptional ? r.exceptional : p == Property::Strong ? r.strong : r.cyclic_strong;
          if (flag) continue;
          bool witnessed = false;
          for (const auto& w : r.witnesses) witnessed = witnessed || w.property == p;
          CHECK(witnessed);
        }
      }
    }
  }
}

TEST_CASE("segment bounds") {
  CHECK(check_segment_bounds(lll(), 9));
  for (const auto& [ts, names] : reference_systems()) CHECK(check_segment_bounds(ts, ts.lattice()->degree()));
  CHECK_FALSE(check_segment_bounds(augment_blowup(augment_blowup(make("Bl1", {{1, -1}, {0, 1}, {1, -1}, {1, 0}}), 2), 4), 6));
}

TEST_CASE("generating the lattice") {
  CHECK(generates_picard(lll()));
  CHECK_FALSE(generates_picard(make("P2", {{2}, {2}, {2}})));
  for (const auto& [ts, names] : reference_systems()) CHECK(generates_picard(ts));
}

TEST_CASE("blow-up augmentation") {
  const ToricSystem t = augment_blowup(lll(), 2);
  CHECK(t == make("Bl1", {{1, -1}, {0, 1}, {1, -1}, {1, 0}}));
  CHECK(self_intersections(t) == Sequence{0, -1, 0, 1});
  CHECK_THROWS_AS(augment_blowup(lll(), 5), DomainError);
  CHECK_THROWS_AS(augment_blowup(make("F0", {{1, 0}, {0, 1}, {1, 0}, {0, 1}}), 1), DomainError);
}

TEST_CASE("shifts and reflections") {
  CHECK(cyclic_shift(hexagon(), 6) == hexagon());
  CHECK(reverse_symmetry(reverse_symmetry(hexagon())) == hexagon());
  CHECK(validate(reverse_symmetry(hexagon())).valid);
  const auto lat = lattice_by_id("Bl3");
  const ToricSystem r = reflect(hexagon(), lat->make({0, 1, -1, 0}));
  CHECK(validate(r).valid);
  CHECK_THROWS_AS(reflect(hexagon(), lat->make({0, 1, 0, 0})), DomainError);
}

TEST_CASE("property: random derived systems keep every invariant") {
  std::mt19937_64 rng(3);
  auto systems = reference_systems();
  std::size_t checked_systems = 0;
  for (int trial = 0; trial < 400; ++trial) {
    ToricSystem t = systems[static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<Int>(systems.size()) - 1))].first;
    if (t.lattice()->blowup_points() < 0) continue;
    while (t.lattice()->blowup_points() < 7 && oracle::uniform(rng, 0, 2) > 0)
      t = augment_blowup(t, static_cast<int>(oracle::uniform(rng, 1, t.size() + 1)));
    const auto roots = enumerate_r_classes(t.lattice(), -2);
    for (int i = 0; i < 3 && !roots.empty(); ++i)
      t = reflect(t, roots[static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<Int>(roots.size()) - 1))]);
    t = cyclic_shift(t, static_cast<int>(oracle::uniform(rng, 0, t.size() - 1)));
    if (oracle::uniform(rng, 0, 1)) t = reverse_symmetry(t);

    ++checked_systems;
    CHECK(validate(t).valid);
    CHECK(axioms_hold(t));
    CHECK(generates_picard(t));
    const auto sq = self_intersections(t);
    CHECK(std::accumulate(sq.begin(), sq.end(), Int{0}) == 12 - 3 * t.size());
    CHECK(is_admissible(sq));
    for (const auto& s : proper_segments(t.size())) {
      Int rhs = 0;
      for (int i = s.k, steps = 0; steps < (s.l - s.k + t.size()) % t.size() + 1; ++i, ++steps) rhs += square(t.at(i)) + 2;
      CHECK(square(segment_sum(t, s.k, s.l)) + 2 == rhs);
    }
    const auto base = oracle::random_class(rng, t.lattice(), 3);
    CHECK(from_collection(to_collection(t, base)) == t);
  }
  CHECK(checked_systems > 200);
}

TEST_CASE("property: exceptional flag is invariant under shift and symmetry") {
  for (const auto& [ts, names] : reference_systems()) {
    if (ts.lattice()->blowup_points() < 0 || ts.lattice()->blowup_points() > 5) continue;
    for (int m = 1; m <= ts.size() + 1; ++m) {
      const ToricSystem t = augment_blowup(ts, m);
      for (const auto& name : catalog_names()) {
        const auto x = catalog_surface(name);
        if (x->lattice()->id() != t.lattice()->id()) continue;
        const auto r = exceptionality_naive(*x, t);
        CHECK(exceptionality_naive(*x, reverse_symmetry(t)).exceptional == r.exceptional);
        for (int k = 1; k < t.size(); ++k) {
          const auto s = exceptionality_naive(*x, cyclic_shift(t, k));
          CHECK(s.exceptional == r.exceptional);
          CHECK(s.cyclic_strong == r.cyclic_strong);
        }
      }
    }
  }
}

TEST_CASE("json round trip of systems") {
  const ToricSystem t = hexagon();
  CHECK(toric_system_from_json(to_json(t)) == t);
  CHECK(toric_system_from_json(read_json_file(default_data_dir() + "/systems/hexagon.json")) == t);
  CHECK_THROWS_AS(toric_system_from_json(Json{{"lattice", "Bl3"}}), DomainError);
  CHECK_THROWS_AS(toric_system_from_json(Json{{"lattice", "Bl3"}, {"entries", Json::array({Json::array({1, 2})})}}), DomainError);
}
