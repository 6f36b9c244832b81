#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "toricsys/admissible.hpp"

using namespace toricsys;

namespace {

Int sum(const Sequence& s) { return std::accumulate(s.begin(), s.end(), Int{0}); }

std::set<Sequence> canon_set(const std::vector<Sequence>& v) {
  std::set<Sequence> out;
  for (const auto& s : v) out.insert(canonical_form(s));
  return out;
}

// Random augmentation chain from a random base.
Sequence random_chain(std::mt19937_64& rng, int steps) {
  const Int k = oracle::uniform(rng, -6, 6);
  Sequence s = oracle::uniform(rng, 0, 9) == 0 ? Sequence{1, 1, 1} : Sequence{0, k, 0, -k};
  for (int i = 0; i < steps; ++i) s = augment(s, static_cast<int>(oracle::uniform(rng, 1, static_cast<Int>(s.size()) + 1)));
  return s;
}

}  // namespace

TEST_CASE("augmentation formula") {
  CHECK(augment({0, 0, 0, 0}, 1) == Sequence{-1, -1, 0, 0, -1});
  CHECK(augment({0, 1, 0, -1}, 5) == Sequence{-1, 1, 0, -2, -1});
  CHECK(augment({1, 1, 1}, 3) == Sequence{1, 0, -1, 0});
  CHECK(augment({0, 0, 0, 0}, 2) == Sequence{-1, -1, -1, 0, 0});
  CHECK_THROWS_AS(augment({0, 0, 0, 0}, 0), DomainError);
  CHECK_THROWS_AS(augment({0, 0, 0, 0}, 6), DomainError);
}

TEST_CASE("blow-down inverts augmentation") {
  CHECK(blow_down({-1, -1, 0, 0, -1}, 1) == Sequence{0, 0, 0, 0});
  CHECK_THROWS_AS(blow_down({0, 0, 0, 0}, 1), DomainError);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const Sequence s = random_chain(rng, static_cast<int>(oracle::uniform(rng, 0, 5)));
    const int m = static_cast<int>(oracle::uniform(rng, 1, static_cast<Int>(s.size()) + 1));
    CHECK(blow_down(augment(s, m), m) == s);
  }
}

TEST_CASE("admissibility examples") {
  CHECK(is_admissible({0, 0, 0, 0}));
  CHECK(is_admissible({-2, -2, -1, -2, -2, -1, -2, -2, -1}));
  CHECK_FALSE(is_admissible({-1, -1, -1, -1}));
  CHECK(is_admissible({1, 1, 1}));
  CHECK_FALSE(is_admissible({1, 1, 1}, AdmissibleOptions{false}));
  CHECK_FALSE(is_admissible({1, 1, 1, 1}));
  CHECK_FALSE(is_admissible({0, 0}));
  // Correct sum, but no -1 to blow down and not a base.
  CHECK_FALSE(is_admissible({0, 0, 0, 0, -3}));
}

TEST_CASE("reduction paths replay") {
  const auto p = reduction_path({-1, -1, 0, 0, -1});
  REQUIRE(p);
  CHECK(p->steps.size() == 1);
  CHECK(p->base == Sequence{0, 0, 0, 0});
  CHECK(replay(*p) == Sequence{-1, -1, 0, 0, -1});
  const auto b = reduction_path({0, 5, 0, -5});
  REQUIRE(b);
  CHECK(b->steps.empty());
  CHECK_FALSE(reduction_path({1, 1, 1, 1}));
}

TEST_CASE("canonical forms") {
  const Sequence s{0, 0, -1, -1, -1};
  for (int k = 0; k < 5; ++k) CHECK(canonical_form(shift(s, k)) == canonical_form(s));
  CHECK(canonical_form(symmetry(s)) == canonical_form(s));
  CHECK(canonical_form({-1, -1, -1}) == Sequence{-1, -1, -1});
  CHECK(shift({1, 2, 3}) == Sequence{2, 3, 1});
  CHECK(symmetry({1, 2, 3, 4}) == Sequence{3, 2, 1, 4});
  CHECK(symmetry(symmetry({5, 1, 2, 3})) == Sequence{5, 1, 2, 3});
}

TEST_CASE("property: sum invariant on 10000 augmentation chains") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const Sequence s = random_chain(rng, static_cast<int>(oracle::uniform(rng, 0, 8)));
    REQUIRE(sum(s) == 12 - 3 * static_cast<Int>(s.size()));
  }
}

TEST_CASE("property: admissibility is dihedrally invariant and paths replay") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1500; ++trial) {
    const Sequence s = random_chain(rng, static_cast<int>(oracle::uniform(rng, 0, 6)));
    CHECK(is_admissible(s));
    CHECK(is_admissible(shift(s, static_cast<int>(oracle::uniform(rng, 1, static_cast<Int>(s.size()))))));
    CHECK(is_admissible(symmetry(s)));
    const auto p = reduction_path(s);
    REQUIRE(p);
    CHECK(replay(*p) == s);
  }
}

TEST_CASE("property: random sequences with the right sum agree with forward generation") {
  // Entries >= -3 make the forward oracle complete for these lengths.
  std::map<std::size_t, std::set<Sequence>> forward;
  for (std::size_t n = 4; n <= 7; ++n) forward[n] = oracle::forward_admissible(n, -3, true);
  std::mt19937_64 rng(1);
  std::size_t positives = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 4, 7));
    Sequence s(n);
    for (auto& v : s) v = oracle::uniform(rng, -3, 2);
    s.back() += 12 - 3 * static_cast<Int>(n) - sum(s);
    if (s.back() < -3 || s.back() > 5) continue;
    const bool expected = forward[n].count(oracle::dihedral_min(s)) > 0;
    positives += expected;
    CHECK_MESSAGE(is_admissible(s) == expected, to_string(s));
  }
  CHECK(positives > 20);
}

TEST_CASE("generation matches the forward oracle") {
  for (int n = 4; n <= 8; ++n)
    for (Int lo : {-2, -3}) {
      const auto got = canon_set(generate_admissible(n, lo));
      std::set<Sequence> want;
      for (const auto& s : oracle::forward_admissible(static_cast<std::size_t>(n), lo, true)) want.insert(canonical_form(s));
      CHECK_MESSAGE(got == want, "n=" << n << " lo=" << lo);
    }
  const auto windowed = generate_admissible(5, -4, 2);
  for (const auto& s : windowed) {
    CHECK(*std::min_element(s.begin(), s.end()) >= -4);
    CHECK(*std::max_element(s.begin(), s.end()) <= 2);
    CHECK(canonical_form(s) == s);
  }
  CHECK(std::is_sorted(windowed.begin(), windowed.end()));
  CHECK_THROWS_AS(generate_admissible(2, -2), DomainError);
  CHECK_THROWS_AS(generate_admissible(5, 0, -1), DomainError);
}

TEST_CASE("cyclic strong classification") {
  const auto c = classify_cyclic_strong();
  CHECK(c.count_without_p2() == 15);
  CHECK(c.count_with_p2() == 16);
  CHECK(c.p2_row == Sequence{1, 1, 1});
  CHECK_FALSE(classify_cyclic_strong(AdmissibleOptions{false}).p2_row);
  CHECK(canon_set(generate_admissible(9, -2)) == std::set<Sequence>{canonical_form({-2, -2, -1, -2, -2, -1, -2, -2, -1})});
  CHECK(canon_set(generate_admissible(5, -2)) ==
        std::set<Sequence>{canonical_form({0, 0, -1, -1, -1}), canonical_form({0, -2, -1, -1, 1})});
  CHECK(generate_admissible(6, -2).size() == 4);
  CHECK(generate_admissible(8, -2).size() == 3);
  CHECK(generate_admissible(10, -2).empty());
  std::size_t by_length = 0;
  for (int n = 4; n <= 9; ++n) by_length += generate_admissible(n, -2).size();
  CHECK(by_length == 15);
}

TEST_CASE("strong but not cyclic strong families") {
  CHECK(matches_strong_family({0, 3, 0, -3}) == "IIa");
  CHECK(matches_strong_family({1, 0, -2, -2, -2, -1, -3}) == "IIIa");
  CHECK(matches_strong_family({-1, -2, 0, 0, -2, -1, -3}) == "IIIc");
  CHECK(matches_strong_family({-2, -2, -1, -2, 0, -2, -2, -1, -3}) == "VI");
  CHECK_THROWS_AS(matches_strong_family({0, 0, 0, 0}), DomainError);
  CHECK_THROWS_AS(matches_strong_family({-3, 0, 3, 0}), DomainError);
  for (int n = 4; n <= 9; ++n) {
    const Int floor = 12 - 3 * n - (n - 1) * 4;
    for (const auto& s : generate_admissible(n, floor, 4))
      for (const auto& o : strong_not_cyclic_orientations(s)) {
        CHECK(is_admissible(o));
        CHECK_MESSAGE(matches_strong_family(o).has_value(), to_string(o));
      }
  }
}

TEST_CASE("length at most five") {
  const auto c = classify_length_le5(10);
  CHECK(c.matches);
  CHECK(c.rows.size() == 1 + 11 + 21);
  CHECK(canon_set(generate_admissible(3, -12, 12)) == std::set<Sequence>{{1, 1, 1}});
  std::set<Sequence> f;
  for (Int m = 0; m <= 3; ++m) f.insert(canonical_form({m, 0, -m, 0}));
  CHECK(canon_set(generate_admissible(4, -3, 3)) == f);
  std::set<Sequence> five;
  for (Int s = -2; s <= 2; ++s) five.insert(canonical_form({-1, s, 0, -s - 1, -1}));
  // s and -1-s give the same class, so the window [-3, 2] holds exactly these.
  CHECK(canon_set(generate_admissible(5, -3, 2)) == five);
}

TEST_CASE("to_string") { CHECK(to_string({-1, 0, 2}) == "(-1,0,2)"); }
