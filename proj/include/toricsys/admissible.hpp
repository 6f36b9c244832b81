#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricsys/lattice.hpp"

namespace toricsys {

using Sequence = std::vector<Int>;

struct AdmissibleOptions {
  // Admit (1,1,1) as a base next to (0,k,0,-k).
  bool allow_p2_base = true;
};

// m-th elementary augmentation, 1 <= m <= n + 1.
Sequence augment(const Sequence& seq, int m);

// Removes the -1 at 1-based position i and raises both cyclic neighbours.
// augment(blow_down(s, i), i) == s.
Sequence blow_down(const Sequence& seq, int i);

Sequence shift(const Sequence& seq, int k = 1);
// (a_{n-1}, ..., a_1, a_n).
Sequence symmetry(const Sequence& seq);

bool is_base(const Sequence& seq, const AdmissibleOptions& opts = {});
bool is_admissible(const Sequence& seq, const AdmissibleOptions& opts = {});

// Replaying steps (augmentation positions) from base reproduces the target.
struct ReductionPath {
  Sequence base;
  std::vector<int> steps;
};

std::optional<ReductionPath> reduction_path(const Sequence& seq, const AdmissibleOptions& opts = {});
Sequence replay(const ReductionPath& path);

// Lexicographic minimum over the dihedral orbit.
Sequence canonical_form(const Sequence& seq);

// Canonical representatives of all admissible sequences of length n with
// entries in [lo, hi], sorted.
std::vector<Sequence> generate_admissible(int n, Int lo, std::optional<Int> hi = std::nullopt,
                                          const AdmissibleOptions& opts = {});

struct CyclicStrongClassification {
  std::vector<Sequence> rows;           // lengths 4..9, entries >= -2
  std::optional<Sequence> p2_row;       // (1,1,1) when the length-3 base is on
  std::size_t count_without_p2() const { return rows.size(); }
  std::size_t count_with_p2() const { return rows.size() + (p2_row ? 1 : 0); }
};

CyclicStrongClassification classify_cyclic_strong(const AdmissibleOptions& opts = {});

// Family tag among IIa, IIb, IIc, IIIa, IIIb, IIIc, IV, V, VI, or nullopt.
// Requires a_1..a_{n-1} >= -2 and a_n <= -3.
std::optional<std::string> matches_strong_family(const Sequence& seq);

// Orientations of seq (rotations and reflections) whose first n-1 entries are
// >= -2 and whose last entry is <= -3; empty when seq has none.
std::vector<Sequence> strong_not_cyclic_orientations(const Sequence& seq);

struct Le5Row {
  std::string family;  // "P2", "F", "5s"
  Int param = 0;
  Sequence sequence;
};

struct Le5Classification {
  Int bound = 0;
  std::vector<Le5Row> rows;                  // family members with |param| <= bound
  std::vector<Sequence> enumerated;          // canonical forms found by search
  std::vector<Sequence> expected;            // canonical forms of family members inside the window
  bool matches = false;
};

// Searches lengths 3..5 with entries in [-bound-2, bound+2].
Le5Classification classify_length_le5(Int bound);

std::string to_string(const Sequence& seq);

}  // namespace toricsys
