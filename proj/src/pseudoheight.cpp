#include "toricsys/pseudoheight.hpp"

namespace toricsys {

EInvariant e_invariant(const SurfaceModel& x, const DivisorClass& d) {
  const CohomologyProfile p = cohomology_profile(x, d);
  if (p.h0_positive) return EInvariant::finite(0);
  if (!p.h2_positive) return *p.h1 > 0 ? EInvariant::finite(1) : EInvariant::infinity();
  // h0 = 0 < h2: chi < 0 forces h1 >= -chi > 0.
  return euler_char(d) < 0 ? EInvariant::finite(1) : EInvariant::finite(2);
}

namespace {

struct SegmentTable {
  int n = 0;
  // e[(k-1) * n + (l-1)] for the segment from k to l; the full cycle
  // [k, k-1] holds e(-K).
  std::vector<EInvariant> e;

  SegmentTable(const SurfaceModel& x, const ToricSystem& ts, bool need_full) : n(ts.size()) {
    e.resize(static_cast<std::size_t>(n * n));
    const EInvariant full = need_full ? e_invariant(x, -x.lattice()->canonical()) : EInvariant::infinity();
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        const bool is_full = (l % n) + 1 == k;
        at(k, l) = is_full ? full : e_invariant(x, segment_sum(ts, k, l));
      }
  }
  EInvariant& at(int k, int l) { return e[static_cast<std::size_t>((k - 1) * n + (l - 1))]; }
  const EInvariant& at(int k, int l) const { return e[static_cast<std::size_t>((k - 1) * n + (l - 1))]; }
  int prev(int i) const { return i == 1 ? n : i - 1; }

  ChainEvaluation evaluate(const std::vector<int>& idx) const {
    ChainEvaluation c;
    c.indices = idx;
    const std::size_t p = idx.size() - 1;
    Int sum = 0;
    bool infinite = false;
    for (std::size_t i = 0; i <= p; ++i) {
      const int from = idx[i];
      const int to = i < p ? idx[i + 1] - 1 : prev(idx[0]);
      const EInvariant t = at(from, to);
      c.terms.push_back(t);
      if (t.infinite) infinite = true;
      else sum += t.value;
    }
    if (!infinite) c.total = sum - static_cast<Int>(p);
    return c;
  }
};

void check_indices(const std::vector<int>& idx, int n) {
  if (idx.empty()) throw DomainError("a chain needs at least one index");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > n) throw DomainError("chain index out of range");
    if (i > 0 && idx[i] <= idx[i - 1]) throw DomainError("chain indices must increase strictly");
  }
}

}  // namespace

ChainEvaluation evaluate_chain(const SurfaceModel& x, const ToricSystem& ts, const std::vector<int>& indices) {
  check_indices(indices, ts.size());
  return SegmentTable(x, ts, indices.size() == 1).evaluate(indices);
}

PseudoheightResult pseudoheight(const SurfaceModel& x, const ToricSystem& ts, int p_min) {
  if (p_min != 0 && p_min != 1) throw DomainError("p_min must be 0 or 1");
  const int n = ts.size();
  const SegmentTable table(x, ts, p_min == 0);
  PseudoheightResult best;
  bool have = false;
  for (int size = p_min + 1; size <= n; ++size) {
    // Lexicographic combinations of {1..n} of the given size.
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
      ChainEvaluation c = table.evaluate(idx);
      ++best.chains;
      const bool better = !have || (c.total && (!best.value || *c.total < *best.value));
      if (better) {
        best.value = c.total;
        best.argmin = std::move(c);
        have = true;
      }
      int pos = size - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - (size - 1 - pos)) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return best;
}

std::string fullness_name(Fullness f) { return f == Fullness::NotFull ? "NotFull" : "PossiblyFull"; }

Fullness fullness_obstruction(const SurfaceModel& x, const ToricSystem& ts, int p_min) {
  const PseudoheightResult r = pseudoheight(x, ts, p_min);
  return (r.value && *r.value <= -2) ? Fullness::PossiblyFull : Fullness::NotFull;
}

bool has_effective_segment(const SurfaceModel& x, const ToricSystem& ts) {
  for (const Segment& s : proper_segments(ts.size()))
    if (x.is_effective(segment_sum(ts, s.k, s.l))) return true;
  return false;
}

}  // namespace toricsys
