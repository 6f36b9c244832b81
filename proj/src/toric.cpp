#include "toricsys/toric.hpp"

#include <cstdlib>

namespace toricsys {

namespace {

int wrap_index(int i, int n) { return ((i - 1) % n + n) % n; }

int segment_length(const Segment& s, int n) { return ((s.l - s.k) % n + n) % n + 1; }

// Square of a segment from the entry squares, via A_{k..l}^2 + 2 = sum (A_i^2 + 2).
Int segment_square(const std::vector<Int>& squares, const Segment& s) {
  const int n = static_cast<int>(squares.size());
  Int total = -2;
  const int len = segment_length(s, n);
  for (int t = 0; t < len; ++t) total += squares[static_cast<std::size_t>(wrap_index(s.k + t, n))] + 2;
  return total;
}

bool contains_last(const Segment& s, int n) { return wraps(s) || s.l == n; }

std::string seg_text(const Segment& s) { return "[" + std::to_string(s.k) + ".." + std::to_string(s.l) + "]"; }

}  // namespace

ToricSystem::ToricSystem(LatticePtr lattice, std::vector<DivisorClass> entries)
    : lattice_(std::move(lattice)), entries_(std::move(entries)) {
  if (!lattice_) throw DomainError("toric system without a lattice");
  if (entries_.empty()) throw DomainError("toric system needs at least one entry");
  for (const auto& a : entries_)
    if (a.lattice()->id() != lattice_->id())
      throw DomainError("toric system entry " + a.to_string() + " is not in lattice " + lattice_->id());
}

const DivisorClass& ToricSystem::at(int i) const {
  return entries_[static_cast<std::size_t>(wrap_index(i, size()))];
}

ValidationResult validate(const ToricSystem& ts) {
  ValidationResult res;
  const int n = ts.size();
  const auto& lat = *ts.lattice();
  if (static_cast<std::size_t>(n) != lat.rank() + 2)
    res.problems.push_back("length " + std::to_string(n) + " but rank + 2 = " + std::to_string(lat.rank() + 2));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const bool adjacent = j == i + 1 || (i == 1 && j == n);
      const Int want = adjacent ? 1 : 0;
      const Int got = intersect(ts.at(i), ts.at(j));
      if (got != want)
        res.problems.push_back("A" + std::to_string(i) + ".A" + std::to_string(j) + " = " + std::to_string(got) +
                               ", expected " + std::to_string(want));
    }
  DivisorClass total = lat.zero();
  for (const auto& a : ts.entries()) total = total + a;
  if (!(total == -lat.canonical()))
    res.problems.push_back("entries sum to " + total.to_string() + " instead of -K = " + (-lat.canonical()).to_string());
  res.valid = res.problems.empty();
  return res;
}

ToricSystem from_collection(const std::vector<DivisorClass>& divisors) {
  if (divisors.empty()) throw DomainError("empty collection");
  const LatticePtr lat = divisors.front().lattice();
  if (divisors.size() != lat->rank() + 2)
    throw DomainError("a collection on " + lat->id() + " must have " + std::to_string(lat->rank() + 2) +
                      " members, got " + std::to_string(divisors.size()));
  std::vector<DivisorClass> entries;
  DivisorClass partial = lat->zero();
  for (std::size_t i = 0; i + 1 < divisors.size(); ++i) {
    entries.push_back(divisors[i + 1] - divisors[i]);
    partial = partial + entries.back();
  }
  entries.push_back(-lat->canonical() - partial);
  return ToricSystem(lat, std::move(entries));
}

std::vector<DivisorClass> to_collection(const ToricSystem& ts, const DivisorClass& base) {
  require_same_lattice(base, ts.entries().front());
  std::vector<DivisorClass> out{base};
  for (int i = 1; i < ts.size(); ++i) out.push_back(out.back() + ts.at(i));
  return out;
}

DivisorClass segment_sum(const ToricSystem& ts, int k, int l, bool allow_full) {
  const int n = ts.size();
  const int len = ((l - k) % n + n) % n + 1;
  if (len == n && !allow_full) throw DomainError("segment [" + std::to_string(k) + ".." + std::to_string(l) + "] is the full cycle");
  DivisorClass s = ts.at(k);
  for (int t = 1; t < len; ++t) s = s + ts.at(k + t);
  return s;
}

std::vector<Int> self_intersections(const ToricSystem& ts) {
  std::vector<Int> out;
  for (const auto& a : ts.entries()) out.push_back(square(a));
  return out;
}

std::vector<Segment> proper_segments(int n) {
  std::vector<Segment> out;
  for (int k = 1; k <= n; ++k)
    for (int len = 1; len < n; ++len) out.push_back({k, (k + len - 2) % n + 1});
  return out;
}

std::string property_name(Property p) {
  switch (p) {
    case Property::Exceptional: return "exceptional";
    case Property::Strong: return "strong";
    case Property::CyclicStrong: return "cyclic_strong";
  }
  return "?";
}

ExceptionalityReport exceptionality_naive(const SurfaceModel& x, const ToricSystem& ts) {
  if (ts.lattice()->id() != x.lattice()->id())
    throw DomainError("toric system on " + ts.lattice()->id() + " checked on a surface over " + x.lattice()->id());
  const int n = ts.size();
  ExceptionalityReport rep;
  rep.exceptional = rep.strong = rep.cyclic_strong = true;
  for (const Segment& s : proper_segments(n)) {
    const DivisorClass d = segment_sum(ts, s.k, s.l);
    if (!is_numerically_lo(d))
      throw DomainError("segment " + seg_text(s) + " = " + d.to_string() + " is not numerically left-orthogonal");
    ++rep.segments_examined;
    const LoSloStatus st = lo_slo_status(x, d);
    const std::string r = "square " + std::to_string(square(d));
    if (!st.lo) {
      rep.exceptional = false;
      rep.witnesses.push_back({s, Property::Exceptional, "not left-orthogonal, " + r});
    }
    if (!st.slo && !wraps(s) && s.l <= n - 1) {
      rep.strong = false;
      rep.witnesses.push_back({s, Property::Strong, "not strong left-orthogonal, " + r});
    }
    if (!st.slo) {
      rep.cyclic_strong = false;
      rep.witnesses.push_back({s, Property::CyclicStrong, "not strong left-orthogonal, " + r});
    }
  }
  if (rep.strong && !rep.exceptional)
    throw InternalError("strong left-orthogonality of the inner segments without exceptionality");
  return rep;
}

ExceptionalityReport exceptionality_fast(const SurfaceModel& x, const ToricSystem& ts) {
  if (ts.lattice()->id() != x.lattice()->id())
    throw DomainError("toric system on " + ts.lattice()->id() + " checked on a surface over " + x.lattice()->id());
  const int n = ts.size();
  const std::vector<Int> sq = self_intersections(ts);
  bool head_ok = true;
  for (int i = 0; i + 1 < n; ++i) head_ok = head_ok && sq[static_cast<std::size_t>(i)] >= -2;
  if (!head_ok) return exceptionality_naive(x, ts);
  const bool all_ok = sq.back() >= -2;

  ExceptionalityReport rep;
  rep.used_fast_path = true;
  rep.exceptional = rep.strong = rep.cyclic_strong = true;
  // (-2)-segments are roots, so effectivity is a lookup in the positive roots.
  auto root_check = [&](const Segment& s, bool need_strong_inner, bool need_cyclic) {
    const DivisorClass d = segment_sum(ts, s.k, s.l);
    ++rep.segments_examined;
    const bool anti = x.is_effective_root(-d);
    const bool eff = x.is_effective_root(d);
    if (anti) {
      rep.exceptional = false;
      rep.witnesses.push_back({s, Property::Exceptional, "anti-effective (-2)-class"});
    }
    if (need_strong_inner && (anti || eff)) {
      rep.strong = false;
      rep.witnesses.push_back({s, Property::Strong, eff ? "effective (-2)-class" : "anti-effective (-2)-class"});
    }
    if (need_cyclic && (anti || eff)) {
      rep.cyclic_strong = false;
      rep.witnesses.push_back({s, Property::CyclicStrong, eff ? "effective (-2)-class" : "anti-effective (-2)-class"});
    }
  };

  if (all_ok) {
    for (const Segment& s : proper_segments(n))
      if (segment_square(sq, s) == -2) root_check(s, !wraps(s) && s.l <= n - 1, true);
    if (rep.strong && !rep.exceptional) {
      rep.strong = false;
      rep.witnesses.push_back({{1, n - 1}, Property::Strong, "not exceptional"});
    }
    return rep;
  }

  // A_n^2 <= -3: A_n itself is not strong left-orthogonal.
  rep.cyclic_strong = false;
  rep.witnesses.push_back({{n, n}, Property::CyclicStrong, "square " + std::to_string(sq.back()) + " <= -3"});
  for (const Segment& s : proper_segments(n)) {
    const Int q = segment_square(sq, s);
    if (!contains_last(s, n)) {
      if (q == -2) root_check(s, true, false);
      continue;
    }
    if (q > -2) continue;
    const DivisorClass d = segment_sum(ts, s.k, s.l);
    ++rep.segments_examined;
    if (!lo_slo_status(x, d).lo) {
      rep.exceptional = false;
      rep.witnesses.push_back({s, Property::Exceptional, "not left-orthogonal, square " + std::to_string(q)});
    }
  }
  if (!rep.exceptional && rep.strong) {
    rep.strong = false;
    rep.witnesses.push_back({{1, n - 1}, Property::Strong, "not exceptional"});
  }
  return rep;
}

bool check_segment_bounds(const ToricSystem& ts, Int degree) {
  for (const Segment& s : proper_segments(ts.size())) {
    const Int q = square(segment_sum(ts, s.k, s.l));
    if (q < -2 || q > degree - 2) return false;
  }
  return true;
}

bool generates_picard(const ToricSystem& ts) {
  // Integer row echelon form: the row lattice has index equal to the product
  // of the pivots, so the entries generate iff every pivot is a unit.
  const std::size_t rank = ts.lattice()->rank();
  std::vector<std::vector<Int>> rows;
  for (const auto& a : ts.entries()) rows.push_back(a.coords());
  std::size_t top = 0;
  for (std::size_t col = 0; col < rank; ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || std::abs(rows[i][col]) < std::abs(rows[best][col]))) best = i;
      if (best == rows.size()) return false;
      std::swap(rows[top], rows[best]);
      bool cleared = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        const Int f = rows[i][col] / rows[top][col];
        for (std::size_t j = col; j < rank; ++j) rows[i][j] = checked::sub(rows[i][j], checked::mul(f, rows[top][j]));
        if (rows[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (std::abs(rows[top][col]) != 1) return false;
    ++top;
  }
  return true;
}

ToricSystem augment_blowup(const ToricSystem& ts, int m) {
  const int pts = ts.lattice()->blowup_points();
  if (pts < 0 || pts > 7) throw DomainError("augment_blowup needs a blow-up lattice with at most 7 points");
  const int n = ts.size();
  if (m < 1 || m > n + 1) throw DomainError("augmentation position " + std::to_string(m) + " outside 1.." + std::to_string(n + 1));
  const LatticePtr up = make_blowup_lattice(pts + 1);
  std::vector<DivisorClass> lifted;
  for (const auto& a : ts.entries()) {
    std::vector<Int> c = a.coords();
    c.push_back(0);
    lifted.push_back(up->make(std::move(c)));
  }
  const DivisorClass e = up->basis(static_cast<std::size_t>(pts) + 1);
  std::vector<DivisorClass> out;
  if (m == 1 || m == n + 1) {
    lifted.front() = lifted.front() - e;
    lifted.back() = lifted.back() - e;
    if (m == 1) out.push_back(e);
    out.insert(out.end(), lifted.begin(), lifted.end());
    if (m == n + 1) out.push_back(e);
  } else {
    const std::size_t before = static_cast<std::size_t>(m - 2);
    lifted[before] = lifted[before] - e;
    lifted[before + 1] = lifted[before + 1] - e;
    out.assign(lifted.begin(), lifted.begin() + static_cast<std::ptrdiff_t>(before + 1));
    out.push_back(e);
    out.insert(out.end(), lifted.begin() + static_cast<std::ptrdiff_t>(before + 1), lifted.end());
  }
  return ToricSystem(up, std::move(out));
}

ToricSystem cyclic_shift(const ToricSystem& ts, int k) {
  std::vector<DivisorClass> out;
  for (int i = 1; i <= ts.size(); ++i) out.push_back(ts.at(i + k));
  return ToricSystem(ts.lattice(), std::move(out));
}

ToricSystem reverse_symmetry(const ToricSystem& ts) {
  const int n = ts.size();
  std::vector<DivisorClass> out;
  for (int i = n - 1; i >= 1; --i) out.push_back(ts.at(i));
  out.push_back(ts.at(n));
  return ToricSystem(ts.lattice(), std::move(out));
}

ToricSystem reflect(const ToricSystem& ts, const DivisorClass& root) {
  if (square(root) != -2) throw DomainError("reflection needs a class of square -2: " + root.to_string());
  std::vector<DivisorClass> out;
  for (const auto& a : ts.entries()) out.push_back(a + root * intersect(a, root));
  return ToricSystem(ts.lattice(), std::move(out));
}

}  // namespace toricsys
