#include "toricsys/admissible.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace toricsys {

namespace {

Int required_sum(std::size_t n) { return 12 - 3 * static_cast<Int>(n); }

Int total(const Sequence& s) {
  Int t = 0;
  for (Int v : s) t = checked::add(t, v);
  return t;
}

bool all_equal(const Sequence& s, std::size_t from, std::size_t to, Int v) {
  for (std::size_t i = from; i < to; ++i)
    if (s[i] != v) return false;
  return true;
}

// (0), (-1,-1) or (-1,-2,...,-2,-1).
bool is_end_block(const Sequence& s, std::size_t from, std::size_t to) {
  const std::size_t len = to - from;
  if (len == 1) return s[from] == 0;
  if (len < 2) return false;
  return s[from] == -1 && s[to - 1] == -1 && all_equal(s, from + 1, to - 1, -2);
}

bool has_prefix(const Sequence& w, const Sequence& prefix) {
  return w.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

// Matches w = head ++ [-2]*k ++ tail for some k >= 0.
bool head_twos_tail(const Sequence& w, const Sequence& head, const Sequence& tail) {
  if (w.size() < head.size() + tail.size()) return false;
  if (!has_prefix(w, head)) return false;
  if (!std::equal(tail.begin(), tail.end(), w.end() - static_cast<std::ptrdiff_t>(tail.size()))) return false;
  return all_equal(w, head.size(), w.size() - tail.size(), -2);
}

std::optional<std::string> match_oriented(const Sequence& w, Int e, Int n) {
  const std::size_t m = w.size();
  // IIa: (b, c, d, e).
  for (std::size_t p = 1; p + 1 < m; ++p) {
    const Int c = w[p];
    if (c >= -2 && c + e == 4 - n && is_end_block(w, 0, p) && is_end_block(w, p + 1, m)) return "IIa";
  }
  // IIb: (-2,-1,-2, c, d, e).
  if (m >= 5 && has_prefix(w, {-2, -1, -2})) {
    const Int c = w[3];
    if (c >= -2 && c + e == 5 - n && is_end_block(w, 4, m)) return "IIb";
  }
  // IIc: (-2,-1,-2, c, -2,-1,-2, e).
  if (m == 7 && has_prefix(w, {-2, -1, -2}) && w[4] == -2 && w[5] == -1 && w[6] == -2) {
    const Int c = w[3];
    if (c >= -2 && c + e == 6 - n) return "IIc";
  }
  if (e == 4 - n && head_twos_tail(w, {1, 0}, {-1})) return "IIIa";
  if (e == 4 - n && head_twos_tail(w, {-1, 0, 0}, {-1})) return "IIIb";
  if (e == 4 - n && m >= 4 && w.front() == -1 && w.back() == -1) {
    for (std::size_t p = 1; p + 2 < m; ++p)
      if (w[p] == 0 && w[p + 1] == 0 && all_equal(w, 1, p, -2) && all_equal(w, p + 2, m - 1, -2)) return "IIIc";
  }
  if (e == 4 - n && head_twos_tail(w, {-2, 0, 1}, {-1})) return "IV";
  if (e == 5 - n && head_twos_tail(w, {-2, -1, -1, 0}, {-1})) return "V";
  if (e == 6 - n && head_twos_tail(w, {-2, -2, -1, -2, 0}, {-1})) return "VI";
  return std::nullopt;
}

}  // namespace

std::string to_string(const Sequence& seq) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? "," : "") << seq[i];
  out << ')';
  return out.str();
}

Sequence augment(const Sequence& seq, int m) {
  const int n = static_cast<int>(seq.size());
  if (n < 1) throw DomainError("cannot augment an empty sequence");
  if (m < 1 || m > n + 1)
    throw DomainError("augmentation position " + std::to_string(m) + " outside 1.." + std::to_string(n + 1));
  Sequence out;
  out.reserve(seq.size() + 1);
  if (m == 1 || m == n + 1) {
    Sequence body(seq);
    body.front() -= 1;
    body.back() -= 1;
    if (m == 1) out.push_back(-1);
    out.insert(out.end(), body.begin(), body.end());
    if (m == n + 1) out.push_back(-1);
    return out;
  }
  for (int i = 1; i <= n; ++i) {
    Int v = seq[static_cast<std::size_t>(i - 1)];
    if (i == m - 1 || i == m) v -= 1;
    if (i == m) out.push_back(-1);
    out.push_back(v);
  }
  return out;
}

Sequence blow_down(const Sequence& seq, int i) {
  const int n = static_cast<int>(seq.size());
  if (n < 4) throw DomainError("blow-down needs length >= 4");
  if (i < 1 || i > n) throw DomainError("blow-down position out of range");
  if (seq[static_cast<std::size_t>(i - 1)] != -1) throw DomainError("blow-down position does not hold -1");
  Sequence out(seq);
  const std::size_t idx = static_cast<std::size_t>(i - 1);
  out[(idx + out.size() - 1) % out.size()] += 1;
  out[(idx + 1) % out.size()] += 1;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(idx));
  return out;
}

Sequence shift(const Sequence& seq, int k) {
  const int n = static_cast<int>(seq.size());
  Sequence out(seq.size());
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = seq[static_cast<std::size_t>(((i + k) % n + n) % n)];
  return out;
}

Sequence symmetry(const Sequence& seq) {
  Sequence out(seq.rbegin() + 1, seq.rend());
  out.push_back(seq.back());
  return out;
}

Sequence canonical_form(const Sequence& seq) {
  if (seq.empty()) return seq;
  Sequence best = seq;
  Sequence rev(seq.rbegin(), seq.rend());
  const int n = static_cast<int>(seq.size());
  for (int k = 0; k < n; ++k) {
    best = std::min(best, shift(seq, k));
    best = std::min(best, shift(rev, k));
  }
  return best;
}

bool is_base(const Sequence& seq, const AdmissibleOptions& opts) {
  if (seq.size() == 3) return opts.allow_p2_base && seq == Sequence{1, 1, 1};
  if (seq.size() != 4) return false;
  // Every rotation and reflection of (0,k,0,-k) has one of these two shapes.
  const bool odd_zero = seq[0] == 0 && seq[2] == 0 && seq[1] == -seq[3];
  const bool even_zero = seq[1] == 0 && seq[3] == 0 && seq[0] == -seq[2];
  return odd_zero || even_zero;
}

std::optional<ReductionPath> reduction_path(const Sequence& seq, const AdmissibleOptions& opts) {
  if (seq.size() < 3) return std::nullopt;
  std::set<Sequence> failed;
  std::vector<int> downs;
  Sequence found_base;
  std::function<bool(const Sequence&)> search = [&](const Sequence& s) -> bool {
    if (total(s) != required_sum(s.size())) return false;
    if (is_base(s, opts)) {
      found_base = s;
      return true;
    }
    if (s.size() <= 3) return false;
    const Sequence key = canonical_form(s);
    if (failed.count(key)) return false;
    for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
      if (s[static_cast<std::size_t>(i - 1)] != -1) continue;
      downs.push_back(i);
      if (search(blow_down(s, i))) return true;
      downs.pop_back();
    }
    failed.insert(key);
    return false;
  };
  if (!search(seq)) return std::nullopt;
  ReductionPath path;
  path.base = found_base;
  path.steps.assign(downs.rbegin(), downs.rend());
  return path;
}

bool is_admissible(const Sequence& seq, const AdmissibleOptions& opts) {
  return reduction_path(seq, opts).has_value();
}

Sequence replay(const ReductionPath& path) {
  Sequence s = path.base;
  for (int m : path.steps) s = augment(s, m);
  return s;
}

std::vector<Sequence> generate_admissible(int n, Int lo, std::optional<Int> hi, const AdmissibleOptions& opts) {
  if (n < 3) throw DomainError("admissible sequences have length >= 3");
  if (hi && *hi < lo) throw DomainError("entry ceiling below floor");
  auto in_window = [&](const Sequence& s) {
    return std::all_of(s.begin(), s.end(), [&](Int v) { return v >= lo && (!hi || v <= *hi); });
  };
  auto above_floor = [&](const Sequence& s) {
    return std::all_of(s.begin(), s.end(), [&](Int v) { return v >= lo; });
  };
  std::set<Sequence> out;
  if (opts.allow_p2_base && n == 3) {
    const Sequence p2{1, 1, 1};
    if (in_window(p2)) out.insert(p2);
    return {out.begin(), out.end()};
  }
  if (n == 3) return {};
  // Augmentation lowers each surviving entry by at most 1 per step, so the
  // -k entry ends in [-k-(n-4), -k] and the k entry in [k-(n-4), k]. Both must
  // land in [lo, hi], giving 0 <= k <= min(-lo, hi + n - 4) up to rotation.
  Int kmax = -lo;
  if (hi) kmax = std::min(kmax, *hi + n - 4);
  std::set<Sequence> level;
  for (Int k = 0; k <= kmax; ++k) {
    Sequence b{0, k, 0, -k};
    if (above_floor(b)) level.insert(canonical_form(b));
  }
  if (opts.allow_p2_base) {
    // Augmentations of (1,1,1) are already of the form (0,k,0,-k).
    for (int m = 1; m <= 4; ++m) {
      Sequence s = augment({1, 1, 1}, m);
      if (above_floor(s)) level.insert(canonical_form(s));
    }
  }
  for (int len = 4; len < n; ++len) {
    std::set<Sequence> next;
    for (const auto& s : level)
      for (int m = 1; m <= len + 1; ++m) {
        Sequence t = augment(s, m);
        if (above_floor(t)) next.insert(canonical_form(t));
      }
    level = std::move(next);
  }
  for (const auto& s : level)
    if (in_window(s)) out.insert(s);
  return {out.begin(), out.end()};
}

CyclicStrongClassification classify_cyclic_strong(const AdmissibleOptions& opts) {
  CyclicStrongClassification c;
  for (int n = 4; n <= 9; ++n)
    for (auto& s : generate_admissible(n, -2, std::nullopt, opts)) c.rows.push_back(std::move(s));
  if (opts.allow_p2_base) c.p2_row = Sequence{1, 1, 1};
  return c;
}

std::vector<Sequence> strong_not_cyclic_orientations(const Sequence& seq) {
  std::set<Sequence> out;
  const int n = static_cast<int>(seq.size());
  const Sequence rev(seq.rbegin(), seq.rend());
  for (const Sequence* base : {&seq, &rev})
    for (int k = 0; k < n; ++k) {
      Sequence s = shift(*base, k);
      if (s.back() <= -3 && std::all_of(s.begin(), s.end() - 1, [](Int v) { return v >= -2; })) out.insert(s);
    }
  return {out.begin(), out.end()};
}

std::optional<std::string> matches_strong_family(const Sequence& seq) {
  const std::size_t n = seq.size();
  if (n < 4) throw DomainError("family matching needs length >= 4");
  if (seq.back() > -3 || !std::all_of(seq.begin(), seq.end() - 1, [](Int v) { return v >= -2; }))
    throw DomainError("family matching needs a_1..a_{n-1} >= -2 and a_n <= -3, got " + to_string(seq));
  const Sequence w(seq.begin(), seq.end() - 1);
  const Sequence rw(w.rbegin(), w.rend());
  if (auto tag = match_oriented(w, seq.back(), static_cast<Int>(n))) return tag;
  return match_oriented(rw, seq.back(), static_cast<Int>(n));
}

Le5Classification classify_length_le5(Int bound) {
  if (bound < 1) throw DomainError("bound must be >= 1");
  Le5Classification c;
  c.bound = bound;
  const Int lo = -bound - 2;
  const Int hi = bound + 2;
  const AdmissibleOptions with_p2{true};
  std::set<Sequence> found;
  for (int n = 3; n <= 5; ++n)
    for (auto& s : generate_admissible(n, lo, hi, with_p2)) found.insert(s);
  c.enumerated.assign(found.begin(), found.end());

  auto fits = [&](const Sequence& s) {
    return std::all_of(s.begin(), s.end(), [&](Int v) { return v >= lo && v <= hi; });
  };
  std::set<Sequence> expected;
  expected.insert(canonical_form({1, 1, 1}));
  c.rows.push_back({"P2", 0, {1, 1, 1}});
  for (Int m = lo - 2; m <= hi + 2; ++m) {
    const Sequence s{m, 0, -m, 0};
    if (fits(s)) expected.insert(canonical_form(s));
    if (m >= 0 && m <= bound) c.rows.push_back({"F", m, s});
  }
  for (Int s5 = lo - 2; s5 <= hi + 2; ++s5) {
    const Sequence s{-1, s5, 0, -s5 - 1, -1};
    if (fits(s)) expected.insert(canonical_form(s));
    if (s5 >= -bound && s5 <= bound) c.rows.push_back({"5s", s5, s});
  }
  c.expected.assign(expected.begin(), expected.end());
  c.matches = c.expected == c.enumerated;
  return c;
}

}  // namespace toricsys
