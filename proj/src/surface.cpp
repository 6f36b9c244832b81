#include "toricsys/surface.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace toricsys {

namespace {

Int isqrt(Int v) {
  if (v <= 0) return 0;
  Int r = 0;
  Int bit = Int{1} << 30;
  while (bit > v) bit >>= 2;
  while (bit != 0) {
    if (v >= r + bit) {
      v -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
    bit >>= 2;
  }
  return r;
}

// b_pos.. with sum s and square sum q, written as coords[pos + 1] = -b.
void enumerate_tail(std::vector<Int>& coords, std::size_t pos, Int s, Int q,
                    std::vector<std::vector<Int>>& out) {
  const std::size_t n = coords.size() - 1;
  const Int k = static_cast<Int>(n - pos);
  if (k == 0) {
    if (s == 0 && q == 0) out.push_back(coords);
    return;
  }
  if (q < 0 || checked::mul(s, s) > checked::mul(k, q)) return;
  if (k == 1) {
    if (checked::mul(s, s) == q) {
      coords[pos + 1] = -s;
      out.push_back(coords);
    }
    return;
  }
  const Int m = isqrt(q);
  for (Int b = -m; b <= m; ++b) {
    coords[pos + 1] = -b;
    enumerate_tail(coords, pos + 1, s - b, q - b * b, out);
  }
}

bool blowup_a_admissible(Int n, Int r, Int a) {
  // (9 - n) a^2 - 6 a (r + 2) + (r + 2)^2 + n r <= 0, from Cauchy-Schwarz on the b_i.
  const Int d = 9 - n;
  const Int v = checked::add(
      checked::sub(checked::mul(d, checked::mul(a, a)), checked::mul(6, checked::mul(a, r + 2))),
      checked::add(checked::mul(r + 2, r + 2), checked::mul(n, r)));
  return v <= 0;
}

std::vector<std::vector<Int>> blowup_r_coords(int n, Int r) {
  std::vector<std::vector<Int>> out;
  if (n == 0) {
    // a^2 = r and 3a = r + 2.
    for (Int a = -3; a <= 3; ++a)
      if (a * a == r && 3 * a == r + 2) out.push_back({a});
    return out;
  }
  const Int d = 9 - n;
  // The feasible a form an interval around the vertex 3(r+2)/d, and the
  // truncated vertex lies within distance 1 of it.
  const Int centre = (3 * (r + 2)) / d;
  Int lo = centre - 1;
  Int hi = centre + 1;
  while (blowup_a_admissible(n, r, lo)) --lo;
  while (blowup_a_admissible(n, r, hi)) ++hi;
  std::vector<Int> coords(static_cast<std::size_t>(n) + 1, 0);
  for (Int a = lo + 1; a < hi; ++a) {
    if (!blowup_a_admissible(n, r, a)) continue;
    coords[0] = a;
    enumerate_tail(coords, 0, 3 * a - 2 - r, a * a - r, out);
  }
  return out;
}

std::vector<Int> dual_of(const PicardLattice& lat, std::span<const Int> v) {
  std::vector<Int> out(lat.rank());
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < lat.rank(); ++j) s = checked::add(s, checked::mul(lat.gram(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

Int dot(const std::vector<Int>& a, const Int* b, std::size_t n) {
  Int s = 0;
  for (std::size_t i = 0; i < n; ++i) s = checked::add(s, checked::mul(a[i], b[i]));
  return s;
}

using Key = std::array<Int, kMaxRank>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Int c : k) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    return h;
  }
};

std::vector<DivisorClass> sorted_unique(std::vector<DivisorClass> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains_sorted(const std::vector<DivisorClass>& v, const DivisorClass& d) {
  return std::binary_search(v.begin(), v.end(), d);
}

std::string format_type(std::map<std::string, int> counts) {
  // Order: A before D before E, then by rank.
  std::vector<std::pair<std::string, int>> items(counts.begin(), counts.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first[0] != y.first[0]) return x.first[0] < y.first[0];
    return std::stoi(x.first.substr(1)) < std::stoi(y.first.substr(1));
  });
  std::string out;
  for (const auto& [name, count] : items) {
    if (!out.empty()) out += "+";
    if (count > 1) out += std::to_string(count);
    out += name;
  }
  return out;
}

}  // namespace

std::vector<DivisorClass> enumerate_r_classes(const LatticePtr& lattice, Int r) {
  std::vector<std::vector<Int>> coords;
  const int n = lattice->blowup_points();
  if (n >= 0) {
    coords = blowup_r_coords(n, r);
  } else if (lattice->id() == "F0" || lattice->id() == "F2") {
    if (r % 2 == 0) {
      const Int s = r / 2;
      if (lattice->id() == "F0") {
        coords = {{1, s}, {s, 1}};
      } else {
        coords = {{s - 1, 1}, {1 - s, s}};
      }
    }
  } else {
    throw DomainError("r-class enumeration is only available on built-in lattices");
  }
  std::vector<DivisorClass> out;
  for (auto& c : coords) {
    DivisorClass d = lattice->make(std::move(c));
    if (square(d) != r || intersect(d, lattice->canonical()) != -2 - r)
      throw InternalError("r-class enumeration produced " + d.to_string());
    out.push_back(std::move(d));
  }
  return sorted_unique(std::move(out));
}

std::string dynkin_type(const std::vector<DivisorClass>& simple_roots) {
  const std::size_t m = simple_roots.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (square(simple_roots[i]) != -2) throw DomainError("not a (-2)-class: " + simple_roots[i].to_string());
    for (std::size_t j = i + 1; j < m; ++j) {
      const Int p = intersect(simple_roots[i], simple_roots[j]);
      if (p == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      } else if (p != 0) {
        throw DomainError("simple roots " + simple_roots[i].to_string() + " and " +
                          simple_roots[j].to_string() + " meet with multiplicity " + std::to_string(p));
      }
    }
  }
  std::vector<int> comp(m, -1);
  std::map<std::string, int> counts;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> nodes{s};
    comp[s] = static_cast<int>(s);
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (std::size_t v : adj[nodes[k]])
        if (comp[v] < 0) {
          comp[v] = static_cast<int>(s);
          nodes.push_back(v);
        }
    std::size_t edges = 0;
    for (std::size_t v : nodes) edges += adj[v].size();
    edges /= 2;
    if (edges + 1 != nodes.size()) throw DomainError("root configuration contains a cycle");
    const std::size_t size = nodes.size();
    std::vector<std::size_t> branch_nodes;
    for (std::size_t v : nodes)
      if (adj[v].size() > 3) throw DomainError("root configuration has a node of valence > 3");
      else if (adj[v].size() == 3) branch_nodes.push_back(v);
    if (branch_nodes.empty()) {
      ++counts["A" + std::to_string(size)];
      continue;
    }
    if (branch_nodes.size() > 1) throw DomainError("root configuration is not of ADE type");
    const std::size_t centre = branch_nodes[0];
    std::vector<std::size_t> arms;
    for (std::size_t start : adj[centre]) {
      std::size_t len = 1;
      std::size_t prev = centre;
      std::size_t cur = start;
      while (adj[cur].size() == 2) {
        const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) ++counts["D" + std::to_string(size)];
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
      ++counts["E" + std::to_string(size)];
    else throw DomainError("root configuration is not of ADE type");
  }
  return format_type(counts);
}

SurfaceModel::SurfaceModel(LatticePtr lattice, std::vector<DivisorClass> simple_roots,
                           std::string name)
    : name_(std::move(name)), lattice_(std::move(lattice)) {
  const auto& lat = *lattice_;
  const DivisorClass k = lat.canonical();
  for (const auto& c : simple_roots) {
    if (c.lattice()->id() != lat.id()) throw DomainError("simple root in the wrong lattice: " + c.to_string());
    if (square(c) != -2 || intersect(c, k) != 0)
      throw DomainError("simple root is not a (-2)-class: " + c.to_string());
  }
  simple_roots_ = sorted_unique(std::move(simple_roots));
  dynkin_ = toricsys::dynkin_type(simple_roots_);

  roots_ = enumerate_r_classes(lattice_, -2);
  minus_one_ = enumerate_r_classes(lattice_, -1);

  // Positive roots of the subsystem: close the simple roots under adding a
  // simple root with product 1.
  std::set<DivisorClass> eff(simple_roots_.begin(), simple_roots_.end());
  std::vector<DivisorClass> frontier(simple_roots_);
  while (!frontier.empty()) {
    std::vector<DivisorClass> next;
    for (const auto& r : frontier)
      for (const auto& c : simple_roots_)
        if (intersect(r, c) == 1) {
          DivisorClass s = r + c;
          if (eff.insert(s).second) next.push_back(std::move(s));
        }
    frontier = std::move(next);
  }
  effective_roots_.assign(eff.begin(), eff.end());
  for (const auto& r : effective_roots_) {
    if (!contains_sorted(roots_, r)) throw InternalError("effective root outside R(X): " + r.to_string());
    if (eff.count(-r)) throw DomainError("simple roots are linearly dependent");
  }

  for (const auto& e : minus_one_) {
    bool ok = true;
    for (const auto& c : simple_roots_)
      if (intersect(e, c) < 0) ok = false;
    if (ok) irreducible_minus1_.push_back(e);
  }

  const int n = lat.blowup_points();
  const Int d = lat.degree();
  if (lat.id() == "F0") {
    generators_ = {lat.basis(0), lat.basis(1)};
  } else if (lat.id() == "F2") {
    generators_ = {lat.basis(0), lat.make({-2, 1})};
  } else if (n == 0) {
    generators_ = {lat.basis(0)};
  } else if (n == 1) {
    generators_ = {lat.basis(1), lat.make({1, -1})};
  } else {
    generators_ = irreducible_minus1_;
    generators_.insert(generators_.end(), simple_roots_.begin(), simple_roots_.end());
    // On degree 1 the anticanonical class is effective but not a sum of
    // (-1)-curves and (-2)-curves, so it is a generator of its own.
    if (d == 1) generators_.push_back(-k);
  }
  if (lat.id() == "F2" || n <= 1) {
    for (const auto& c : simple_roots_)
      if (std::find(generators_.begin(), generators_.end(), c) == generators_.end())
        throw DomainError("surface " + lat.id() + " does not carry the (-2)-curve " + c.to_string());
  }
  generators_ = sorted_unique(std::move(generators_));
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (intersect(generators_[i], generators_[j]) < 0)
        throw InternalError("distinct monoid generators meet negatively: " + generators_[i].to_string() +
                            ", " + generators_[j].to_string());

  for (const auto& g : generators_) {
    generator_duals_.push_back(dual_of(lat, g.coords()));
    generator_squares_.push_back(square(g));
  }
  anticanonical_dual_ = dual_of(lat, (-k).coords());
  for (const auto& g : generators_)
    if (intersect(g, -k) < 0) throw InternalError("-K is not nef against " + g.to_string());

  // Ample probe H = N(-K) - S with S the sum of the positive roots: S.C = -2
  // for every simple root C and -K.C = 0, so H.C = 2; N is the least positive
  // integer that makes H meet every other generator positively with H^2 > 0.
  DivisorClass root_sum = lat.zero();
  for (const auto& r : effective_roots_) root_sum = root_sum + r;
  for (Int big = 1; big <= 1000 && !ample_probe_; ++big) {
    const DivisorClass h = (-k) * big - root_sum;
    bool ok = square(h) > 0;
    for (const auto& g : generators_) ok = ok && intersect(h, g) >= 1;
    if (ok) ample_probe_ = h;
  }
  if (!ample_probe_) throw InternalError("no ample probe found for surface " + lat.id());
  probe_dual_ = dual_of(lat, ample_probe_->coords());
}

bool SurfaceModel::is_simple_root(const DivisorClass& d) const { return contains_sorted(simple_roots_, d); }

bool SurfaceModel::is_effective_root(const DivisorClass& d) const {
  return contains_sorted(effective_roots_, d);
}

bool SurfaceModel::is_effective(const DivisorClass& d) const {
  if (d.lattice()->id() != lattice_->id())
    throw DomainError("class in lattice " + d.lattice()->id() + " tested on surface over " + lattice_->id());
  return effective_search(d);
}

bool SurfaceModel::effective_search(const DivisorClass& start) const {
  const std::size_t rank = lattice_->rank();
  const std::size_t ng = generators_.size();
  std::unordered_set<Key, KeyHash> failed;
  Key init{};
  std::copy(start.coords().begin(), start.coords().end(), init.begin());

  std::function<bool(Key)> search = [&](Key d) -> bool {
    // Peel generators of negative square that d meets negatively: any
    // decomposition of d must contain them.
    for (;;) {
      bool zero = true;
      for (std::size_t i = 0; i < rank; ++i) zero = zero && d[i] == 0;
      if (zero) return true;
      if (dot(probe_dual_, d.data(), rank) <= 0) return false;
      if (dot(anticanonical_dual_, d.data(), rank) < 0) return false;
      bool peeled = false;
      for (std::size_t g = 0; g < ng; ++g) {
        if (dot(generator_duals_[g], d.data(), rank) >= 0) continue;
        if (generator_squares_[g] >= 0) return false;
        for (std::size_t i = 0; i < rank; ++i) d[i] = checked::sub(d[i], generators_[g][i]);
        peeled = true;
        break;
      }
      if (!peeled) break;
    }
    if (failed.count(d)) return false;
    for (std::size_t g = 0; g < ng; ++g) {
      Key next = d;
      for (std::size_t i = 0; i < rank; ++i) next[i] = checked::sub(next[i], generators_[g][i]);
      if (search(next)) return true;
    }
    failed.insert(d);
    return false;
  };
  return search(init);
}

SurfacePtr build_surface(LatticePtr lattice, std::vector<DivisorClass> simple_roots, std::string name) {
  return std::make_shared<const SurfaceModel>(std::move(lattice), std::move(simple_roots), std::move(name));
}

bool is_effective(const SurfaceModel& x, const DivisorClass& d) { return x.is_effective(d); }

LoSloStatus lo_slo_status(const SurfaceModel& x, const DivisorClass& d) {
  if (!is_numerically_lo(d)) throw DomainError("class is not numerically left-orthogonal: " + d.to_string());
  const Int r = square(d);
  const Int deg = x.degree();
  if (r <= -3) return {!x.is_effective(-d), false};
  if (r == -2) {
    const bool anti = x.is_effective(-d);
    return {!anti, !anti && !x.is_effective(d)};
  }
  if (r <= deg - 3) return {true, true};
  const bool ok = !x.is_effective(x.lattice()->canonical() + d);
  return {ok, ok};
}

CohomologyProfile cohomology_profile(const SurfaceModel& x, const DivisorClass& d) {
  CohomologyProfile p;
  p.h0_positive = x.is_effective(d);
  p.h2_positive = x.is_effective(x.lattice()->canonical() - d);
  if (!p.h0_positive && !p.h2_positive) {
    const Int h1 = -euler_char(d);
    if (h1 < 0)
      throw InternalError("negative h1 for " + d.to_string() + " on " + x.name() +
                          ": the effectivity oracle missed a section");
    p.h1 = h1;
  }
  return p;
}

RootPartition root_partition(const SurfaceModel& x) {
  RootPartition rp;
  rp.roots = x.root_system().size();
  for (const auto& r : x.root_system()) {
    const bool eff = x.is_effective_root(r);
    const bool anti = x.is_effective_root(-r);
    const LoSloStatus st = lo_slo_status(x, r);
    const int parts = int(eff) + int(anti) + int(st.slo);
    if (eff) ++rp.effective;
    if (anti) ++rp.anti_effective;
    if (st.slo) ++rp.slo;
    if (st.lo) ++rp.lo;
    if (parts != 1) rp.problems.push_back(r.to_string() + " lies in " + std::to_string(parts) + " parts");
    if (st.lo != (eff || st.slo)) rp.problems.push_back(r.to_string() + " breaks R^lo = R^eff + R^slo");
    if (x.is_effective(r) != eff)
      rp.problems.push_back(r.to_string() + ": monoid effectivity disagrees with the root closure");
  }
  rp.ok = rp.problems.empty();
  return rp;
}

}  // namespace toricsys
