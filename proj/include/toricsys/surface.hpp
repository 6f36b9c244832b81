#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toricsys/lattice.hpp"

namespace toricsys {

struct LoSloStatus {
  bool lo = false;
  bool slo = false;
  bool operator==(const LoSloStatus&) const = default;
};

struct CohomologyProfile {
  bool h0_positive = false;
  bool h2_positive = false;
  std::optional<Int> h1;  // set only when h0 and h2 both vanish
};

// All D with D^2 = r and D.K = -2 - r, sorted lexicographically.
std::vector<DivisorClass> enumerate_r_classes(const LatticePtr& lattice, Int r);

// A weak del Pezzo surface given by its lattice and its irreducible (-2)-curves.
// Every cache is filled by the constructor; the object is immutable afterwards.
class SurfaceModel {
 public:
  SurfaceModel(LatticePtr lattice, std::vector<DivisorClass> simple_roots, std::string name = {});

  const std::string& name() const { return name_; }
  const LatticePtr& lattice() const { return lattice_; }
  Int degree() const { return lattice_->degree(); }

  // All sorted lexicographically.
  const std::vector<DivisorClass>& simple_roots() const { return simple_roots_; }
  const std::vector<DivisorClass>& root_system() const { return roots_; }
  const std::vector<DivisorClass>& effective_roots() const { return effective_roots_; }
  const std::vector<DivisorClass>& minus_one_classes() const { return minus_one_; }
  const std::vector<DivisorClass>& irreducible_minus1() const { return irreducible_minus1_; }
  const std::vector<DivisorClass>& monoid_generators() const { return generators_; }
  const DivisorClass& ample_probe() const { return *ample_probe_; }

  std::string dynkin_type() const { return dynkin_; }

  bool is_simple_root(const DivisorClass& d) const;
  bool is_effective_root(const DivisorClass& d) const;
  bool is_effective(const DivisorClass& d) const;

 private:
  bool effective_search(const DivisorClass& d) const;

  std::string name_;
  LatticePtr lattice_;
  std::vector<DivisorClass> simple_roots_;
  std::vector<DivisorClass> roots_;
  std::vector<DivisorClass> effective_roots_;
  std::vector<DivisorClass> minus_one_;
  std::vector<DivisorClass> irreducible_minus1_;
  std::vector<DivisorClass> generators_;
  std::optional<DivisorClass> ample_probe_;
  std::string dynkin_;
  // generator_duals_[g][i] = G_g . e_i, so D.G_g is a plain dot product with coords.
  std::vector<std::vector<Int>> generator_duals_;
  std::vector<Int> generator_squares_;
  std::vector<Int> probe_dual_;
  std::vector<Int> anticanonical_dual_;
};

using SurfacePtr = std::shared_ptr<const SurfaceModel>;

SurfacePtr build_surface(LatticePtr lattice, std::vector<DivisorClass> simple_roots,
                         std::string name = {});

bool is_effective(const SurfaceModel& x, const DivisorClass& d);
LoSloStatus lo_slo_status(const SurfaceModel& x, const DivisorClass& d);
CohomologyProfile cohomology_profile(const SurfaceModel& x, const DivisorClass& d);

struct RootPartition {
  bool ok = false;
  std::size_t roots = 0;
  std::size_t effective = 0;
  std::size_t anti_effective = 0;
  std::size_t slo = 0;
  std::size_t lo = 0;
  std::vector<std::string> problems;
};

RootPartition root_partition(const SurfaceModel& x);
inline bool verify_root_partition(const SurfaceModel& x) { return root_partition(x).ok; }

// Dynkin type of a set of (-2)-classes with pairwise products in {0, 1},
// e.g. "A1+2A2" or "" for the empty set. Throws DomainError when the
// configuration is not a disjoint union of ADE diagrams.
std::string dynkin_type(const std::vector<DivisorClass>& simple_roots);

struct CatalogEntry {
  std::string name;
  Int degree = 0;
  std::string lattice_id;
  std::string type;           // Dynkin type, "" for del Pezzo
  std::optional<int> lines;   // expected number of irreducible (-1)-curves
  std::vector<std::vector<Int>> simple_roots;
};

const std::vector<CatalogEntry>& catalog_entries();
std::vector<std::string> catalog_names();
SurfacePtr catalog_surface(const std::string& name);

}  // namespace toricsys
