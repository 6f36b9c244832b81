#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "toricsys/errors.hpp"

namespace toricsys {

using Int = std::int64_t;

// Largest Picard rank handled (blow-up of P^2 in 8 points).
inline constexpr std::size_t kMaxRank = 9;

namespace checked {
// Exact integer arithmetic; overflow throws InternalError instead of wrapping.
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
}  // namespace checked

class DivisorClass;

// A unimodular integer lattice with a distinguished canonical class.
// Instances are immutable and shared; the built-in lattices are singletons,
// so two classes live in the same lattice iff their lattice ids agree.
class PicardLattice : public std::enable_shared_from_this<PicardLattice> {
 public:
  PicardLattice(std::string id, std::vector<std::string> basis_labels,
                std::vector<Int> gram, std::vector<Int> canonical,
                int blowup_points = -1);

  const std::string& id() const { return id_; }
  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  Int gram(std::size_t i, std::size_t j) const { return gram_[i * rank() + j]; }
  std::span<const Int> canonical_coords() const { return canonical_; }
  Int degree() const { return degree_; }
  Int determinant() const;

  // Bilinear form on raw coordinate vectors of length rank().
  Int pair(std::span<const Int> a, std::span<const Int> b) const;

  DivisorClass zero() const;
  DivisorClass basis(std::size_t i) const;
  DivisorClass canonical() const;
  DivisorClass make(std::vector<Int> coords) const;

  // Number of blown-up points for "P2"/"Bl<n>" lattices, -1 for Hirzebruch lattices.
  int blowup_points() const { return blowup_points_; }

 private:
  std::string id_;
  std::vector<std::string> labels_;
  std::vector<Int> gram_;
  std::vector<Int> canonical_;
  Int degree_ = 0;
  int blowup_points_ = -1;
};

using LatticePtr = std::shared_ptr<const PicardLattice>;

enum class HirzebruchKind { F0, F2 };

// Pic of P^2 blown up in n points: basis L, E1..En, gram diag(1,-1,..,-1),
// K = -3L + E1 + ... + En. The n = 0 lattice has id "P2", the others "Bl<n>".
LatticePtr make_blowup_lattice(int n);

// F0 = P1 x P1 in the basis (H1, H2); F2 in the basis (F, S) with F^2 = 0,
// S^2 = 2 and F.S = 1, so that S - 2F is the negative section.
LatticePtr make_hirzebruch_lattice(HirzebruchKind kind);

// Resolves "P2", "Bl0".."Bl8", "F0", "F2".
LatticePtr lattice_by_id(const std::string& id);

// An integer coordinate vector in a lattice basis.
class DivisorClass {
 public:
  DivisorClass(LatticePtr lattice, std::vector<Int> coords);

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<Int>& coords() const { return coords_; }
  Int operator[](std::size_t i) const { return coords_[i]; }
  std::size_t rank() const { return coords_.size(); }
  bool is_zero() const;

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  DivisorClass operator*(Int c) const;

  bool operator==(const DivisorClass& other) const;
  // Lexicographic on coordinates; the canonical order used for every sorted output.
  std::strong_ordering operator<=>(const DivisorClass& other) const;

  std::string to_string() const;

 private:
  LatticePtr lattice_;
  std::vector<Int> coords_;
};

inline DivisorClass operator*(Int c, const DivisorClass& d) { return d * c; }

void require_same_lattice(const DivisorClass& a, const DivisorClass& b);

Int intersect(const DivisorClass& a, const DivisorClass& b);
inline Int square(const DivisorClass& d) { return intersect(d, d); }

// chi(O(D)) = 1 + D.(D - K)/2.
Int euler_char(const DivisorClass& d);

// chi(O(D1), O(D2)) = chi(D2 - D1).
Int euler_char_pair(const DivisorClass& d1, const DivisorClass& d2);

// D^2 + D.K = -2, checked against chi(-D) = 0.
bool is_numerically_lo(const DivisorClass& d);

DivisorClass add(const DivisorClass& a, const DivisorClass& b);
DivisorClass negate(const DivisorClass& d);
DivisorClass scale(const DivisorClass& d, Int c);

struct DivisorClassHash {
  std::size_t operator()(const DivisorClass& d) const noexcept;
};

}  // namespace toricsys
