#pragma once

#include <string>
#include <vector>

#include "toricsys/lattice.hpp"
#include "toricsys/surface.hpp"

namespace toricsys {

// A cyclically ordered list (A_1, ..., A_n) of classes in one lattice.
// Construction only checks lattice consistency; validate() checks the axioms.
// Public indices are 1-based and cyclic.
class ToricSystem {
 public:
  ToricSystem(LatticePtr lattice, std::vector<DivisorClass> entries);

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<DivisorClass>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  // Any integer index, reduced cyclically into 1..n.
  const DivisorClass& at(int i) const;

  bool operator==(const ToricSystem& other) const { return entries_ == other.entries_; }

 private:
  LatticePtr lattice_;
  std::vector<DivisorClass> entries_;
};

struct ValidationResult {
  bool valid = false;
  std::vector<std::string> problems;
};

ValidationResult validate(const ToricSystem& ts);

ToricSystem from_collection(const std::vector<DivisorClass>& divisors);
std::vector<DivisorClass> to_collection(const ToricSystem& ts, const DivisorClass& base);

// A_k + ... + A_l over the cyclic segment from k to l. The full cycle
// (l = k - 1 mod n) is rejected unless allow_full is set.
DivisorClass segment_sum(const ToricSystem& ts, int k, int l, bool allow_full = false);

std::vector<Int> self_intersections(const ToricSystem& ts);

struct Segment {
  int k = 0;  // 1-based start
  int l = 0;  // 1-based end, cyclic
  bool operator==(const Segment&) const = default;
};

// Every proper cyclic segment, ordered by start and then by length.
std::vector<Segment> proper_segments(int n);
inline bool wraps(const Segment& s) { return s.k > s.l; }

enum class Property { Exceptional, Strong, CyclicStrong };
std::string property_name(Property p);

struct Witness {
  Segment segment;
  Property property;
  std::string reason;
};

struct ExceptionalityReport {
  bool exceptional = false;
  bool strong = false;
  bool cyclic_strong = false;
  std::vector<Witness> witnesses;
  std::size_t segments_examined = 0;
  bool used_fast_path = false;
};

ExceptionalityReport exceptionality_naive(const SurfaceModel& x, const ToricSystem& ts);
ExceptionalityReport exceptionality_fast(const SurfaceModel& x, const ToricSystem& ts);

bool check_segment_bounds(const ToricSystem& ts, Int degree);

// True iff the entries span the lattice over the integers.
bool generates_picard(const ToricSystem& ts);

// Blow up one more point: E_{n+1} is inserted at position m in 1..n+1 and
// subtracted from its cyclic neighbours, mirroring augm_m on squares.
ToricSystem augment_blowup(const ToricSystem& ts, int m);

// (A_{k+1}, ..., A_n, A_1, ..., A_k).
ToricSystem cyclic_shift(const ToricSystem& ts, int k = 1);
// (A_{n-1}, ..., A_1, A_n).
ToricSystem reverse_symmetry(const ToricSystem& ts);

// Reflection x -> x + (x.r) r in a (-2)-class r, applied to every entry.
ToricSystem reflect(const ToricSystem& ts, const DivisorClass& root);

}  // namespace toricsys
