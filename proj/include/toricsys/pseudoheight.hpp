#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricsys/surface.hpp"
#include "toricsys/toric.hpp"

namespace toricsys {

// First q with h^q(D) != 0, as far as the effectivity oracle can tell:
// one of 0, 1, 2 or infinity.
struct EInvariant {
  int value = 0;
  bool infinite = false;

  static EInvariant finite(int v) { return {v, false}; }
  static EInvariant infinity() { return {0, true}; }
  bool operator==(const EInvariant&) const = default;
  std::string to_string() const { return infinite ? "infinity" : std::to_string(value); }
};

EInvariant e_invariant(const SurfaceModel& x, const DivisorClass& d);

struct ChainEvaluation {
  std::vector<int> indices;         // 1-based, strictly increasing
  std::vector<EInvariant> terms;    // one per gap, the last one wraps through -K
  std::optional<Int> total;         // nullopt for infinity
};

ChainEvaluation evaluate_chain(const SurfaceModel& x, const ToricSystem& ts, const std::vector<int>& indices);

struct PseudoheightResult {
  std::optional<Int> value;  // nullopt for infinity
  ChainEvaluation argmin;
  std::size_t chains = 0;
};

// Minimum over chains a_0 < ... < a_p with p_min <= p <= n - 1. Chains are
// visited by size and then lexicographically; the first minimum is reported.
PseudoheightResult pseudoheight(const SurfaceModel& x, const ToricSystem& ts, int p_min = 1);

enum class Fullness { PossiblyFull, NotFull };
std::string fullness_name(Fullness f);
Fullness fullness_obstruction(const SurfaceModel& x, const ToricSystem& ts, int p_min = 1);

bool has_effective_segment(const SurfaceModel& x, const ToricSystem& ts);

}  // namespace toricsys
