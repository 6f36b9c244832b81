#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricsys/surface.hpp"

namespace toricsys {

// Class-level action of the spherical twist along O_C(-1) on O(D): D if
// D.C = 0, D + C if D.C = 1, and nullopt (not a line bundle) otherwise.
std::optional<DivisorClass> twist_line_bundle(const DivisorClass& c, const DivisorClass& d);

// D effective, D^2 = -1 and D strong left-orthogonal.
bool is_torsion_exceptional_divisor(const SurfaceModel& x, const DivisorClass& d);

struct ReductionTrace {
  DivisorClass start;
  std::vector<DivisorClass> steps;
  DivisorClass result;
};

// Repeatedly subtracts the least simple root C with C.D = -1 until D meets
// every simple root nonnegatively. Needs degree >= 2.
ReductionTrace reduce(const SurfaceModel& x, const DivisorClass& d);

// Replays a trace from scratch; problem is empty iff the trace is valid.
struct TraceCheck {
  bool ok = false;
  std::string problem;
};

TraceCheck check_trace(const SurfaceModel& x, const ReductionTrace& trace);
inline bool verify_trace(const SurfaceModel& x, const ReductionTrace& trace) { return check_trace(x, trace).ok; }

}  // namespace toricsys
