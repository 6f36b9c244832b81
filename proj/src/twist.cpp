#include "toricsys/twist.hpp"

#include <algorithm>
#include <set>

namespace toricsys {

std::optional<DivisorClass> twist_line_bundle(const DivisorClass& c, const DivisorClass& d) {
  if (square(c) != -2 || intersect(c, c.lattice()->canonical()) != 0)
    throw DomainError("twisting needs a (-2)-class, got " + c.to_string());
  const Int p = intersect(d, c);
  if (p == 0) return d;
  if (p == 1) return d + c;
  return std::nullopt;
}

bool is_torsion_exceptional_divisor(const SurfaceModel& x, const DivisorClass& d) {
  if (square(d) != -1 || !is_numerically_lo(d)) return false;
  return x.is_effective(d) && lo_slo_status(x, d).slo;
}

ReductionTrace reduce(const SurfaceModel& x, const DivisorClass& d) {
  if (x.degree() < 2) throw DomainError("reduction needs a surface of degree >= 2");
  if (!is_torsion_exceptional_divisor(x, d))
    throw DomainError(d.to_string() + " is not an effective strong left-orthogonal (-1)-class");
  ReductionTrace trace{d, {}, d};
  std::set<DivisorClass> visited{d};
  DivisorClass cur = d;
  for (;;) {
    const auto& roots = x.simple_roots();
    auto it = std::find_if(roots.begin(), roots.end(), [&](const DivisorClass& c) { return intersect(c, cur) == -1; });
    if (it == roots.end()) break;
    cur = cur - *it;
    trace.steps.push_back(*it);
    if (square(cur) != -1) throw InternalError("reduction left the (-1)-classes at " + cur.to_string());
    if (!lo_slo_status(x, cur).slo) throw InternalError("reduction lost strong left-orthogonality at " + cur.to_string());
    if (!visited.insert(cur).second) throw InternalError("reduction revisited " + cur.to_string());
  }
  trace.result = cur;
  const auto& irr = x.irreducible_minus1();
  if (!std::binary_search(irr.begin(), irr.end(), cur))
    throw InternalError("reduction of " + d.to_string() + " stopped at " + cur.to_string() +
                        ", which is not an irreducible (-1)-curve");
  return trace;
}

TraceCheck check_trace(const SurfaceModel& x, const ReductionTrace& trace) {
  auto fail = [](std::string why) { return TraceCheck{false, std::move(why)}; };
  if (!is_torsion_exceptional_divisor(x, trace.start))
    return fail("start " + trace.start.to_string() + " is not an effective slo (-1)-class");
  DivisorClass cur = trace.start;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const DivisorClass& c = trace.steps[i];
    const std::string at = "step " + std::to_string(i + 1) + ": ";
    if (c.lattice()->id() != x.lattice()->id()) return fail(at + "class in another lattice");
    if (!x.is_simple_root(c)) return fail(at + c.to_string() + " is not an irreducible (-2)-curve");
    const Int p = intersect(c, cur);
    if (p != -1) return fail(at + "C.D = " + std::to_string(p) + ", expected -1");
    cur = cur - c;
    if (square(cur) != -1) return fail(at + "square left -1");
  }
  if (!(cur == trace.result)) return fail("replay ends at " + cur.to_string() + ", trace claims " + trace.result.to_string());
  for (const auto& c : x.simple_roots())
    if (intersect(cur, c) < 0) return fail("result meets " + c.to_string() + " negatively");
  return {true, {}};
}

}  // namespace toricsys
