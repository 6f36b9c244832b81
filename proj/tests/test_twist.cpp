#include <doctest.h>

#include "oracles.hpp"
#include "toricsys/json_io.hpp"
#include "toricsys/twist.hpp"

using namespace toricsys;

TEST_CASE("line bundle twists") {
  const auto lat = lattice_by_id("Bl3");
  const auto c = lat->make({0, 1, -1, 0});
  CHECK(twist_line_bundle(c, lat->make({1, 0, 0, 0})) == lat->make({1, 0, 0, 0}));
  CHECK(twist_line_bundle(c, lat->make({0, -1, 0, 0})) == lat->make({0, 0, -1, 0}));
  CHECK_FALSE(twist_line_bundle(c, lat->make({0, 1, 0, 0})).has_value());
  CHECK_THROWS_AS(twist_line_bundle(lat->make({0, 1, 0, 0}), lat->zero()), DomainError);
}

TEST_CASE("torsion exceptional divisors") {
  const auto x = catalog_surface("X7_A1");
  const auto lat = x->lattice();
  CHECK(is_torsion_exceptional_divisor(*x, lat->make({0, 0, 1})));
  CHECK(is_torsion_exceptional_divisor(*x, lat->make({0, 1, 0})));
  CHECK_FALSE(is_torsion_exceptional_divisor(*x, lat->make({0, 1, -1})));
  CHECK_FALSE(is_torsion_exceptional_divisor(*x, lat->make({0, -1, 0})));
}

TEST_CASE("reduction examples") {
  const auto x7 = catalog_surface("X7_A1");
  const auto a = reduce(*x7, x7->lattice()->make({0, 1, 0}));
  CHECK(a.steps == std::vector<DivisorClass>{x7->lattice()->make({0, 1, -1})});
  CHECK(a.result == x7->lattice()->make({0, 0, 1}));

  const auto x6 = catalog_surface("X6_A2");
  const auto l6 = x6->lattice();
  const auto b = reduce(*x6, l6->make({0, 1, 0, 0}));
  CHECK(b.steps == std::vector<DivisorClass>{l6->make({0, 1, -1, 0}), l6->make({0, 0, 1, -1})});
  CHECK(b.result == l6->make({0, 0, 0, 1}));

  const auto line = x6->irreducible_minus1().front();
  const auto c = reduce(*x6, line);
  CHECK(c.steps.empty());
  CHECK(c.result == line);

  CHECK_THROWS_AS(reduce(*x6, l6->make({0, 1, -1, 0})), DomainError);
  const auto dp1 = catalog_surface("dP1");
  CHECK_THROWS_AS(reduce(*dp1, dp1->minus_one_classes().front()), DomainError);
}

TEST_CASE("every effective (-1)-class reduces to a line") {
  std::size_t traces = 0, nontrivial = 0;
  for (const auto& name : catalog_names()) {
    const auto x = catalog_surface(name);
    if (x->degree() < 2) continue;
    const auto& irr = x->irreducible_minus1();
    for (const auto& d : x->minus_one_classes()) {
      if (!x->is_effective(d)) continue;
      INFO(name << " " << d.to_string());
      REQUIRE(is_torsion_exceptional_divisor(*x, d));
      const ReductionTrace t = reduce(*x, d);
      ++traces;
      nontrivial += !t.steps.empty();
      CHECK(std::binary_search(irr.begin(), irr.end(), t.result));
      DivisorClass expected = d;
      for (const auto& c : t.steps) expected = expected - c;
      CHECK(expected == t.result);
      CHECK(check_trace(*x, t).ok);
    }
  }
  CHECK(traces > 500);
  CHECK(nontrivial > 50);
}

TEST_CASE("trace checking rejects corrupted traces") {
  const auto x = catalog_surface("X6_A2");
  const auto lat = x->lattice();
  const ReductionTrace good = reduce(*x, lat->make({0, 1, 0, 0}));
  CHECK(verify_trace(*x, good));

  ReductionTrace zero_step = good;
  // E2-E3 meets the start E1 trivially, so it cannot open the trace.
  zero_step.steps.insert(zero_step.steps.begin(), lat->make({0, 0, 1, -1}));
  CHECK_FALSE(verify_trace(*x, zero_step));

  ReductionTrace non_root = good;
  non_root.steps.front() = lat->make({1, -1, -1, -1});
  CHECK_FALSE(verify_trace(*x, non_root));

  ReductionTrace wrong_result = good;
  wrong_result.result = lat->make({0, 0, 1, 0});
  CHECK_FALSE(verify_trace(*x, wrong_result));

  ReductionTrace stopped_early = good;
  stopped_early.steps.pop_back();
  stopped_early.result = lat->make({0, 0, 1, 0});
  CHECK_FALSE(verify_trace(*x, stopped_early));
}

TEST_CASE("traces round-trip through json") {
  const auto x = catalog_surface("X6_A2");
  const ReductionTrace t = reduce(*x, x->lattice()->make({0, 1, 0, 0}));
  const ReductionTrace back = trace_from_json(Json::parse(to_json(t).dump()));
  CHECK(back.start == t.start);
  CHECK(back.steps == t.steps);
  CHECK(back.result == t.result);
}
