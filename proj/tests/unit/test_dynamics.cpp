#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lineops/catalog.hpp"
#include "lineops/dynamics.hpp"
#include "lineops/io.hpp"

using namespace lineops;
using S = MultiplicitySelector;

TEST_CASE("operator text") {
  auto a = OperatorSpec::parse("L{>=2,>=2}");
  REQUIRE(a.steps.size() == 1);
  CHECK(a.steps[0].nsel.to_string() == S::at_least_n(2).to_string());
  CHECK(a.steps[0].msel.to_string() == S::at_least_n(2).to_string());

  auto b = OperatorSpec::parse("L{3,4;3}");
  CHECK(b.steps[0].nsel.contains(4));
  CHECK(b.steps[0].msel.contains(3));
  CHECK_FALSE(b.steps[0].msel.contains(4));  // plain ints are exact

  // rightmost factor first
  auto c = OperatorSpec::parse("L{2;3}.D{2}");
  REQUIRE(c.steps.size() == 2);
  CHECK(c.steps[0].kind == OperatorStep::Kind::DualLines);
  CHECK(OperatorSpec::parse("L{2;3}∘D{2}").to_string() == c.to_string());
  CHECK(OperatorSpec::parse(c.to_string()).to_string() == c.to_string());

  CHECK_THROWS_AS(OperatorSpec::parse("L{2;3"), Error);
  CHECK_THROWS_AS(OperatorSpec::parse("Q{2}"), Error);
  CHECK_THROWS_AS(OperatorSpec::parse("L{1;2}"), Error);
}

TEST_CASE("composition applies right to left") {
  auto L = catalog::complete_quadrilateral().arrangement;
  auto op = OperatorSpec::parse("L{>=3;>=2}.L{>=2;>=2}");
  CHECK(op.apply(L) == lambda_op(S::at_least_n(3), S::at_least_n(2), lambda_op(S::at_least_n(2), S::at_least_n(2), L)));
}

TEST_CASE("fixed point: dual Hesse under L3") {
  auto tr = run_sequence(OperatorSpec::parse("L{>=3;>=3}"), catalog::dual_hesse().arrangement);
  CHECK(tr.verdict == Verdict::Fixed);
  CHECK(tr.fixed_at == 0);
  CHECK(tr.growth_bound_violations.empty());
}

TEST_CASE("extinction") {
  auto tr = run_sequence(OperatorSpec::parse("L{>=3;>=3}"), catalog::generic(5, 1).arrangement);
  CHECK(tr.verdict == Verdict::Extinguished);
  CHECK(tr.length == 1);
}

TEST_CASE("period two: flashing arrangement") {
  Field q;
  auto F0 = catalog::flashing3(q.from_int(3)).arrangement;
  auto tr = run_sequence(OperatorSpec::parse("L{2;3}"), F0);
  CHECK(tr.verdict == Verdict::Cycle);
  CHECK(tr.period == 2);
  CHECK(tr.preperiod == 0);
  auto u = union_of_steps(tr, 0, 1);
  CHECK(profile(u).t == std::map<int, std::int64_t>{{2, 6}, {3, 10}});
}

TEST_CASE("complete quadrilateral sequence prefix") {
  Budgets b;
  b.max_steps = 2;
  auto tr = run_sequence(OperatorSpec::parse("L{>=2}"), catalog::complete_quadrilateral().arrangement, b);
  REQUIRE(tr.steps.size() == 3);
  CHECK(tr.steps[1].lines == 9);
  CHECK(tr.steps[2].lines == 25);
  CHECK(*tr.steps[2].h == mpq_class(-239, 97));
  CHECK(tr.verdict == Verdict::BudgetSteps);
  auto j = trace_json(tr);
  CHECK(j["steps"][2]["H"] == "-239/97");
  CHECK(j["steps"][1]["t"]["4"] == 3);
  CHECK(trace_table(tr).find("-27/13") != std::string::npos);
}

TEST_CASE("line budget stops the run") {
  Budgets b;
  b.max_lines = 20;
  auto tr = run_sequence(OperatorSpec::parse("L{>=2}"), catalog::complete_quadrilateral().arrangement, b);
  CHECK(tr.verdict == Verdict::BudgetLines);
  CHECK_FALSE(tr.note.empty());
}

TEST_CASE("orbits over GF(2)") {
  Field f2(FieldSpec::finite_field(2));
  auto cq = catalog::complete_quadrilateral(f2).arrangement;
  auto fano = catalog::finite_plane(2).arrangement;
  // the three diagonal points are collinear in characteristic 2
  CHECK(lambda_op(S::at_least_n(2), S::at_least_n(3), cq) == fano);
  CHECK(orbit_over_finite_field(OperatorSpec::lambda(S::at_least_n(2), S::at_least_n(3)), cq) == std::pair{1, 1});
  CHECK(lambda_op(S::at_least_n(3), S::at_least_n(2), cq) == cq);
  CHECK(orbit_over_finite_field(OperatorSpec::lambda(S::at_least_n(3), S::at_least_n(2)), cq) == std::pair{0, 1});
  // two lines die at once and stay dead
  Arrangement two(f2, {fano[0], fano[1]});
  CHECK(orbit_over_finite_field(OperatorSpec::lambda(S::at_least_n(2), S::at_least_n(2)), two) == std::pair{1, 1});
}

TEST_CASE("orbit over an infinite field is refused") {
  CHECK_THROWS_AS(orbit_over_finite_field(OperatorSpec::parse("L{>=2}"), catalog::complete_quadrilateral().arrangement),
                  Error);
}

TEST_CASE("fingerprint is stable") {
  CHECK(fingerprint("") == "cbf29ce484222325");
  CHECK(fingerprint("a") == "af63dc4c8601ec8c");
}
