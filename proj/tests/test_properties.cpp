#include <doctest.h>

#include <random>

#include "exh/analysis.hpp"
#include "exh/conditions.hpp"
#include "support.hpp"

using namespace exh;

namespace {

constexpr ConditionId kConstrained[] = {
    ConditionId::MinUpperLower, ConditionId::MinUpperUpper, ConditionId::MinLowerLower,
    ConditionId::MinLowerUpper, ConditionId::MaxLowerLower, ConditionId::MaxLowerUpper,
    ConditionId::MaxUpperLower, ConditionId::MaxUpperUpper};

Exhauster reduced(const MinMaxTree& t, ExhausterKind k) {
  return reduce_exhauster(exhauster_from_tree(t, k), default_reduction_samples(t.dim()), 0);
}

}  // namespace

TEST_CASE("inclusion verdicts and the direct oracle are consistent") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  int violated = 0, oracle_hits = 0;
  for (int t = 0; t < 40; ++t) {
    Vector p{coord(rng), coord(rng)};
    auto f = directional_derivative_tree(fx::random_expr(rng, p), p);
    auto u = directional_derivative_tree(fx::random_expr(rng, p), p);
    for (ConditionId id : kConstrained) {
      CAPTURE(t);
      CAPTURE(to_string(id));
      Exhauster ef = reduced(f, objective_kind(id));
      Exhauster eu = reduced(u, *constraint_kind(id));
      Verdict v = check_condition(id, ef, &eu);
      REQUIRE(v.status != Status::Inconclusive);
      std::vector<Vector> extra;
      if (v.witness) extra.push_back(*v.witness);
      Verdict o = necessary_condition_oracle(f, u, sense_of(id), 10000, t, extra);
      if (v.status == Status::Violated) {
        ++violated;
        CHECK(o.status == Status::Violated);
        CHECK(eval_minmax(u, *v.witness) <= 1e-9);
        double hf = eval_minmax(f, *v.witness);
        CHECK((sense_of(id) == OptSense::Min ? hf < 0.0 : hf > 0.0));
      }
      // The oracle alone, without the witness, must never contradict holds.
      Verdict blind = necessary_condition_oracle(f, u, sense_of(id), 10000, t + 1);
      if (blind.status == Status::Violated) {
        ++oracle_hits;
        CHECK(v.status != Status::Holds);
      }
    }
  }
  CHECK(violated > 20);
  CHECK(oracle_hits > 0);
}

TEST_CASE("witnesses are reproducible") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 30; ++t) {
    ConditionId id = kConstrained[t % 8];
    Exhauster ef = fx::random_family(rng, objective_kind(id), 1, 3, 4);
    Exhauster eu = fx::random_family(rng, *constraint_kind(id), 1, 3, 4);
    for (auto m : {InclusionMethod::Exact2d, InclusionMethod::LpEnumeration}) {
      CheckOptions a, b;
      a.method = b.method = m;
      b.parallel = false;
      Verdict x = check_condition(id, ef, &eu, a);
      Verdict y = check_condition(id, ef, &eu, a);
      Verdict z = check_condition(id, ef, &eu, b);
      CHECK(x.status == y.status);
      CHECK(x.witness == y.witness);
      CHECK(x.certificate == y.certificate);
      CHECK(x.witness == z.witness);
      CHECK(x.certificate == z.certificate);
    }
  }
  auto f = directional_derivative_tree(fx::f_example(), fx::origin());
  auto u = directional_derivative_tree(fx::u_example(), fx::origin());
  Verdict a = necessary_condition_oracle(f, u, OptSense::Max, 500, 17);
  Verdict b = necessary_condition_oracle(f, u, OptSense::Max, 500, 17);
  CHECK(a.witness == b.witness);
  CHECK(a.certificate == b.certificate);
}

TEST_CASE("violated MIN_UPPER_LOWER gives a separating hyperplane") {
  std::mt19937_64 rng(4242);
  int violated = 0;
  for (int t = 0; t < 200; ++t) {
    Exhauster ef = fx::random_family(rng, ExhausterKind::Upper, 1, 3, 4);
    Exhauster eu = fx::random_family(rng, ExhausterKind::Lower, 1, 3, 4);
    for (auto m : {InclusionMethod::Exact2d, InclusionMethod::LpEnumeration}) {
      CheckOptions o;
      o.method = m;
      Verdict v = check_condition(ConditionId::MinUpperLower, ef, &eu, o);
      if (v.status != Status::Violated) continue;
      ++violated;
      const Vector& g = *v.witness;
      // {<v, g> <= 0} meets every set of the lower family of u ...
      for (const auto& c : eu.sets()) CHECK(support_value(c, g, SupportMode::Min) <= 1e-9);
      // ... while one set of the upper family of f lies strictly on the negative side.
      bool strict = false;
      for (const auto& c : ef.sets()) strict = strict || support_value(c, g, SupportMode::Max) < -1e-9;
      CHECK(strict);
    }
  }
  CHECK(violated > 20);
}
