#include <doctest.h>

#include <random>

#include "exh/kernels.hpp"
#include "support.hpp"

using namespace exh;

namespace {

ChoiceProduct random_product(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> ng(1, 4), na(1, 3), nc(1, 3), ci(-3, 3), s(0, 3);
  ChoiceProduct p(ng(rng));
  for (auto& g : p) {
    g.alternatives.resize(na(rng));
    for (auto& alt : g.alternatives) {
      alt.resize(nc(rng));
      for (auto& c : alt) {
        c.normal.resize(dim);
        for (auto& x : c.normal) x = ci(rng);
        c.sense = static_cast<Sense>(s(rng));
      }
    }
  }
  return p;
}

}  // namespace

TEST_CASE("mixed-radix decoding") {
  ChoiceProduct p(2);
  p[0].alternatives = {{{{1, 0}, Sense::LeZero}}, {{{2, 0}, Sense::LeZero}}};
  p[1].alternatives = {{{{0, 1}, Sense::LeZero}}, {{{0, 2}, Sense::LeZero}}, {{{0, 3}, Sense::LeZero}}};
  CHECK(combination_count(p, 100) == 6);
  CHECK(combination_count(p, 4) == 5);
  auto sys = combination(p, 4);  // digits (1, 1)
  REQUIRE(sys.size() == 2);
  CHECK(sys[0].normal == Vector{2, 0});
  CHECK(sys[1].normal == Vector{0, 2});
}

TEST_CASE("serial and parallel search agree") {
  std::mt19937_64 rng(123);
  int found = 0;
  for (int t = 0; t < 200; ++t) {
    int dim = 2 + t % 3;
    auto p = random_product(rng, dim);
    auto a = first_feasible_serial(p, dim);
    auto b = first_feasible_parallel(p, dim);
    CHECK(a.found == b.found);
    CHECK(a.index == b.index);
    CHECK(a.witness == b.witness);
    CHECK(a.examined == b.examined);
    CHECK(a.certified == b.certified);
    found += a.found;
    if (a.found) {
      for (const auto& c : combination(p, a.index)) CHECK(satisfies(c, a.witness, 1e-9));
      for (std::size_t k = 0; k < a.index; ++k) CHECK_FALSE(linear_feasibility(combination(p, k), dim).feasible);
    }
  }
  CHECK(found > 20);
  CHECK(found < 190);
}

TEST_CASE("serial and parallel oracle scans agree") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    Vector p{0.1, 0.2};
    auto f = directional_derivative_tree(fx::random_expr(rng, p), p);
    auto u = directional_derivative_tree(fx::random_expr(rng, p), p);
    auto dirs = sample_directions(2, 500, t);
    for (auto s : {OptSense::Min, OptSense::Max}) {
      auto a = oracle_scan_serial(f, u, dirs, s, 1e-9, 1e-6);
      auto b = oracle_scan_parallel(f, u, dirs, s, 1e-9, 1e-6);
      CHECK(a.violated == b.violated);
      CHECK(a.index == b.index);
      CHECK(a.f_value == b.f_value);
      CHECK(a.u_value == b.u_value);
    }
  }
}

TEST_CASE("serial and parallel deviation scans agree") {
  auto dirs = sample_directions(2, 360, 3);
  auto e = fx::u_example();
  auto t = directional_derivative_tree(e, fx::origin());
  auto a = fd_deviation_serial(e, fx::origin(), t, dirs);
  auto b = fd_deviation_parallel(e, fx::origin(), t, dirs);
  CHECK(a.max_deviation == b.max_deviation);
  CHECK(a.index == b.index);
  CHECK(a.max_deviation <= 1e-3);
}
