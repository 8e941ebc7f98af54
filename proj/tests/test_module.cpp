#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "medq/error.hpp"
#include "medq/module.hpp"
#include "oracles.hpp"

using namespace medq;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

LambdaPresentation cyclic(const LaurentPoly& p) { return {{"g"}, {"r"}, {{p}}}; }

ModulePtr cyclic_module(std::int64_t n, std::int64_t u) {
  IntMatrix t{{u}};
  std::int64_t inv = 0;
  for (std::int64_t k = 1; k < n; ++k)
    if ((u * k) % n == 1) inv = k;
  return std::make_shared<FiniteModule>(std::vector<std::int64_t>{n}, t, IntMatrix{{inv}});
}

}  // namespace

TEST_CASE("cyclic modules Lambda/(p) at scalar rings") {
  // Lambda/(1-t)^3 at t=-1 is Z/8 with t = -1.
  PresentedModule m = finite_module_from(specialize_presentation(cyclic(P("1-t").pow(3)), ScalarRing(0, -1)));
  CHECK(m.module->factors() == std::vector<std::int64_t>{8});
  Vec g = m.map(IntVector{1});
  CHECK(m.module->apply_t(g) == m.module->neg(g));
  CHECK(m.module->apply_t(m.module->apply_t(g)) == g);

  PresentedModule m27 = finite_module_from(specialize_presentation(cyclic(P("1-t").pow(3)), ScalarRing(27, 4)));
  CHECK(m27.module->factors() == std::vector<std::int64_t>{27});

  // Trivial presentation.
  PresentedModule empty = finite_module_from(specialize_presentation(LambdaPresentation{}, ScalarRing(0, -1)));
  CHECK(empty.module->factors().empty());

  // (1-t) g = 0 at u = 1 over Z/6 imposes nothing.
  PresentedModule six = finite_module_from(specialize_presentation(cyclic(P("1-t")), ScalarRing(6, 1)));
  CHECK(six.module->factors() == std::vector<std::int64_t>{6});
  CHECK(six.module->t_matrix() == IntMatrix{{1}});

  // Free module.
  PresentedModule free = finite_module_from(specialize_presentation(cyclic(LaurentPoly()), ScalarRing(0, -1)));
  CHECK(free.module->factors() == std::vector<std::int64_t>{0});
  CHECK(free.module->free_rank() == 1);
  CHECK(free.module->order() == 0);
  CHECK_THROWS_AS(free.module->size(), InfiniteUnsupported);

  CHECK_THROWS_AS(specialize_presentation(cyclic(P("1-t")), ScalarRing(6, 2)), NonUnitT);
}

TEST_CASE("polynomial-modulus specialization expands generators") {
  // Lambda/(1-t) over Z[x]/(x^2 - x + 1), t -> x: (1-x) is a unit there
  // (its norm is 1), so the module vanishes.
  ScalarRing r(0, IntVector{1, -1, 1}, IntVector{0, 1});
  IntPresentation ip = specialize_presentation(cyclic(P("1-t")), r);
  CHECK(ip.generators.size() == 2);
  CHECK(finite_module_from(ip).module->factors().empty());
  // Lambda/(1+t) there: norm of 1+x is 3.
  CHECK(finite_module_from(specialize_presentation(cyclic(P("1+t")), r)).module->factors() ==
        std::vector<std::int64_t>{3});
}

TEST_CASE("property: specialized cokernel orders match subgroup enumeration") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> coeff(-3, 3), exp(-1, 2);
  std::vector<ScalarRing> rings{ScalarRing(5, 2), ScalarRing(9, 2), ScalarRing(16, 3), ScalarRing(7, 3),
                                ScalarRing(8, 5)};
  for (int iter = 0; iter < 120; ++iter) {
    LambdaPresentation p{{"x", "y"}, {"r1", "r2", "r3"}, {}};
    for (int r = 0; r < 3; ++r) {
      std::vector<LaurentPoly> col;
      for (int g = 0; g < 2; ++g) {
        LaurentPoly e;
        for (int k = 0; k < 2; ++k) e += LaurentPoly::monomial(coeff(rng), exp(rng));
        col.push_back(e);
      }
      p.columns.push_back(col);
    }
    for (const auto& ring : rings) {
      IntPresentation ip = specialize_presentation(p, ring);
      PresentedModule m = finite_module_from(ip);
      long long mod = ring.modulus().get_si();
      oracle::Mat cols;
      for (std::size_t j = 0; j < ip.relations.cols(); ++j) {
        std::vector<long long> c;
        for (std::size_t i = 0; i < ip.relations.rows(); ++i) c.push_back(ip.relations(i, j).get_si());
        cols.push_back(c);
      }
      CHECK(m.module->order().get_si() == oracle::cokernel_order_mod(cols, ip.generators.size(), mod));
      // The t action commutes with the coordinate change.
      for (std::size_t g = 0; g < ip.generators.size(); ++g) {
        IntVector e(ip.generators.size());
        e[g] = 1;
        CHECK(m.map(ip.t_action * e) == m.module->apply_t(m.map(e)));
        CHECK(m.map(ip.t_inv_action * e) == m.module->apply_t_inv(m.map(e)));
      }
    }
  }
}

TEST_CASE("submodules, sums, intersections and quotients") {
  // Z/12 with t = 5 (5^2 = 25 = 1).
  ModulePtr n = cyclic_module(12, 5);
  Submodule a(n, {{4}});
  Submodule b(n, {{6}});
  CHECK(a.order() == 3);
  CHECK(b.order() == 2);
  CHECK(a.index() == 4);
  CHECK(a.sum(b).order() == 6);
  CHECK(a.intersect(b).is_zero());
  CHECK(Submodule(n, {{2}}).intersect(Submodule(n, {{3}})).order() == 2);
  CHECK(a.canonical({7}) == Vec{3});
  CHECK(a.contains(Vec{8}));
  CHECK_FALSE(a.contains(Vec{2}));
  auto elems = a.elements();
  CHECK(elems == std::vector<Vec>{{0}, {4}, {8}});

  Subquotient q = quotient_by(a);
  CHECK(q.module().factors() == std::vector<std::int64_t>{4});
  CHECK(q.module().is_zero(q.map({4})));
  CHECK(q.module().apply_t(q.map({1})) == q.map({5}));
  Subquotient sq = subquotient(Submodule(n, {{2}}), Submodule(n, {{6}}));
  CHECK(sq.module().order() == 3);
  CHECK(q.module().is_zero(q.map(n->sub(q.lift(q.map({7})), {7}))));

  // t-closure is computed: in Z/5 with t = 2 any nonzero element generates.
  ModulePtr z5 = cyclic_module(5, 2);
  CHECK(Submodule(z5, {{1}}).order() == 5);
  // Image under a Laurent polynomial.
  CHECK(Submodule::whole(z5).image(P("1-t")).order() == 5);
  CHECK(Submodule::whole(cyclic_module(9, 4)).image(P("1-t^2")).order() == 3);
}

TEST_CASE("property: lattice intersection agrees with elementwise intersection") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 100; ++iter) {
    auto n = gen::random_module(rng);
    ModulePtr np = n;
    Submodule a(np, {gen::random_element(*n, rng)});
    Submodule b(np, {gen::random_element(*n, rng), gen::random_element(*n, rng)});
    std::vector<Vec> expected;
    for (const auto& v : a.elements())
      if (b.contains(v)) expected.push_back(v);
    CHECK(a.intersect(b).elements() == expected);
    CHECK(a.sum(b).contains(a));
    CHECK(a.order() * a.index() == n->order());
  }
}

TEST_CASE("scalar solutions") {
  ModulePtr n = cyclic_module(27, 4);
  CHECK(solve_scalar(*n, {9}, {18}) == ScalarSolution{true, 2, 3});
  CHECK(solve_scalar(*n, {9}, {1}).solvable == false);
  CHECK(solve_scalar(*n, {0}, {0}) == ScalarSolution{true, 0, 1});
  CHECK(solve_scalar(*n, {9}, {18}).to_string() == "2 mod 3");
}
