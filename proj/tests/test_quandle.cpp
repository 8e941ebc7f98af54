#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "medq/def1.hpp"
#include "medq/error.hpp"
#include "medq/quandle.hpp"

using namespace medq;

namespace {

FiniteQuandle table_quandle(std::size_t n, std::uint32_t (*f)(std::uint32_t, std::uint32_t, std::size_t)) {
  std::vector<std::uint32_t> t(n * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) t[x * n + y] = f(x, y, n);
  return FiniteQuandle(n, t);
}

FiniteQuandle dihedral(std::size_t n) {
  return table_quandle(n, [](std::uint32_t x, std::uint32_t y, std::size_t m) {
    return static_cast<std::uint32_t>((2 * y + m - x) % m);
  });
}

FiniteQuandle trivial(std::size_t n) {
  return table_quandle(n, [](std::uint32_t x, std::uint32_t, std::size_t) { return x; });
}

ModulePtr cyclic(std::int64_t n, std::int64_t u, std::int64_t uinv) {
  return std::make_shared<FiniteModule>(std::vector<std::int64_t>{n}, IntMatrix{{u}}, IntMatrix{{uinv}});
}

// Reachability under all translations and their inverses.
std::set<std::uint32_t> reach(const FiniteQuandle& q, std::uint32_t x) {
  std::set<std::uint32_t> seen{x};
  std::vector<std::uint32_t> stack{x};
  while (!stack.empty()) {
    std::uint32_t a = stack.back();
    stack.pop_back();
    for (std::uint32_t y = 0; y < q.size(); ++y)
      for (std::uint32_t b = 0; b < q.size(); ++b) {
        std::uint32_t next = q.op(a, y);
        if (q.op(b, y) == a && seen.insert(b).second) stack.push_back(b);
        if (seen.insert(next).second) stack.push_back(next);
      }
  }
  return seen;
}

// A fixed point and a two-element orbit on which the fixed point acts by a
// swap; that swap is a displacement with a fixed point.
FiniteQuandle two_orbit_shift() {
  ModulePtr z2 = cyclic(2, 1, 1);
  Def1Data d{z2, {{0}, {1}}, {Submodule::whole(z2), Submodule::zero(z2)}};
  return build_def1(d).quandle();
}

FiniteQuandle relabel(const FiniteQuandle& q, const std::vector<std::uint32_t>& p) {
  std::vector<std::uint32_t> t(q.size() * q.size());
  for (std::uint32_t x = 0; x < q.size(); ++x)
    for (std::uint32_t y = 0; y < q.size(); ++y) t[p[x] * q.size() + p[y]] = p[q.op(x, y)];
  return FiniteQuandle(q.size(), t);
}

}  // namespace

TEST_CASE("axiom reports") {
  CHECK(check_medial_axioms(dihedral(3)).ok());
  CHECK(check_medial_axioms(trivial(4)).ok());
  CHECK(is_involutory(dihedral(5)));

  FiniteQuandle bad = dihedral(3);
  auto t = bad.table();
  t[0] = 1;
  AxiomReport r = check_medial_axioms(FiniteQuandle(3, t));
  CHECK(r.idempotence == std::vector<std::uint32_t>{0});
  CHECK_FALSE(r.ok());
  CHECK(r.not_permutation == std::vector<std::uint32_t>{0});

  // Conjugation in S3 restricted to its transpositions is dihedral; on the
  // whole group it is a quandle that is not medial.
  std::vector<std::vector<int>> s3;
  std::vector<int> p{0, 1, 2};
  do s3.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto mul = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(3);
    for (int i = 0; i < 3; ++i) c[i] = a[b[i]];
    return c;
  };
  auto inv = [](const std::vector<int>& a) {
    std::vector<int> c(3);
    for (int i = 0; i < 3; ++i) c[a[i]] = i;
    return c;
  };
  std::vector<std::uint32_t> conj(36);
  for (std::uint32_t x = 0; x < 6; ++x)
    for (std::uint32_t y = 0; y < 6; ++y) {
      auto z = mul(mul(inv(s3[y]), s3[x]), s3[y]);
      conj[x * 6 + y] = static_cast<std::uint32_t>(std::find(s3.begin(), s3.end(), z) - s3.begin());
    }
  AxiomReport cr = check_medial_axioms(FiniteQuandle(6, conj));
  CHECK(cr.idempotence.empty());
  CHECK(cr.not_permutation.empty());
  CHECK(cr.medial_violations > 0);
  std::uint64_t brute = 0;
  FiniteQuandle cq(6, conj);
  for (std::uint32_t w = 0; w < 6; ++w)
    for (std::uint32_t x = 0; x < 6; ++x)
      for (std::uint32_t y = 0; y < 6; ++y)
        for (std::uint32_t z = 0; z < 6; ++z)
          if (cq.op(cq.op(w, x), cq.op(y, z)) != cq.op(cq.op(w, y), cq.op(x, z))) ++brute;
  CHECK(cr.medial_violations == brute);
  const auto& e = cr.medial_examples.front();
  CHECK(cq.op(cq.op(e[0], e[1]), cq.op(e[2], e[3])) != cq.op(cq.op(e[0], e[2]), cq.op(e[1], e[3])));
}

TEST_CASE("orbits and displacement groups of small quandles") {
  FiniteQuandle d3 = dihedral(3);
  CHECK(orbits(d3).size() == 1);
  DisplacementGroup g(d3);
  CHECK(g.size() == 3);
  CHECK(g.invariant_factors() == std::vector<std::int64_t>{3});
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.t_action(g.element(i)) == inverse(g.element(i)));
  Vec c = g.coords(1);
  CHECK(g.module().apply_t(c) == g.module().neg(c));
  CHECK(is_semiregular(d3));

  FiniteQuandle t4 = trivial(4);
  CHECK(orbits(t4).size() == 4);
  CHECK(orbit_sizes(t4) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(DisplacementGroup(t4).size() == 1);
  CHECK(is_semiregular(t4));

  // Dihedral of order 4 has two orbits; its displacements are even shifts.
  FiniteQuandle d4 = dihedral(4);
  CHECK(orbits(d4) == std::vector<std::vector<std::uint32_t>>{{0, 2}, {1, 3}});
  CHECK(is_semiregular(d4));
  CHECK_FALSE(is_semiregular(two_orbit_shift()));
  CHECK_THROWS_AS(DisplacementGroup(dihedral(9), 0, 2), SizeCap);
}

TEST_CASE("congruence quotients") {
  FiniteQuandle d3 = dihedral(3);
  CHECK(involutory_quotient(d3).quotient == d3);
  FiniteQuandle a5 = affine_quandle(*cyclic(5, 2, 3));
  CHECK(involutory_quotient(a5).quotient.size() == 1);
  CHECK(semiregular_quotient(d3).congruence.num_blocks == 3);
  CHECK(semiregular_quotient(trivial(3)).quotient.size() == 3);
  CHECK(semiregular_quotient(dihedral(4)).quotient.size() == 4);
  CHECK(semiregular_quotient(two_orbit_shift()).quotient.size() == 2);

  CongruenceQuotient cq = congruence_quotient(dihedral(6), {{0, 3}});
  CHECK(cq.quotient.size() == 3);
  CHECK(check_medial_axioms(cq.quotient).ok());
  CHECK(cq.congruence.block[0] == cq.congruence.block[3]);
  CHECK(congruence_quotient(dihedral(5), {{0, 1}}).quotient.size() == 1);
}

TEST_CASE("isomorphism search") {
  FiniteQuandle d3 = dihedral(3);
  IsoResult self = iso_search(d3, d3);
  REQUIRE(self);
  CHECK(is_isomorphism(d3, d3, *self.map));
  IsoResult size = iso_search(d3, trivial(2));
  CHECK_FALSE(size);
  CHECK(size.mismatch.find("size") != std::string::npos);
  CHECK(iso_search(d3, trivial(3)).mismatch == "orbit sizes differ");
  // Same size and orbit structure, different t-action.
  FiniteQuandle a52 = affine_quandle(*cyclic(5, 2, 3));
  FiniteQuandle a54 = affine_quandle(*cyclic(5, 4, 4));
  FiniteQuandle a53 = affine_quandle(*cyclic(5, 3, 2));
  CHECK_FALSE(iso_search(a52, a54));
  CHECK_FALSE(iso_search(a52, a53));
  CHECK(iso_search(a52, affine_quandle(*cyclic(5, 2, 3))));
  CHECK_THROWS_AS(iso_search(dihedral(7), dihedral(7), 4), SizeCap);
}

TEST_CASE("property: medial quandle laws on random Def1 quandles") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 120; ++iter) {
    Def1Quandle dq = build_def1(gen::random_def1(rng));
    const FiniteQuandle& q = dq.quandle();
    CAPTURE(iter);
    REQUIRE(check_medial_axioms(q).ok());

    // Orbits agree with plain reachability.
    auto orb = orbits(q);
    for (const auto& o : orb) {
      std::set<std::uint32_t> r = reach(q, o.front());
      CHECK(std::vector<std::uint32_t>(r.begin(), r.end()) == o);
    }

    DisplacementGroup g(q);
    const std::uint32_t other = static_cast<std::uint32_t>(q.size() - 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Perm& d = g.element(i);
      // Abelian and the t-action does not depend on the base point.
      CHECK(compose(d, g.element(g.size() / 2)) == compose(g.element(g.size() / 2), d));
      CHECK(g.t_action_at(d, other) == g.t_action(d));
      // A displacement with a fixed point commutes with t.
      bool has_fixed = false;
      for (std::uint32_t x = 0; x < q.size(); ++x) has_fixed |= d[x] == x;
      if (has_fixed) CHECK(g.t_action(d) == d);
    }
    for (std::uint32_t x = 0; x < q.size(); ++x) {
      const auto& o = *std::find_if(orb.begin(), orb.end(), [&](const auto& v) {
        return std::binary_search(v.begin(), v.end(), x);
      });
      std::set<std::uint32_t> images;
      for (const auto& d : g.elements()) images.insert(d[x]);
      CHECK(std::vector<std::uint32_t>(images.begin(), images.end()) == o);
      CHECK(o.size() * g.fix_elements(x).size() == g.size());
      CHECK(g.fix(x).order() == static_cast<long>(g.fix_elements(x).size()));
    }
    if (orb.size() == 1) CHECK(iso_search(q, affine_quandle(g.module())));

    // Isomorphism search recovers a random relabelling.
    std::vector<std::uint32_t> perm(q.size());
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    FiniteQuandle shuffled = relabel(q, perm);
    IsoResult iso = iso_search(q, shuffled);
    REQUIRE(iso);
    CHECK(is_isomorphism(q, shuffled, *iso.map));

    // Congruence quotients are medial; semiregular ones are semiregular.
    CongruenceQuotient inv = involutory_quotient(q);
    CHECK(check_medial_axioms(inv.quotient).ok());
    CHECK(is_involutory(inv.quotient));
    CongruenceQuotient semi = semiregular_quotient(q);
    CHECK(is_semiregular(semi.quotient));
    CHECK(is_homomorphism(q, semi.quotient, semi.congruence.block));
  }
}
