#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "medq/kernels.hpp"
#include "medq/quandle.hpp"

using namespace medq;

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 14)(rng);
    // Random tables with permutation columns, mostly non-medial.
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t y = 0; y < n; ++y) {
      Perm p = identity_perm(n);
      std::shuffle(p.begin(), p.end(), rng);
      for (std::size_t x = 0; x < n; ++x) table[x * n + y] = p[x];
    }
    kernels::MedialScan s = kernels::serial::medial_scan(table, n, 8);
    CHECK(s == kernels::parallel::medial_scan(table, n, 8));
    std::uint64_t brute = 0;
    auto op = [&](std::uint32_t a, std::uint32_t b) { return table[a * n + b]; };
    for (std::uint32_t w = 0; w < n; ++w)
      for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
          for (std::uint32_t z = 0; z < n; ++z)
            if (op(op(w, x), op(y, z)) != op(op(w, y), op(x, z))) ++brute;
    CHECK(s.count == brute);
    CHECK(s.examples.size() == std::min<std::uint64_t>(brute, 8));

    std::vector<Perm> perms;
    for (int k = 0; k < 20; ++k) {
      Perm p = identity_perm(n);
      std::shuffle(p.begin(), p.end(), rng);
      perms.push_back(p);
    }
    perms.push_back(identity_perm(n));
    CHECK(kernels::serial::fixed_point_displacements(perms) == kernels::parallel::fixed_point_displacements(perms));

    std::vector<std::uint32_t> a, b;
    auto f = [&](std::size_t x, std::size_t y) { return static_cast<std::uint32_t>((x * 7 + y * 3) % n); };
    kernels::serial::fill_table(a, n, f);
    kernels::parallel::fill_table(b, n, f);
    CHECK(a == b);
  }
  std::mt19937_64 drng(5);
  for (int iter = 0; iter < 20; ++iter) {
    const FiniteQuandle q = build_def1(gen::random_def1(drng)).quandle();
    CHECK(kernels::serial::medial_scan(q.table(), q.size(), 4).count == 0);
    CHECK(kernels::parallel::medial_scan(q.table(), q.size(), 4).count == 0);
  }
}
