#include <random>

#include "doctest.h"
#include "medq/matrix.hpp"
#include "oracles.hpp"

using namespace medq;

namespace {

oracle::Mat to_oracle(const IntMatrix& a) {
  oracle::Mat m(a.rows(), std::vector<long long>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).get_si();
  return m;
}

bool is_diagonal(const IntMatrix& s) {
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j && s(i, j) != 0) return false;
  return true;
}

void check_smith(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  CHECK(f.U * a * f.V == f.S);
  CHECK(is_diagonal(f.S));
  CHECK(abs(determinant(f.U)) == 1);
  CHECK(abs(determinant(f.V)) == 1);
  CHECK(f.U * f.U_inv == IntMatrix::identity(a.rows()));
  for (std::size_t k = 0; k < f.diagonal.size(); ++k) {
    CHECK(f.diagonal[k] >= 0);
    if (k + 1 < f.diagonal.size()) {
      if (f.diagonal[k] == 0)
        CHECK(f.diagonal[k + 1] == 0);
      else
        CHECK(f.diagonal[k + 1] % f.diagonal[k] == 0);
    }
  }
  auto expected = oracle::invariant_factors_by_minors(to_oracle(a));
  REQUIRE(expected.size() == f.diagonal.size());
  for (std::size_t k = 0; k < expected.size(); ++k) CHECK(f.diagonal[k].get_si() == expected[k]);
}

}  // namespace

TEST_CASE("smith normal form examples") {
  SmithForm id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.S == IntMatrix::identity(3));

  IntMatrix a{{2, 4}, {0, 6}};
  SmithForm f = smith_normal_form(a);
  CHECK(f.diagonal == IntVector{2, 6});
  CHECK(oracle::determinantal_divisor(to_oracle(a), 1) == 2);
  CHECK(oracle::determinantal_divisor(to_oracle(a), 2) == 12);
  check_smith(a);

  SmithForm z = smith_normal_form(IntMatrix(2, 2));
  CHECK(z.S == IntMatrix(2, 2));

  check_smith(IntMatrix{{0, 0, 3}, {0, 2, 0}});
  check_smith(IntMatrix{{6, 10, 15}});
  check_smith(IntMatrix(3, 0));
  check_smith(IntMatrix(0, 2));
}

TEST_CASE("property: smith normal form against minor gcds") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int iter = 0; iter < 300; ++iter) {
    IntMatrix a(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    check_smith(a);
  }
}

TEST_CASE("determinant and adjugate") {
  IntMatrix a{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  CHECK(determinant(a).get_si() == oracle::det_small(to_oracle(a)));
  IntMatrix prod = a * adjugate(a);
  CHECK(prod == IntMatrix{{18, 0, 0}, {0, 18, 0}, {0, 0, 18}});
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("lattice in Hermite form") {
  Lattice l = Lattice::span(2, {{4, 6}, {2, 2}, {0, 10}});
  // Span is generated by (2,2) and (0,2).
  CHECK(l.rank() == 2);
  CHECK(l.index() == 4);
  CHECK(l.contains(IntVector{2, 4}));
  CHECK_FALSE(l.contains(IntVector{1, 0}));
  CHECK(l.reduce(IntVector{3, 7}) == IntVector{1, 1});
  auto c = l.coordinates(IntVector{4, 6});
  REQUIRE(c.has_value());
  IntVector back(2);
  for (std::size_t r = 0; r < l.rank(); ++r)
    for (std::size_t k = 0; k < 2; ++k) back[k] += (*c)[r] * l.basis()[r][k];
  CHECK(back == IntVector{4, 6});

  Lattice low = Lattice::span(3, {{0, 3, 0}});
  CHECK(low.index() == 0);
  CHECK(low.reduce(IntVector{5, 7, 1}) == IntVector{5, 1, 1});
}

TEST_CASE("property: lattice reduction is a canonical coset representative") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<IntVector> gens(3, IntVector(3));
    for (auto& g : gens)
      for (auto& x : g) x = entry(rng);
    Lattice l = Lattice::span(3, gens);
    IntVector v(3), w(3);
    for (auto& x : v) x = entry(rng);
    w = v;
    for (const auto& g : gens) {
      int k = entry(rng);
      for (std::size_t i = 0; i < 3; ++i) w[i] += k * g[i];
    }
    CHECK(l.reduce(v) == l.reduce(w));
    for (const auto& g : gens) CHECK(l.contains(g));
  }
}
