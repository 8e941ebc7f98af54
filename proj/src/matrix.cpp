#include "medq/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace medq {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
  IntVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) r[i] += (*this)(i, k) * v[k];
  return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << (*this)(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("adjugate of non-square matrix");
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      Integer cof = determinant(minor);
      if ((i + j) % 2) cof = -cof;
      adj(j, i) = cof;
    }
  return adj;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm f{IntMatrix::identity(m), IntMatrix::identity(m), a, IntMatrix::identity(n), {}};
  IntMatrix& S = f.S;

  // Row operation row[dst] += q * row[src] on S, mirrored into U and U^{-1}.
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
    S.add_row(dst, src, q);
    f.U.add_row(dst, src, q);
    f.U_inv.add_col(src, dst, -q);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    S.swap_rows(x, y);
    f.U.swap_rows(x, y);
    f.U_inv.swap_cols(x, y);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
    S.add_col(dst, src, q);
    f.V.add_col(dst, src, q);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    S.swap_cols(x, y);
    f.V.swap_cols(x, y);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t s = 0; s < steps; ++s) {
    for (;;) {
      // Smallest nonzero entry in the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = s, pj = s;
      Integer best;
      for (std::size_t i = s; i < m; ++i)
        for (std::size_t j = s; j < n; ++j) {
          const Integer& x = S(i, j);
          if (x == 0) continue;
          if (!found || abs(x) < best) {
            best = abs(x);
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) break;
      row_swap(s, pi);
      col_swap(s, pj);

      bool clean = true;
      for (std::size_t i = s + 1; i < m; ++i) {
        if (S(i, s) == 0) continue;
        Integer q = S(i, s) / S(s, s);
        row_add(i, s, -q);
        if (S(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < n; ++j) {
        if (S(s, j) == 0) continue;
        Integer q = S(s, j) / S(s, s);
        col_add(j, s, -q);
        if (S(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain on the remaining block.
      bool divides = true;
      for (std::size_t i = s + 1; i < m && divides; ++i)
        for (std::size_t j = s + 1; j < n; ++j) {
          if (S(i, j) % S(s, s) != 0) {
            row_add(s, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (S(s, s) < 0) {
      S.negate_row(s);
      f.U.negate_row(s);
      f.U_inv.negate_col(s);
    }
  }
  f.diagonal.resize(steps);
  for (std::size_t s = 0; s < steps; ++s) f.diagonal[s] = S(s, s);
  return f;
}

Lattice Lattice::span(std::size_t dim, const std::vector<IntVector>& generators) {
  Lattice l(dim);
  l.rebuild(generators);
  return l;
}

void Lattice::add(const IntVector& v) {
  if (v.size() != dim_) throw std::invalid_argument("lattice vector dimension mismatch");
  if (contains(v)) return;
  std::vector<IntVector> rows = basis_;
  rows.push_back(v);
  rebuild(std::move(rows));
}

void Lattice::add_all(const std::vector<IntVector>& vs) {
  std::vector<IntVector> rows = basis_;
  for (const auto& v : vs) {
    if (v.size() != dim_) throw std::invalid_argument("lattice vector dimension mismatch");
    rows.push_back(v);
  }
  rebuild(std::move(rows));
}

void Lattice::rebuild(std::vector<IntVector> rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const IntVector& r) {
                              return std::all_of(r.begin(), r.end(),
                                                 [](const Integer& x) { return x == 0; });
                            }),
             rows.end());
  for (const auto& r : rows)
    if (r.size() != dim_) throw std::invalid_argument("lattice vector dimension mismatch");

  auto axpy = [this](IntVector& dst, const IntVector& src, const Integer& q) {
    for (std::size_t k = 0; k < dim_; ++k) dst[k] += q * src[k];
  };

  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < dim_ && r < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q = rows[i][col] / rows[r][col];
        axpy(rows[i], rows[r], -q);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < rows.size() && rows[r][col] != 0) {
      if (rows[r][col] < 0)
        for (auto& x : rows[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        axpy(rows[i], rows[r], -q);
      }
      pivots.push_back(col);
      ++r;
    }
  }
  rows.resize(r);
  basis_ = std::move(rows);
  pivots_ = std::move(pivots);
}

IntVector Lattice::reduce(IntVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("lattice vector dimension mismatch");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v[p].get_mpz_t(), basis_[r][p].get_mpz_t());
    if (q == 0) continue;
    for (std::size_t k = p; k < dim_; ++k) v[k] -= q * basis_[r][k];
  }
  return v;
}

std::optional<IntVector> Lattice::coordinates(IntVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("lattice vector dimension mismatch");
  IntVector coeffs(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const std::size_t p = pivots_[r];
    for (std::size_t k = 0; k < p; ++k)
      if (v[k] != 0) return std::nullopt;
    if (v[p] % basis_[r][p] != 0) return std::nullopt;
    Integer q = v[p] / basis_[r][p];
    coeffs[r] = q;
    for (std::size_t k = p; k < dim_; ++k) v[k] -= q * basis_[r][k];
  }
  for (const auto& x : v)
    if (x != 0) return std::nullopt;
  return coeffs;
}

bool Lattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Integer Lattice::index() const {
  if (basis_.size() < dim_) return 0;
  Integer idx = 1;
  for (std::size_t r = 0; r < basis_.size(); ++r) idx *= basis_[r][pivots_[r]];
  return idx;
}

}  // namespace medq
