#include "medq/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <set>
#include <unordered_set>

#include "medq/error.hpp"

namespace medq {

namespace {

std::vector<std::int64_t> flatten64(const IntMatrix& m) {
  std::vector<std::int64_t> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(to_i64(m(i, j)));
  return out;
}

}  // namespace

FiniteModule::FiniteModule(std::vector<std::int64_t> factors, const IntMatrix& t,
                           const IntMatrix& t_inv)
    : factors_(std::move(factors)), t_(t), t_inv_(t_inv) {
  const std::size_t k = factors_.size();
  if (t.rows() != k || t.cols() != k || t_inv.rows() != k || t_inv.cols() != k)
    throw std::invalid_argument("t action has wrong dimensions");
  for (auto d : factors_)
    if (d < 0 || d == 1) throw std::invalid_argument("invalid cyclic factor order");
  // Reduce rows into canonical ranges.
  for (std::size_t i = 0; i < k; ++i) {
    if (factors_[i] == 0) continue;
    Integer d = factors_[i];
    for (std::size_t j = 0; j < k; ++j) {
      t_(i, j) = mod_floor(t_(i, j), d);
      t_inv_(i, j) = mod_floor(t_inv_(i, j), d);
    }
  }
  Lattice rel = relation_lattice();
  for (std::size_t j = 0; j < k; ++j) {
    if (factors_[j] == 0) continue;
    IntVector col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = t_(i, j) * factors_[j];
    if (!rel.contains(col)) throw std::invalid_argument("t action does not preserve relations");
    for (std::size_t i = 0; i < k; ++i) col[i] = t_inv_(i, j) * factors_[j];
    if (!rel.contains(col)) throw std::invalid_argument("t inverse does not preserve relations");
  }
  IntMatrix prod = t_ * t_inv_;
  for (std::size_t j = 0; j < k; ++j) {
    IntVector col = prod.column(j);
    col[j] -= 1;
    if (!rel.contains(col)) throw std::invalid_argument("t action is not invertible");
  }
  t64_ = flatten64(t_);
  t_inv64_ = flatten64(t_inv_);
}

bool FiniteModule::is_finite() const {
  return std::none_of(factors_.begin(), factors_.end(), [](std::int64_t d) { return d == 0; });
}

std::size_t FiniteModule::free_rank() const {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), 0));
}

std::vector<std::int64_t> FiniteModule::torsion() const {
  std::vector<std::int64_t> out;
  for (auto d : factors_)
    if (d != 0) out.push_back(d);
  return out;
}

Integer FiniteModule::order() const {
  Integer o = 1;
  for (auto d : factors_) o *= medq::to_integer(d);
  return o;
}

std::uint64_t FiniteModule::size(std::uint64_t cap) const {
  if (!is_finite()) throw InfiniteUnsupported("module has a free factor; enumeration impossible");
  Integer o = order();
  if (o > Integer(std::to_string(cap))) throw SizeCap("module order " + o.get_str() + " exceeds cap");
  return static_cast<std::uint64_t>(to_i64(o));
}

Vec FiniteModule::reduce(Vec v) const {
  if (v.size() != factors_.size()) throw std::invalid_argument("vector has wrong length");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (factors_[i] != 0) v[i] = mod_i64(v[i], factors_[i]);
  return v;
}

Vec FiniteModule::add(const Vec& a, const Vec& b) const {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return reduce(std::move(r));
}

Vec FiniteModule::sub(const Vec& a, const Vec& b) const {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return reduce(std::move(r));
}

Vec FiniteModule::neg(const Vec& a) const {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return reduce(std::move(r));
}

Vec FiniteModule::scale(const Vec& a, std::int64_t k) const {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (factors_[i] != 0) {
      r[i] = mulmod_i64(a[i], k, factors_[i]);
    } else {
      __int128 p = static_cast<__int128>(a[i]) * k;
      if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("module coordinate overflow");
      r[i] = static_cast<std::int64_t>(p);
    }
  }
  return r;
}

Vec FiniteModule::apply_matrix(const std::vector<std::int64_t>& m, const Vec& v) const {
  const std::size_t k = factors_.size();
  Vec r(k);
  for (std::size_t i = 0; i < k; ++i) {
    __int128 acc = 0;
    const std::int64_t* row = m.data() + i * k;
    for (std::size_t j = 0; j < k; ++j) acc += static_cast<__int128>(row[j]) * v[j];
    if (factors_[i] != 0) {
      acc %= factors_[i];
      if (acc < 0) acc += factors_[i];
    } else if (acc > INT64_MAX || acc < INT64_MIN) {
      throw std::overflow_error("module coordinate overflow");
    }
    r[i] = static_cast<std::int64_t>(acc);
  }
  return r;
}

Vec FiniteModule::apply_t(const Vec& v) const { return apply_matrix(t64_, v); }

Vec FiniteModule::apply_t_inv(const Vec& v) const { return apply_matrix(t_inv64_, v); }

Vec FiniteModule::apply(const LaurentPoly& p, const Vec& v) const {
  Vec acc = zero();
  if (p.is_zero()) return acc;
  std::int64_t e = p.min_exponent();
  Vec power = reduce(v);
  if (e < 0) {
    for (std::int64_t i = 0; i < -e; ++i) power = apply_t_inv(power);
  } else {
    for (std::int64_t i = 0; i < e; ++i) power = apply_t(power);
  }
  for (const auto& [exp, c] : p.terms()) {
    for (; e < exp; ++e) power = apply_t(power);
    std::int64_t ci;
    if (is_finite()) {
      // Reduce the coefficient by the exponent of the group to keep it small.
      std::int64_t ex = 1;
      for (auto d : factors_) ex = std::lcm(ex, d);
      ci = to_i64(mod_floor(c, medq::to_integer(ex)));
    } else {
      ci = to_i64(c);
    }
    acc = add(acc, scale(power, ci));
  }
  return acc;
}

bool FiniteModule::is_zero(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t FiniteModule::order_of(const Vec& v) const {
  Vec r = reduce(v);
  std::int64_t o = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (factors_[i] == 0) return 0;
    o = std::lcm(o, factors_[i] / std::gcd(r[i], factors_[i]));
  }
  return o;
}

std::uint64_t FiniteModule::encode(const Vec& v) const {
  if (!is_finite()) throw InfiniteUnsupported("cannot index an infinite module");
  std::uint64_t code = 0;
  for (std::size_t i = factors_.size(); i-- > 0;)
    code = code * static_cast<std::uint64_t>(factors_[i]) +
           static_cast<std::uint64_t>(mod_i64(v[i], factors_[i]));
  return code;
}

Vec FiniteModule::decode(std::uint64_t code) const {
  if (!is_finite()) throw InfiniteUnsupported("cannot index an infinite module");
  Vec v(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    auto d = static_cast<std::uint64_t>(factors_[i]);
    v[i] = static_cast<std::int64_t>(code % d);
    code /= d;
  }
  return v;
}

IntVector FiniteModule::to_integer(const Vec& v) const {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = medq::to_integer(v[i]);
  return r;
}

Vec FiniteModule::from_integer(const IntVector& v) const {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = factors_[i] != 0 ? to_i64(mod_floor(v[i], medq::to_integer(factors_[i]))) : to_i64(v[i]);
  return r;
}

Lattice FiniteModule::relation_lattice() const {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] == 0) continue;
    IntVector e(factors_.size());
    e[i] = medq::to_integer(factors_[i]);
    gens.push_back(std::move(e));
  }
  return Lattice::span(factors_.size(), gens);
}

Submodule::Submodule(ModulePtr parent, const std::vector<Vec>& generators)
    : parent_(std::move(parent)), lattice_(parent_->relation_lattice()) {
  std::vector<IntVector> pending;
  for (const auto& g : generators) pending.push_back(parent_->to_integer(parent_->reduce(g)));
  while (!pending.empty()) {
    lattice_.add_all(pending);
    pending.clear();
    for (const auto& b : lattice_.basis()) {
      Vec v = parent_->from_integer(b);
      for (const Vec& w : {parent_->apply_t(v), parent_->apply_t_inv(v)}) {
        IntVector wi = parent_->to_integer(w);
        if (!lattice_.contains(wi)) pending.push_back(std::move(wi));
      }
    }
  }
}

Submodule Submodule::whole(ModulePtr parent) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < parent->rank(); ++i) {
    Vec e = parent->zero();
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return Submodule(std::move(parent), gens);
}

std::vector<Vec> Submodule::basis() const {
  std::vector<Vec> out;
  for (const auto& b : lattice_.basis()) {
    Vec v = parent_->from_integer(b);
    if (!parent_->is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

bool Submodule::contains(const Vec& v) const {
  return lattice_.contains(parent_->to_integer(parent_->reduce(v)));
}

bool Submodule::contains(const Submodule& other) const { return lattice_.contains(other.lattice_); }

bool Submodule::is_zero() const { return basis().empty(); }

Vec Submodule::canonical(const Vec& v) const {
  return parent_->from_integer(lattice_.reduce(parent_->to_integer(parent_->reduce(v))));
}

Integer Submodule::order() const {
  const auto& f = parent_->factors();
  std::size_t finite = 0;
  Integer total = 1;
  for (auto d : f)
    if (d != 0) {
      ++finite;
      total *= to_integer(d);
    }
  if (lattice_.rank() > finite) return 0;
  Integer pivots = 1;
  for (std::size_t r = 0; r < lattice_.rank(); ++r) pivots *= lattice_.basis()[r][lattice_.pivots()[r]];
  return total / pivots;
}

Integer Submodule::index() const { return lattice_.index(); }

std::vector<Vec> Submodule::elements(std::uint64_t cap) const {
  Integer o = order();
  if (o == 0) throw InfiniteUnsupported("submodule is infinite");
  if (o > Integer(std::to_string(cap))) throw SizeCap("submodule order " + o.get_str() + " exceeds cap");
  std::vector<Vec> gens = basis();
  std::vector<Vec> out{parent_->zero()};
  std::set<Vec> seen{parent_->zero()};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      Vec v = parent_->add(out[i], g);
      if (seen.insert(v).second) out.push_back(std::move(v));
    }
  std::sort(out.begin(), out.end());
  return out;
}

Submodule Submodule::sum(const Submodule& other) const {
  std::vector<Vec> gens = basis();
  for (auto& g : other.basis()) gens.push_back(g);
  return Submodule(parent_, gens);
}

Submodule Submodule::intersect(const Submodule& other) const {
  // Rows (u, u) for u in L1 and (v, 0) for v in L2; the rows of the Hermite
  // form with vanishing first half span L1 meet L2 in their second half.
  const std::size_t k = parent_->rank();
  std::vector<IntVector> rows;
  for (const auto& u : lattice_.basis()) {
    IntVector r(2 * k);
    for (std::size_t i = 0; i < k; ++i) r[i] = r[k + i] = u[i];
    rows.push_back(std::move(r));
  }
  for (const auto& v : other.lattice_.basis()) {
    IntVector r(2 * k);
    for (std::size_t i = 0; i < k; ++i) r[i] = v[i];
    rows.push_back(std::move(r));
  }
  Lattice big = Lattice::span(2 * k, rows);
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < big.rank(); ++r) {
    if (big.pivots()[r] < k) continue;
    IntVector half(big.basis()[r].begin() + static_cast<std::ptrdiff_t>(k), big.basis()[r].end());
    gens.push_back(parent_->from_integer(half));
  }
  return Submodule(parent_, gens);
}

Submodule Submodule::image(const LaurentPoly& p) const {
  std::vector<Vec> gens;
  for (const auto& b : basis()) gens.push_back(parent_->apply(p, b));
  return Submodule(parent_, gens);
}

IntPresentation specialize_presentation(const LambdaPresentation& p, const ScalarRing& r) {
  const std::size_t d = r.degree();
  const std::size_t g = p.generators.size();
  RingElem u_inv = r.t_inverse();
  IntPresentation out;
  out.ring = r;
  for (const auto& name : p.generators) {
    if (d == 1) {
      out.generators.push_back(name);
    } else {
      for (std::size_t k = 0; k < d; ++k) out.generators.push_back(name + "[x^" + std::to_string(k) + "]");
    }
  }
  std::vector<IntVector> columns;
  for (const auto& col : p.columns) {
    if (col.size() != g) throw std::invalid_argument("relation column has wrong length");
    std::vector<IntMatrix> blocks;
    for (const auto& entry : col) blocks.push_back(r.mult_matrix(lp_specialize(entry, r)));
    for (std::size_t k = 0; k < d; ++k) {
      IntVector c(g * d);
      for (std::size_t gi = 0; gi < g; ++gi)
        for (std::size_t i = 0; i < d; ++i) c[gi * d + i] = blocks[gi](i, k);
      columns.push_back(std::move(c));
    }
  }
  out.relations = IntMatrix::from_columns(g * d, columns);
  IntMatrix tu = r.mult_matrix(r.t_image());
  IntMatrix tv = r.mult_matrix(u_inv);
  out.t_action = IntMatrix(g * d, g * d);
  out.t_inv_action = IntMatrix(g * d, g * d);
  for (std::size_t gi = 0; gi < g; ++gi)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        out.t_action(gi * d + i, gi * d + j) = tu(i, j);
        out.t_inv_action(gi * d + i, gi * d + j) = tv(i, j);
      }
  return out;
}

Vec PresentedModule::map(const IntVector& generator_coords) const {
  return module->from_integer(to_module * generator_coords);
}

PresentedModule module_from_relations(const IntMatrix& relations, const IntMatrix& t,
                                      const IntMatrix& t_inv) {
  const std::size_t g = relations.rows();
  SmithForm f = smith_normal_form(relations);
  std::vector<std::size_t> kept;
  std::vector<std::int64_t> factors;
  for (std::size_t i = 0; i < g; ++i) {
    Integer s = i < f.diagonal.size() ? f.diagonal[i] : Integer(0);
    if (s == 1) continue;
    kept.push_back(i);
    factors.push_back(to_i64(s));
  }
  const std::size_t k = kept.size();
  IntMatrix to(k, g), from(g, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t j = 0; j < g; ++j) {
      to(a, j) = f.U(kept[a], j);
      from(j, a) = f.U_inv(j, kept[a]);
    }
  IntMatrix tm = to * t * from;
  IntMatrix tim = to * t_inv * from;
  PresentedModule out;
  out.module = std::make_shared<FiniteModule>(std::move(factors), tm, tim);
  // Keep the coordinate maps small.
  for (std::size_t a = 0; a < k; ++a) {
    std::int64_t d = out.module->factors()[a];
    if (d == 0) continue;
    for (std::size_t j = 0; j < g; ++j) to(a, j) = mod_floor(to(a, j), to_integer(d));
  }
  out.to_module = std::move(to);
  out.from_module = std::move(from);
  return out;
}

PresentedModule finite_module_from(const IntPresentation& p) {
  const std::size_t g = p.generators.size();
  const Integer& m = p.ring.modulus();
  if (m == 0) return module_from_relations(p.relations, p.t_action, p.t_inv_action);
  IntMatrix rel(g, p.relations.cols() + g);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < p.relations.cols(); ++j) rel(i, j) = mod_floor(p.relations(i, j), m);
    rel(i, p.relations.cols() + i) = m;
  }
  return module_from_relations(rel, p.t_action, p.t_inv_action);
}

Vec Subquotient::map(const Vec& v) const {
  IntVector vi(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) vi[i] = to_integer(v[i]);
  auto coords = upper.coordinates(vi);
  if (!coords) throw std::invalid_argument("element does not lie in the upper submodule");
  return presented.map(*coords);
}

Vec Subquotient::lift(const Vec& q) const {
  IntVector qi(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) qi[i] = to_integer(q[i]);
  IntVector x = presented.from_module * qi;
  IntVector v(upper.dim());
  for (std::size_t r = 0; r < upper.rank(); ++r)
    for (std::size_t i = 0; i < upper.dim(); ++i) v[i] += x[r] * upper.basis()[r][i];
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_i64(v[i]);
  return out;
}

Subquotient subquotient(const Submodule& upper, const Submodule& lower) {
  if (upper.parent_ptr() != lower.parent_ptr() && !(upper.parent().factors() == lower.parent().factors()))
    throw std::invalid_argument("submodules of different modules");
  if (!upper.contains(lower)) throw std::invalid_argument("lower submodule is not contained in upper");
  const FiniteModule& n = upper.parent();
  const Lattice& up = upper.lattice();
  const std::size_t r = up.rank();
  auto coords_of = [&](const IntVector& v) {
    auto c = up.coordinates(v);
    if (!c) throw std::logic_error("vector outside upper lattice");
    return *c;
  };
  std::vector<IntVector> rel;
  for (const auto& b : lower.lattice().basis()) rel.push_back(coords_of(b));
  IntMatrix relations = IntMatrix::from_columns(r, rel);
  std::vector<IntVector> tcols, ticols;
  for (const auto& b : up.basis()) {
    tcols.push_back(coords_of(n.t_matrix() * b));
    ticols.push_back(coords_of(n.t_inv_matrix() * b));
  }
  Subquotient out;
  out.presented = module_from_relations(relations, IntMatrix::from_columns(r, tcols),
                                        IntMatrix::from_columns(r, ticols));
  out.upper = up;
  return out;
}

std::string ScalarSolution::to_string() const {
  if (!solvable) return "none";
  if (period == 0) return std::to_string(c0);
  return std::to_string(c0) + " mod " + std::to_string(period);
}

ScalarSolution solve_scalar(const FiniteModule& n, const Vec& x, const Vec& y) {
  Vec xr = n.reduce(x), yr = n.reduce(y);
  std::int64_t ord = n.order_of(xr);
  if (ord > 0) {
    Vec cur = n.zero();
    for (std::int64_t c = 0; c < ord; ++c) {
      if (cur == yr) return {true, c, ord};
      cur = n.add(cur, xr);
    }
    return {};
  }
  for (std::size_t i = 0; i < xr.size(); ++i) {
    if (n.factors()[i] != 0 || xr[i] == 0) continue;
    if (yr[i] % xr[i] != 0) return {};
    std::int64_t c = yr[i] / xr[i];
    if (n.scale(xr, c) == yr) return {true, c, 0};
    return {};
  }
  return {};
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

}  // namespace medq
