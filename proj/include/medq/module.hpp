#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "medq/laurent.hpp"
#include "medq/matrix.hpp"

namespace medq {

// Element of a FiniteModule in invariant-factor coordinates.
using Vec = std::vector<std::int64_t>;

// Z/d_1 + ... + Z/d_k (d_k = 0 for a free factor) with t acting by T.
class FiniteModule {
 public:
  FiniteModule() = default;
  // Validates that T and T_inv preserve the relation lattice and are mutually
  // inverse modulo it. Factors equal to 1 are not allowed.
  FiniteModule(std::vector<std::int64_t> factors, const IntMatrix& t, const IntMatrix& t_inv);

  std::size_t rank() const { return factors_.size(); }
  const std::vector<std::int64_t>& factors() const { return factors_; }
  bool is_finite() const;
  std::size_t free_rank() const;
  std::vector<std::int64_t> torsion() const;
  // Group order, 0 when infinite.
  Integer order() const;
  // Group order as a machine integer; throws InfiniteUnsupported or SizeCap.
  std::uint64_t size(std::uint64_t cap = std::uint64_t{1} << 40) const;

  Vec zero() const { return Vec(rank(), 0); }
  Vec reduce(Vec v) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec scale(const Vec& a, std::int64_t k) const;
  Vec apply_t(const Vec& v) const;
  Vec apply_t_inv(const Vec& v) const;
  Vec apply(const LaurentPoly& p, const Vec& v) const;
  bool is_zero(const Vec& v) const;
  // Additive order, 0 when infinite.
  std::int64_t order_of(const Vec& v) const;

  // Mixed-radix indexing of a finite module's elements.
  std::uint64_t encode(const Vec& v) const;
  Vec decode(std::uint64_t code) const;

  IntVector to_integer(const Vec& v) const;
  Vec from_integer(const IntVector& v) const;
  const IntMatrix& t_matrix() const { return t_; }
  const IntMatrix& t_inv_matrix() const { return t_inv_; }
  Lattice relation_lattice() const;

 private:
  Vec apply_matrix(const std::vector<std::int64_t>& m, const Vec& v) const;

  std::vector<std::int64_t> factors_;
  IntMatrix t_;
  IntMatrix t_inv_;
  std::vector<std::int64_t> t64_;
  std::vector<std::int64_t> t_inv64_;
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

// A Lambda-submodule; the generators are closed under t and t^-1 on construction.
class Submodule {
 public:
  Submodule() = default;
  Submodule(ModulePtr parent, const std::vector<Vec>& generators);
  static Submodule zero(ModulePtr parent) { return Submodule(std::move(parent), {}); }
  static Submodule whole(ModulePtr parent);

  const FiniteModule& parent() const { return *parent_; }
  const ModulePtr& parent_ptr() const { return parent_; }
  // Lattice in Z^k containing the parent's relation lattice.
  const Lattice& lattice() const { return lattice_; }
  // Z-basis of the submodule modulo relations (reduced vectors, zeros dropped).
  std::vector<Vec> basis() const;

  bool contains(const Vec& v) const;
  bool contains(const Submodule& other) const;
  bool is_zero() const;
  // Lexicographically least representative of v + X.
  Vec canonical(const Vec& v) const;
  Integer order() const;
  // |N / X|, 0 when infinite.
  Integer index() const;
  std::vector<Vec> elements(std::uint64_t cap = 1000000) const;

  Submodule sum(const Submodule& other) const;
  Submodule intersect(const Submodule& other) const;
  // p * X.
  Submodule image(const LaurentPoly& p) const;

  bool operator==(const Submodule& other) const { return lattice_ == other.lattice_; }

 private:
  ModulePtr parent_;
  Lattice lattice_;
};

// Module given by generators and relation columns, with t acting on generators.
struct LambdaPresentation {
  std::vector<std::string> generators;
  std::vector<std::string> relation_labels;
  // columns[r][g] is the coefficient of generator g in relation r.
  std::vector<std::vector<LaurentPoly>> columns;
};

struct IntPresentation {
  std::vector<std::string> generators;
  IntMatrix relations;    // generators x relations
  IntMatrix t_action;     // column j is t applied to generator j
  IntMatrix t_inv_action;
  ScalarRing ring{0, 1};
};

IntPresentation specialize_presentation(const LambdaPresentation& p, const ScalarRing& r);

// A module together with the maps between presentation generator coordinates
// and invariant-factor coordinates.
struct PresentedModule {
  ModulePtr module;
  IntMatrix to_module;    // k x g
  IntMatrix from_module;  // g x k
  Vec map(const IntVector& generator_coords) const;
};

PresentedModule finite_module_from(const IntPresentation& p);
PresentedModule module_from_relations(const IntMatrix& relations, const IntMatrix& t,
                                      const IntMatrix& t_inv);

// upper / lower for Lambda-submodules lower <= upper of the same parent.
struct Subquotient {
  PresentedModule presented;
  Lattice upper;
  // Image of an element of upper in the subquotient.
  Vec map(const Vec& v) const;
  // A preimage in the parent module.
  Vec lift(const Vec& q) const;
  const FiniteModule& module() const { return *presented.module; }
};

Subquotient subquotient(const Submodule& upper, const Submodule& lower);
inline Subquotient quotient_by(const Submodule& x) { return subquotient(Submodule::whole(x.parent_ptr()), x); }

// All integers c with c * x = y, as c0 + period * Z (period 0: unique), or none.
struct ScalarSolution {
  bool solvable = false;
  std::int64_t c0 = 0;
  std::int64_t period = 0;
  std::string to_string() const;
  bool operator==(const ScalarSolution& o) const = default;
};
ScalarSolution solve_scalar(const FiniteModule& n, const Vec& x, const Vec& y);

std::string vec_to_string(const Vec& v);

}  // namespace medq
