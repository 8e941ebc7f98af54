#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "medq/kernels.hpp"
#include "medq/module.hpp"

namespace medq {

using Perm = kernels::Perm;

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

Perm compose(const Perm& a, const Perm& b);  // a after b
Perm inverse(const Perm& p);
Perm identity_perm(std::size_t n);

// Binary operation given by a table; x ▷ y = table[x * n + y].
class FiniteQuandle {
 public:
  FiniteQuandle() = default;
  FiniteQuandle(std::size_t n, std::vector<std::uint32_t> table, std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  std::uint32_t op(std::uint32_t x, std::uint32_t y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  // beta_y : x -> x ▷ y.
  Perm translation(std::uint32_t y) const;
  bool operator==(const FiniteQuandle& o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::string> labels_;
};

// Affine quandle x ▷ y = t x + (1 - t) y on a finite module; elements in
// encode() order.
FiniteQuandle affine_quandle(const FiniteModule& n);

struct AxiomReport {
  std::vector<std::uint32_t> idempotence;        // x with x ▷ x != x
  std::vector<std::uint32_t> not_permutation;    // y with beta_y not bijective
  std::uint64_t medial_violations = 0;
  std::vector<kernels::Quad> medial_examples;    // (w, x, y, z)
  bool ok() const { return idempotence.empty() && not_permutation.empty() && medial_violations == 0; }
  std::string summary() const;
};

AxiomReport check_medial_axioms(const FiniteQuandle& q, std::size_t max_examples = 16);

bool is_involutory(const FiniteQuandle& q);

// Orbits under all translations, each sorted, ordered by least element.
std::vector<std::vector<std::uint32_t>> orbits(const FiniteQuandle& q);
std::vector<std::size_t> orbit_sizes(const FiniteQuandle& q);

constexpr std::uint64_t kDefaultDisCap = 1000000;

// Dis(Q) of a medial quandle as an abelian permutation group with its
// Lambda-module structure, t acting by conjugation with beta_base.
class DisplacementGroup {
 public:
  explicit DisplacementGroup(const FiniteQuandle& q, std::uint32_t base = 0, std::uint64_t cap = kDefaultDisCap);

  std::size_t size() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(const Perm& p) const;
  const Perm& element(std::size_t i) const { return elements_[i]; }

  const FiniteModule& module() const { return *module_; }
  const ModulePtr& module_ptr() const { return module_; }
  // Module coordinates of element i, and the inverse lookup.
  const Vec& coords(std::size_t i) const { return coords_[i]; }
  std::size_t element_of(const Vec& v) const;
  std::vector<std::int64_t> invariant_factors() const { return module_->factors(); }

  // t . d = beta_base d beta_base^-1.
  Perm t_action(const Perm& d) const;
  // Same conjugation with another base point; agrees with t_action.
  Perm t_action_at(const Perm& d, std::uint32_t q) const;
  std::uint32_t base() const { return base_; }

  // Displacements fixing q, as element indices and as a submodule.
  std::vector<std::size_t> fix_elements(std::uint32_t q) const;
  Submodule fix(std::uint32_t q) const;

 private:
  const FiniteQuandle* q_;
  std::uint32_t base_;
  Perm beta_base_;
  Perm beta_base_inv_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  ModulePtr module_;
  std::vector<Vec> coords_;
  std::vector<std::size_t> by_code_;
};

bool is_semiregular(const FiniteQuandle& q, std::uint64_t cap = kDefaultDisCap);

struct QuandleCongruence {
  // Block of each element; blocks numbered in order of their least element.
  std::vector<std::uint32_t> block;
  std::size_t num_blocks = 0;
};

struct CongruenceQuotient {
  QuandleCongruence congruence;
  FiniteQuandle quotient;
};

CongruenceQuotient congruence_quotient(const FiniteQuandle& q,
                                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& seeds);
// Seeds (x, (x ▷ y) ▷ y).
CongruenceQuotient involutory_quotient(const FiniteQuandle& q);
// Repeatedly identifies x with d(x) for displacements d with a fixed point.
CongruenceQuotient semiregular_quotient(const FiniteQuandle& q, std::uint64_t cap = kDefaultDisCap);

struct IsoResult {
  // map[x] is the image of x in the second quandle.
  std::optional<std::vector<std::uint32_t>> map;
  std::string mismatch;
  explicit operator bool() const { return map.has_value(); }
};

constexpr std::size_t kDefaultIsoCap = 512;

IsoResult iso_search(const FiniteQuandle& a, const FiniteQuandle& b, std::size_t cap = kDefaultIsoCap);
bool is_homomorphism(const FiniteQuandle& a, const FiniteQuandle& b, const std::vector<std::uint32_t>& f);
bool is_isomorphism(const FiniteQuandle& a, const FiniteQuandle& b, const std::vector<std::uint32_t>& f);

}  // namespace medq
