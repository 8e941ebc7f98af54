#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "medq/module.hpp"
#include "medq/quandle.hpp"

namespace medq {

// Module N with offsets n_i (n_1 = 0) and submodules X_i with (1 - t) X_i = 0.
struct Def1Data {
  ModulePtr module;
  std::vector<Vec> offsets;
  std::vector<Submodule> stabilizers;

  std::size_t parts() const { return offsets.size(); }
  // Throws HypothesisViolated if some (1 - t) X_i is nonzero, and
  // std::invalid_argument on malformed data.
  void validate() const;
  // Subtracts n_1 from every offset.
  Def1Data normalized() const;
};

// Element bound for explicit tables (the table has size^2 entries).
constexpr std::uint64_t kDefaultQuandleCap = 4096;

// Q(N, (n_i), (X_i)): elements are pairs (i, x + X_i), numbered part by part
// with lexicographically least coset representatives in increasing order.
class Def1Quandle {
 public:
  explicit Def1Quandle(Def1Data data, std::uint64_t cap = kDefaultQuandleCap);

  const Def1Data& data() const { return data_; }
  const FiniteQuandle& quandle() const { return quandle_; }
  std::size_t size() const { return quandle_.size(); }
  std::size_t part_of(std::uint32_t e) const { return part_[e]; }
  const Vec& representative(std::uint32_t e) const { return rep_[e]; }
  std::size_t part_offset(std::size_t i) const { return offset_[i]; }
  std::size_t part_size(std::size_t i) const { return offset_[i + 1] - offset_[i]; }
  // Element (i, v + X_i) for any v in N.
  std::uint32_t element_of(std::size_t part, const Vec& v) const;
  std::string label(std::uint32_t e) const;

 private:
  Def1Data data_;
  FiniteQuandle quandle_;
  std::vector<std::size_t> part_;
  std::vector<Vec> rep_;
  std::vector<std::size_t> offset_;
  std::vector<std::vector<std::uint32_t>> coset_of_;  // per part, by element code of N
};

Def1Quandle build_def1(const Def1Data& data);

// Data with n'_i = n_i + (1 - t) s_i (renormalized), and the isomorphism
// x@i -> (x - s_i)@i from the original quandle onto it.
struct ShiftIso {
  Def1Data shifted;
  std::vector<std::uint32_t> map;
};
ShiftIso shift_iso(const Def1Data& data, const std::vector<Vec>& shifts);

// N' generated by the intersection of the X_i, (1 - t) N and the n_j - n_k;
// Dis(Q) is N' / kernel with n acting by x@i -> (x + n)@i.
struct DisplacementModule {
  Submodule n_prime;
  Submodule kernel;
  Subquotient quotient;
};
DisplacementModule displacement_module(const Def1Data& data);
Perm displacement_of(const Def1Quandle& q, const Vec& n);
// Checks that {d_n : n in N'} is exactly Dis(Q) and |Dis(Q)| = |N' / kernel|.
bool displacement_module_matches(const Def1Quandle& q, const DisplacementModule& dm);

// f(x@i) = (i, n_i + (1 - t) x) into the affine quandle of N tagged by the
// orbit index; image operation (i, v) ▷ (j, w) = (i, t v + (1 - t) w).
struct NaturalMap {
  std::vector<std::uint32_t> map;
  FiniteQuandle image;
  std::vector<std::pair<std::size_t, Vec>> image_elements;
};
NaturalMap natural_map(const Def1Quandle& q);

// Quotient data over N / S, S generated by (1 - t^2) N and the (1 + t)(n_j - n_i).
struct InvolutoryData {
  Def1Data data;
  Submodule s;
};
InvolutoryData involutory_def1(const Def1Data& data);

// Structure theorem: Q is isomorphic to Q(Dis(Q), (d_i), (Fix(q_i))).
struct Rebuild {
  Def1Data data;
  std::vector<std::uint32_t> orbit_representatives;
  // iso[e] is the element of Q corresponding to element e of the rebuilt quandle.
  std::vector<std::uint32_t> iso;
};
Rebuild rebuild_via_structure_theorem(const FiniteQuandle& q, std::uint64_t cap = kDefaultDisCap);

}  // namespace medq
