#include "medq/def1.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "medq/error.hpp"

namespace medq {

void Def1Data::validate() const {
  if (!module) throw std::invalid_argument("Def1 data has no module");
  if (offsets.empty()) throw std::invalid_argument("Def1 data needs at least one part");
  if (offsets.size() != stabilizers.size()) throw std::invalid_argument("offsets and stabilizers differ in number");
  const FiniteModule& n = *module;
  for (const auto& o : offsets)
    if (o.size() != n.rank()) throw std::invalid_argument("offset has wrong length");
  if (!n.is_zero(offsets[0])) throw std::invalid_argument("first offset must be 0");
  for (std::size_t i = 0; i < stabilizers.size(); ++i) {
    const Submodule& x = stabilizers[i];
    if (x.parent().factors() != n.factors()) throw std::invalid_argument("stabilizer lives in a different module");
    for (const auto& b : x.basis())
      if (!n.is_zero(n.sub(b, n.apply_t(b))))
        throw HypothesisViolated("(1-t) X_" + std::to_string(i + 1) + " is not zero: (1-t)" + vec_to_string(b) +
                                 " != 0");
  }
}

Def1Data Def1Data::normalized() const {
  Def1Data d = *this;
  Vec base = offsets.at(0);
  for (auto& o : d.offsets) o = module->sub(o, base);
  return d;
}

Def1Quandle::Def1Quandle(Def1Data data, std::uint64_t cap) : data_(std::move(data)) {
  data_.validate();
  const FiniteModule& n = *data_.module;
  if (!n.is_finite()) throw InfiniteUnsupported("Def1 quandle over an infinite module cannot be enumerated");
  const std::uint64_t size = n.size(kDefaultDisCap);
  const std::size_t parts = data_.parts();
  constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();

  offset_.push_back(0);
  coset_of_.resize(parts);
  for (std::size_t i = 0; i < parts; ++i) {
    const Submodule& x = data_.stabilizers[i];
    std::vector<Vec> xs = x.elements(kDefaultDisCap);
    std::vector<std::uint32_t>& table = coset_of_[i];
    table.assign(size, unset);
    std::vector<Vec> reps;
    for (std::uint64_t code = 0; code < size; ++code) {
      if (table[code] != unset) continue;
      Vec rep = x.canonical(n.decode(code));
      auto id = static_cast<std::uint32_t>(reps.size());
      for (const auto& e : xs) table[n.encode(n.add(rep, e))] = id;
      reps.push_back(std::move(rep));
    }
    std::vector<std::uint32_t> order(reps.size());
    for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return reps[a] < reps[b]; });
    std::vector<std::uint32_t> rank(reps.size());
    const std::size_t base = offset_.back();
    if (base + reps.size() > cap) throw SizeCap("Def1 quandle exceeds " + std::to_string(cap) + " elements");
    for (std::uint32_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<std::uint32_t>(base + k);
    for (auto& t : table) t = rank[t];
    for (auto k : order) {
      part_.push_back(i);
      rep_.push_back(reps[k]);
    }
    offset_.push_back(base + reps.size());
  }

  const std::size_t total = rep_.size();
  std::vector<Vec> tx(total), sy(total);
  for (std::size_t e = 0; e < total; ++e) {
    tx[e] = n.apply_t(rep_[e]);
    sy[e] = n.sub(rep_[e], tx[e]);
  }
  std::vector<std::vector<Vec>> diff(parts, std::vector<Vec>(parts));
  for (std::size_t i = 0; i < parts; ++i)
    for (std::size_t j = 0; j < parts; ++j) diff[i][j] = n.sub(data_.offsets[j], data_.offsets[i]);

  std::vector<std::uint32_t> table;
  kernels::parallel::fill_table(table, total, [&](std::size_t x, std::size_t y) {
    const std::size_t i = part_[x];
    Vec v = n.add(n.add(diff[i][part_[y]], tx[x]), sy[y]);
    return coset_of_[i][n.encode(v)];
  });
  std::vector<std::string> labels;
  labels.reserve(total);
  for (std::size_t e = 0; e < total; ++e) labels.push_back(vec_to_string(rep_[e]) + "@" + std::to_string(part_[e] + 1));
  quandle_ = FiniteQuandle(total, std::move(table), std::move(labels));
}

std::uint32_t Def1Quandle::element_of(std::size_t part, const Vec& v) const {
  const FiniteModule& n = *data_.module;
  return coset_of_.at(part)[n.encode(n.reduce(v))];
}

std::string Def1Quandle::label(std::uint32_t e) const { return quandle_.labels()[e]; }

Def1Quandle build_def1(const Def1Data& data) { return Def1Quandle(data); }

ShiftIso shift_iso(const Def1Data& data, const std::vector<Vec>& shifts) {
  if (shifts.size() != data.parts()) throw std::invalid_argument("one shift per part is required");
  const FiniteModule& n = *data.module;
  Def1Data shifted = data;
  for (std::size_t i = 0; i < data.parts(); ++i)
    shifted.offsets[i] = n.add(data.offsets[i], n.sub(shifts[i], n.apply_t(shifts[i])));
  shifted = shifted.normalized();
  Def1Quandle a(data), b(shifted);
  ShiftIso out{shifted, std::vector<std::uint32_t>(a.size())};
  for (std::uint32_t e = 0; e < a.size(); ++e) {
    std::size_t i = a.part_of(e);
    out.map[e] = b.element_of(i, n.sub(a.representative(e), shifts[i]));
  }
  if (!is_isomorphism(a.quandle(), b.quandle(), out.map)) throw std::logic_error("shift map is not an isomorphism");
  return out;
}

DisplacementModule displacement_module(const Def1Data& data) {
  data.validate();
  const ModulePtr& n = data.module;
  if (!n->is_finite()) throw InfiniteUnsupported("displacement module of infinite data");
  Submodule kernel = data.stabilizers[0];
  for (std::size_t i = 1; i < data.parts(); ++i) kernel = kernel.intersect(data.stabilizers[i]);
  std::vector<Vec> gens = kernel.basis();
  for (std::size_t k = 0; k < n->rank(); ++k) {
    Vec e = n->zero();
    e[k] = 1;
    gens.push_back(n->sub(e, n->apply_t(e)));
  }
  for (std::size_t j = 1; j < data.parts(); ++j) gens.push_back(n->sub(data.offsets[j], data.offsets[0]));
  Submodule n_prime(n, gens);
  Subquotient quotient = subquotient(n_prime, kernel);
  return {std::move(n_prime), std::move(kernel), std::move(quotient)};
}

Perm displacement_of(const Def1Quandle& q, const Vec& n) {
  const FiniteModule& m = *q.data().module;
  Perm p(q.size());
  for (std::uint32_t e = 0; e < q.size(); ++e) p[e] = q.element_of(q.part_of(e), m.add(q.representative(e), n));
  return p;
}

bool displacement_module_matches(const Def1Quandle& q, const DisplacementModule& dm) {
  DisplacementGroup dis(q.quandle());
  std::unordered_map<Perm, char, PermHash> seen;
  for (const auto& v : dm.n_prime.elements()) {
    Perm p = displacement_of(q, v);
    if (!dis.index_of(p)) return false;
    seen.emplace(std::move(p), 1);
  }
  return seen.size() == dis.size() && Integer(std::to_string(dis.size())) == dm.quotient.module().order();
}

NaturalMap natural_map(const Def1Quandle& q) {
  const Def1Data& data = q.data();
  const FiniteModule& n = *data.module;
  std::vector<std::pair<std::size_t, Vec>> values(q.size());
  for (std::uint32_t e = 0; e < q.size(); ++e) {
    std::size_t i = q.part_of(e);
    const Vec& x = q.representative(e);
    values[e] = {i, n.add(data.offsets[i], n.sub(x, n.apply_t(x)))};
  }
  NaturalMap out;
  out.image_elements = values;
  std::sort(out.image_elements.begin(), out.image_elements.end());
  out.image_elements.erase(std::unique(out.image_elements.begin(), out.image_elements.end()), out.image_elements.end());
  std::map<std::pair<std::size_t, Vec>, std::uint32_t> index;
  for (std::uint32_t k = 0; k < out.image_elements.size(); ++k) index[out.image_elements[k]] = k;
  out.map.resize(q.size());
  for (std::uint32_t e = 0; e < q.size(); ++e) out.map[e] = index.at(values[e]);
  const std::size_t m = out.image_elements.size();
  std::vector<std::uint32_t> table(m * m);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    const auto& [i, v] = out.image_elements[a];
    labels.push_back(vec_to_string(v) + "@" + std::to_string(i + 1));
    for (std::size_t b = 0; b < m; ++b) {
      const Vec& w = out.image_elements[b].second;
      Vec r = n.add(n.apply_t(v), n.sub(w, n.apply_t(w)));
      auto it = index.find({i, r});
      if (it == index.end()) throw std::logic_error("natural image is not closed");
      table[a * m + b] = it->second;
    }
  }
  out.image = FiniteQuandle(m, std::move(table), std::move(labels));
  return out;
}

InvolutoryData involutory_def1(const Def1Data& data) {
  data.validate();
  const ModulePtr& n = data.module;
  const LaurentPoly one_minus_t2 = LaurentPoly(1) - LaurentPoly::t() * LaurentPoly::t();
  const LaurentPoly one_plus_t = LaurentPoly(1) + LaurentPoly::t();
  std::vector<Vec> gens;
  for (std::size_t k = 0; k < n->rank(); ++k) {
    Vec e = n->zero();
    e[k] = 1;
    gens.push_back(n->apply(one_minus_t2, e));
  }
  for (std::size_t j = 1; j < data.parts(); ++j)
    gens.push_back(n->apply(one_plus_t, n->sub(data.offsets[j], data.offsets[0])));

  // The subgroup generated must already be t-stable.
  Lattice lat = n->relation_lattice();
  std::vector<IntVector> gi;
  for (const auto& g : gens) gi.push_back(n->to_integer(g));
  lat.add_all(gi);
  for (const auto& b : lat.basis()) {
    Vec v = n->from_integer(b);
    if (!lat.contains(n->to_integer(n->apply_t(v))) || !lat.contains(n->to_integer(n->apply_t_inv(v))))
      throw NotSubmodule("S is not closed under t");
  }
  Submodule s(n, gens);
  Subquotient q = quotient_by(s);
  ModulePtr qm = q.presented.module;
  InvolutoryData out{{qm, {}, {}}, s};
  for (std::size_t i = 0; i < data.parts(); ++i) {
    out.data.offsets.push_back(q.map(data.offsets[i]));
    std::vector<Vec> xg;
    for (const auto& b : data.stabilizers[i].basis()) xg.push_back(q.map(b));
    out.data.stabilizers.emplace_back(qm, xg);
  }
  out.data = out.data.normalized();
  out.data.validate();
  return out;
}

Rebuild rebuild_via_structure_theorem(const FiniteQuandle& q, std::uint64_t cap) {
  auto orbs = orbits(q);
  Rebuild out;
  for (const auto& o : orbs) out.orbit_representatives.push_back(o.front());
  if (orbs.empty()) throw std::invalid_argument("empty quandle");
  const std::uint32_t q0 = out.orbit_representatives[0];
  DisplacementGroup dis(q, q0, cap);
  Perm beta0_inv = inverse(q.translation(q0));
  out.data.module = dis.module_ptr();
  for (auto qi : out.orbit_representatives) {
    auto idx = dis.index_of(compose(q.translation(qi), beta0_inv));
    if (!idx) throw std::logic_error("elementary displacement missing from Dis(Q)");
    out.data.offsets.push_back(dis.coords(*idx));
    out.data.stabilizers.push_back(dis.fix(qi));
  }
  Def1Quandle rebuilt(out.data, cap);
  out.iso.resize(rebuilt.size());
  for (std::uint32_t e = 0; e < rebuilt.size(); ++e) {
    const Perm& d = dis.element(dis.element_of(rebuilt.representative(e)));
    out.iso[e] = d[out.orbit_representatives[rebuilt.part_of(e)]];
  }
  if (!is_isomorphism(rebuilt.quandle(), q, out.iso))
    throw std::logic_error("structure theorem map is not an isomorphism");
  return out;
}

}  // namespace medq
