#include "medq/quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "medq/error.hpp"

namespace medq {

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : p) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Perm identity_perm(std::size_t n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0U);
  return r;
}

FiniteQuandle::FiniteQuandle(std::size_t n, std::vector<std::uint32_t> table, std::vector<std::string> labels)
    : n_(n), table_(std::move(table)), labels_(std::move(labels)) {
  if (table_.size() != n * n) throw std::invalid_argument("quandle table has wrong size");
  for (auto v : table_)
    if (v >= n) throw std::invalid_argument("quandle table entry out of range");
  if (!labels_.empty() && labels_.size() != n) throw std::invalid_argument("wrong number of quandle labels");
}

Perm FiniteQuandle::translation(std::uint32_t y) const {
  Perm p(n_);
  for (std::size_t x = 0; x < n_; ++x) p[x] = table_[x * n_ + y];
  return p;
}

FiniteQuandle affine_quandle(const FiniteModule& n) {
  const std::uint64_t size = n.size();
  std::vector<Vec> tx(size), sy(size);
  for (std::uint64_t c = 0; c < size; ++c) {
    Vec v = n.decode(c);
    tx[c] = n.apply_t(v);
    sy[c] = n.sub(v, tx[c]);
  }
  std::vector<std::uint32_t> table;
  kernels::parallel::fill_table(table, size, [&](std::size_t x, std::size_t y) {
    return static_cast<std::uint32_t>(n.encode(n.add(tx[x], sy[y])));
  });
  return FiniteQuandle(size, std::move(table));
}

std::string AxiomReport::summary() const {
  if (ok()) return "medial quandle";
  std::ostringstream out;
  if (!idempotence.empty()) out << "idempotence fails at " << idempotence.size() << " elements (first " << idempotence[0] << "); ";
  if (!not_permutation.empty())
    out << "right translation is not a permutation for " << not_permutation.size() << " elements (first "
        << not_permutation[0] << "); ";
  if (medial_violations) {
    const auto& q = medial_examples.front();
    out << medial_violations << " medial violations (first w=" << q[0] << " x=" << q[1] << " y=" << q[2] << " z=" << q[3]
        << ")";
  }
  return out.str();
}

AxiomReport check_medial_axioms(const FiniteQuandle& q, std::size_t max_examples) {
  AxiomReport r;
  const std::size_t n = q.size();
  for (std::uint32_t x = 0; x < n; ++x)
    if (q.op(x, x) != x) r.idempotence.push_back(x);
  for (std::uint32_t y = 0; y < n; ++y) {
    std::vector<char> hit(n, 0);
    bool ok = true;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (hit[q.op(x, y)]) {
        ok = false;
        break;
      }
      hit[q.op(x, y)] = 1;
    }
    if (!ok) r.not_permutation.push_back(y);
  }
  auto scan = kernels::parallel::medial_scan(q.table(), n, max_examples);
  r.medial_violations = scan.count;
  r.medial_examples = std::move(scan.examples);
  return r;
}

bool is_involutory(const FiniteQuandle& q) {
  for (std::uint32_t x = 0; x < q.size(); ++x)
    for (std::uint32_t y = 0; y < q.size(); ++y)
      if (q.op(q.op(x, y), y) != x) return false;
  return true;
}

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool unite(std::vector<std::uint32_t>& parent, std::uint32_t a, std::uint32_t b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a == b) return false;
  if (a < b) std::swap(a, b);
  parent[a] = b;
  return true;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> orbits(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0U);
  // x and x ▷ y lie in one orbit; inverse translations add nothing new.
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) unite(parent, x, q.op(x, y));
  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (std::uint32_t x = 0; x < n; ++x) groups[find_root(parent, x)].push_back(x);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> orbit_sizes(const FiniteQuandle& q) {
  std::vector<std::size_t> s;
  for (const auto& o : orbits(q)) s.push_back(o.size());
  return s;
}

DisplacementGroup::DisplacementGroup(const FiniteQuandle& q, std::uint32_t base, std::uint64_t cap)
    : q_(&q), base_(base) {
  const std::size_t n = q.size();
  if (n == 0) {
    module_ = std::make_shared<FiniteModule>(std::vector<std::int64_t>{}, IntMatrix(0, 0), IntMatrix(0, 0));
    elements_.push_back({});
    index_[{}] = 0;
    coords_.push_back({});
    by_code_.push_back(0);
    return;
  }
  if (base >= n) throw std::invalid_argument("base point out of range");
  beta_base_ = q.translation(base);
  beta_base_inv_ = inverse(beta_base_);

  Perm id = identity_perm(n);
  elements_.push_back(id);
  index_[id] = 0;
  std::vector<std::vector<std::int64_t>> raw{{}};
  std::vector<Perm> gens;
  std::vector<std::int64_t> orders;
  std::vector<std::vector<std::int64_t>> power_coords;

  for (std::uint32_t y = 0; y < n; ++y) {
    Perm g = compose(q.translation(y), beta_base_inv_);
    if (index_.count(g)) continue;
    for (const auto& h : gens)
      if (compose(g, h) != compose(h, g)) throw Error("displacement group is not abelian; the quandle is not medial");
    Perm p = g;
    std::int64_t k = 1;
    while (!index_.count(p)) {
      p = compose(p, g);
      ++k;
    }
    if (static_cast<std::uint64_t>(elements_.size()) * static_cast<std::uint64_t>(k) > cap)
      throw SizeCap("displacement group exceeds " + std::to_string(cap) + " elements");
    const std::size_t gi = gens.size();
    orders.push_back(k);
    power_coords.push_back(raw[index_.at(p)]);
    gens.push_back(g);
    const std::size_t old = elements_.size();
    Perm gj = g;
    for (std::int64_t j = 1; j < k; ++j) {
      for (std::size_t h = 0; h < old; ++h) {
        Perm e = compose(elements_[h], gj);
        std::vector<std::int64_t> c = raw[h];
        c.resize(gi + 1, 0);
        c[gi] = j;
        index_.emplace(e, elements_.size());
        elements_.push_back(std::move(e));
        raw.push_back(std::move(c));
      }
      gj = compose(gj, g);
    }
  }

  const std::size_t G = gens.size();
  auto padded = [G](const std::vector<std::int64_t>& c) {
    IntVector v(G);
    for (std::size_t i = 0; i < c.size(); ++i) v[i] = to_integer(c[i]);
    return v;
  };
  std::vector<IntVector> rel, tcols, ticols;
  for (std::size_t i = 0; i < G; ++i) {
    IntVector col = padded(power_coords[i]);
    for (auto& x : col) x = -x;
    col[i] += to_integer(orders[i]);
    rel.push_back(std::move(col));
    for (bool forward : {true, false}) {
      Perm tg = forward ? compose(beta_base_, compose(gens[i], beta_base_inv_))
                        : compose(beta_base_inv_, compose(gens[i], beta_base_));
      auto it = index_.find(tg);
      if (it == index_.end()) throw Error("displacement group is not closed under conjugation; the quandle is not medial");
      (forward ? tcols : ticols).push_back(padded(raw[it->second]));
    }
  }
  PresentedModule pm = module_from_relations(IntMatrix::from_columns(G, rel), IntMatrix::from_columns(G, tcols),
                                             IntMatrix::from_columns(G, ticols));
  module_ = pm.module;
  coords_.reserve(elements_.size());
  for (const auto& c : raw) coords_.push_back(pm.map(padded(c)));
  if (module_->order() != Integer(std::to_string(elements_.size())))
    throw std::logic_error("displacement group order does not match its module");
  by_code_.assign(elements_.size(), 0);
  for (std::size_t e = 0; e < elements_.size(); ++e) by_code_[module_->encode(coords_[e])] = e;
}

std::optional<std::size_t> DisplacementGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DisplacementGroup::element_of(const Vec& v) const { return by_code_[module_->encode(module_->reduce(v))]; }

Perm DisplacementGroup::t_action(const Perm& d) const { return compose(beta_base_, compose(d, beta_base_inv_)); }

Perm DisplacementGroup::t_action_at(const Perm& d, std::uint32_t q) const {
  Perm b = q_->translation(q);
  return compose(b, compose(d, inverse(b)));
}

std::vector<std::size_t> DisplacementGroup::fix_elements(std::uint32_t q) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < elements_.size(); ++e)
    if (elements_[e].empty() || elements_[e][q] == q) out.push_back(e);
  return out;
}

Submodule DisplacementGroup::fix(std::uint32_t q) const {
  std::vector<Vec> gens;
  for (auto e : fix_elements(q)) gens.push_back(coords_[e]);
  return Submodule(module_, gens);
}

bool is_semiregular(const FiniteQuandle& q, std::uint64_t cap) {
  DisplacementGroup dis(q, 0, cap);
  return kernels::parallel::fixed_point_displacements(dis.elements()).empty();
}

CongruenceQuotient congruence_quotient(const FiniteQuandle& q,
                                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& seeds) {
  const std::size_t n = q.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0U);
  for (auto [a, b] : seeds) unite(parent, a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint32_t r = find_root(parent, x);
      if (r == x) continue;
      for (std::uint32_t y = 0; y < n; ++y) {
        changed |= unite(parent, q.op(x, y), q.op(r, y));
        changed |= unite(parent, q.op(y, x), q.op(y, r));
      }
    }
  }
  CongruenceQuotient out;
  out.congruence.block.assign(n, 0);
  std::vector<std::int64_t> id_of_root(n, -1);
  std::vector<std::uint32_t> rep;
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t r = find_root(parent, x);
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<std::int64_t>(rep.size());
      rep.push_back(x);
    }
    out.congruence.block[x] = static_cast<std::uint32_t>(id_of_root[r]);
  }
  const std::size_t m = rep.size();
  out.congruence.num_blocks = m;
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = out.congruence.block[q.op(rep[a], rep[b])];
  out.quotient = FiniteQuandle(m, std::move(table));
  return out;
}

CongruenceQuotient involutory_quotient(const FiniteQuandle& q) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seeds;
  for (std::uint32_t x = 0; x < q.size(); ++x)
    for (std::uint32_t y = 0; y < q.size(); ++y) seeds.push_back({x, q.op(q.op(x, y), y)});
  return congruence_quotient(q, seeds);
}

CongruenceQuotient semiregular_quotient(const FiniteQuandle& q, std::uint64_t cap) {
  CongruenceQuotient cur;
  cur.congruence.block.resize(q.size());
  std::iota(cur.congruence.block.begin(), cur.congruence.block.end(), 0U);
  cur.congruence.num_blocks = q.size();
  cur.quotient = q;
  for (;;) {
    DisplacementGroup dis(cur.quotient, 0, cap);
    auto fp = kernels::parallel::fixed_point_displacements(dis.elements());
    if (fp.empty()) break;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> seeds;
    for (auto e : fp) {
      const Perm& d = dis.element(e);
      for (std::uint32_t x = 0; x < d.size(); ++x) seeds.push_back({x, d[x]});
    }
    CongruenceQuotient next = congruence_quotient(cur.quotient, seeds);
    for (auto& b : cur.congruence.block) b = next.congruence.block[b];
    cur.congruence.num_blocks = next.congruence.num_blocks;
    cur.quotient = std::move(next.quotient);
  }
  return cur;
}

bool is_homomorphism(const FiniteQuandle& a, const FiniteQuandle& b, const std::vector<std::uint32_t>& f) {
  if (f.size() != a.size()) return false;
  for (auto v : f)
    if (v >= b.size()) return false;
  for (std::uint32_t x = 0; x < a.size(); ++x)
    for (std::uint32_t y = 0; y < a.size(); ++y)
      if (f[a.op(x, y)] != b.op(f[x], f[y])) return false;
  return true;
}

bool is_isomorphism(const FiniteQuandle& a, const FiniteQuandle& b, const std::vector<std::uint32_t>& f) {
  if (a.size() != b.size() || !is_homomorphism(a, b, f)) return false;
  std::vector<char> hit(b.size(), 0);
  for (auto v : f) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

namespace {

// Orbit size and cycle type of the translation by x.
std::vector<std::vector<std::size_t>> profiles(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> orbit_size(n);
  for (const auto& o : orbits(q))
    for (auto x : o) orbit_size[x] = o.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    Perm p = q.translation(x);
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> cycles;
    for (std::uint32_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::size_t len = 0;
      for (std::uint32_t c = s; !seen[c]; c = p[c]) {
        seen[c] = 1;
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    out[x].push_back(orbit_size[x]);
    out[x].insert(out[x].end(), cycles.begin(), cycles.end());
  }
  return out;
}

struct SearchState {
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> finv;
  std::vector<std::uint32_t> assigned;
};

class IsoSearcher {
 public:
  IsoSearcher(const FiniteQuandle& a, const FiniteQuandle& b) : a_(a), b_(b), pa_(profiles(a)), pb_(profiles(b)) {}

  std::optional<std::vector<std::uint32_t>> run() {
    const std::size_t n = a_.size();
    // Greedy generating sequence: least element outside the current subquandle.
    std::vector<char> in(n, 0);
    std::vector<std::uint32_t> members;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (in[x]) continue;
      gens_.push_back(x);
      std::vector<std::uint32_t> queue{x};
      in[x] = 1;
      while (!queue.empty()) {
        std::uint32_t u = queue.back();
        queue.pop_back();
        members.push_back(u);
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (std::uint32_t w : {a_.op(u, members[i]), a_.op(members[i], u)})
            if (!in[w]) {
              in[w] = 1;
              queue.push_back(w);
            }
        }
      }
    }
    SearchState s{std::vector<std::int64_t>(n, -1), std::vector<std::int64_t>(n, -1), {}};
    if (!search(0, s)) return std::nullopt;
    std::vector<std::uint32_t> f(n);
    for (std::size_t x = 0; x < n; ++x) f[x] = static_cast<std::uint32_t>(result_.f[x]);
    return f;
  }

 private:
  bool extend(SearchState& s, std::uint32_t x0, std::uint32_t y0) const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{x0, y0}};
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      if (s.f[x] >= 0) {
        if (s.f[x] != y) return false;
        continue;
      }
      if (s.finv[y] >= 0 || pa_[x] != pb_[y]) return false;
      s.f[x] = y;
      s.finv[y] = x;
      s.assigned.push_back(x);
      for (auto z : s.assigned) {
        auto fz = static_cast<std::uint32_t>(s.f[z]);
        queue.push_back({a_.op(x, z), b_.op(y, fz)});
        queue.push_back({a_.op(z, x), b_.op(fz, y)});
      }
    }
    return true;
  }

  bool search(std::size_t level, const SearchState& s) {
    if (level == gens_.size()) {
      result_ = s;
      return true;
    }
    std::uint32_t x = gens_[level];
    if (s.f[x] >= 0) return search(level + 1, s);
    for (std::uint32_t y = 0; y < b_.size(); ++y) {
      if (s.finv[y] >= 0 || pa_[x] != pb_[y]) continue;
      SearchState next = s;
      if (extend(next, x, y) && search(level + 1, next)) return true;
    }
    return false;
  }

  const FiniteQuandle& a_;
  const FiniteQuandle& b_;
  std::vector<std::vector<std::size_t>> pa_, pb_;
  std::vector<std::uint32_t> gens_;
  SearchState result_;
};

}  // namespace

IsoResult iso_search(const FiniteQuandle& a, const FiniteQuandle& b, std::size_t cap) {
  if (a.size() > cap || b.size() > cap)
    throw SizeCap("isomorphism search limited to " + std::to_string(cap) + " elements");
  IsoResult r;
  if (a.size() != b.size()) {
    r.mismatch = "size " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    return r;
  }
  auto sa = orbit_sizes(a), sb = orbit_sizes(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    r.mismatch = "orbit sizes differ";
    return r;
  }
  if (DisplacementGroup(a).invariant_factors() != DisplacementGroup(b).invariant_factors()) {
    r.mismatch = "displacement groups differ";
    return r;
  }
  IsoSearcher searcher(a, b);
  auto f = searcher.run();
  if (!f) {
    r.mismatch = "no isomorphism (search exhausted)";
    return r;
  }
  if (!is_isomorphism(a, b, *f)) throw std::logic_error("isomorphism search produced an invalid map");
  r.map = std::move(f);
  return r;
}

}  // namespace medq
