#pragma once
// Random small Lambda-modules and Def1 data for property tests.

#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "medq/def1.hpp"
#include "medq/diagram.hpp"
#include "medq/module.hpp"

namespace gen {

using namespace medq;

// Matrix of the module endomorphism with columns T e_j, or empty when the
// candidate does not respect the relations or is not bijective.
inline std::shared_ptr<FiniteModule> try_module(const std::vector<std::int64_t>& factors, const IntMatrix& t) {
  const std::size_t k = factors.size();
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      Integer v = t(i, j) * factors[j];
      if (mod_floor(v, Integer(static_cast<long>(factors[i]))) != 0) return nullptr;
    }
  // Apply T as a map on all elements; find its order by iterating on basis vectors.
  auto apply = [&](const Vec& v) {
    Vec r(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc += t(i, j).get_si() * v[j];
      r[i] = mod_i64(acc, factors[i]);
    }
    return r;
  };
  std::int64_t size = 1;
  for (auto d : factors) size *= d;
  std::set<Vec> image;
  for (std::int64_t c = 0; c < size; ++c) {
    Vec v(k);
    std::int64_t x = c;
    for (std::size_t i = 0; i < k; ++i) {
      v[i] = x % factors[i];
      x /= factors[i];
    }
    image.insert(apply(v));
  }
  if (static_cast<std::int64_t>(image.size()) != size) return nullptr;
  // T^order = 1 on the basis; T^{-1} = T^{order-1}.
  IntMatrix power = IntMatrix::identity(k);
  IntMatrix inv;
  for (int step = 1; step <= 5000; ++step) {
    IntMatrix next = t * power;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) next(i, j) = mod_floor(next(i, j), Integer(static_cast<long>(factors[i])));
    bool identity = true;
    for (std::size_t i = 0; i < k && identity; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Integer expect = i == j ? 1 : 0;
        if (mod_floor(next(i, j) - expect, Integer(static_cast<long>(factors[i]))) != 0) {
          identity = false;
          break;
        }
      }
    if (identity) {
      inv = power;
      break;
    }
    power = next;
  }
  if (inv.rows() != k) return nullptr;
  return std::make_shared<FiniteModule>(factors, t, inv);
}

inline std::shared_ptr<FiniteModule> random_module(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  for (;;) {
    int which = kind(rng);
    std::vector<std::int64_t> factors;
    if (which == 0) {
      factors = {std::uniform_int_distribution<int>(2, 16)(rng)};
    } else if (which == 1) {
      std::int64_t m = std::uniform_int_distribution<int>(2, 5)(rng);
      factors = {m, m};
    } else {
      std::int64_t a = std::uniform_int_distribution<int>(2, 4)(rng);
      std::int64_t b = a * std::uniform_int_distribution<int>(1, 3)(rng);
      factors = {a, b};
    }
    const std::size_t k = factors.size();
    IntMatrix t(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        t(i, j) = std::uniform_int_distribution<long>(0, factors[i] - 1)(rng);
    if (auto m = try_module(factors, t)) return m;
  }
}

inline std::vector<Vec> all_elements(const FiniteModule& n) {
  std::vector<Vec> out;
  for (std::uint64_t c = 0; c < n.size(); ++c) out.push_back(n.decode(c));
  return out;
}

inline Vec random_element(const FiniteModule& n, std::mt19937_64& rng) {
  return n.decode(std::uniform_int_distribution<std::uint64_t>(0, n.size() - 1)(rng));
}

inline Def1Data random_def1(std::mt19937_64& rng, std::size_t max_size = 64) {
  for (;;) {
    auto n = random_module(rng);
    ModulePtr np = n;
    std::vector<Vec> fixed;
    for (const auto& v : all_elements(*n))
      if (n->apply_t(v) == v) fixed.push_back(v);
    const std::size_t parts = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    Def1Data d{np, {}, {}};
    for (std::size_t i = 0; i < parts; ++i) {
      d.offsets.push_back(i == 0 ? n->zero() : random_element(*n, rng));
      std::vector<Vec> gens;
      const int count = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int c = 0; c < count; ++c)
        gens.push_back(fixed[std::uniform_int_distribution<std::size_t>(0, fixed.size() - 1)(rng)]);
      d.stabilizers.emplace_back(np, gens);
    }
    Integer total = 0;
    for (const auto& x : d.stabilizers) total += x.index();
    if (total <= static_cast<long>(max_size)) return d;
  }
}

// Virtual diagram with random over arcs and writhes: each arc end becomes a
// crossing where that arc enters and the next arc of the component leaves.
// Components drawn with zero arcs-ends are single unknotted arcs.
inline Diagram random_diagram(std::mt19937_64& rng, int max_components = 3, int max_arcs = 5) {
  const int mu = std::uniform_int_distribution<int>(1, max_components)(rng);
  std::vector<std::vector<std::string>> comps;
  std::vector<std::string> all;
  for (int i = 0; i < mu; ++i) {
    int n = std::uniform_int_distribution<int>(0, max_arcs)(rng);
    if (n == 0) n = 1;
    std::vector<std::string> c;
    for (int j = 0; j < n; ++j) c.push_back("k" + std::to_string(i) + "_" + std::to_string(j));
    comps.push_back(c);
    all.insert(all.end(), c.begin(), c.end());
  }
  std::vector<NamedCrossing> crossings;
  for (const auto& c : comps) {
    // A one-arc component is left crossing-free half of the time.
    if (c.size() == 1 && std::uniform_int_distribution<int>(0, 1)(rng) == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const std::string& in = c[j];
      const std::string& out = c[(j + 1) % c.size()];
      const std::string& over = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      const int w = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
      crossings.push_back(w > 0 ? NamedCrossing{over, in, out, w} : NamedCrossing{over, out, in, w});
    }
  }
  return Diagram(comps, crossings);
}

}  // namespace gen
