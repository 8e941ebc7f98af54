#pragma once
// Hot loops of the quandle engine. Each kernel has a serial reference version
// and an OpenMP version producing identical results.

#include <array>
#include <cstdint>
#include <vector>

namespace medq::kernels {

using Perm = std::vector<std::uint32_t>;
using Quad = std::array<std::uint32_t, 4>;

struct MedialScan {
  std::uint64_t count = 0;
  // The lexicographically first violations, (w, x, y, z).
  std::vector<Quad> examples;
  bool operator==(const MedialScan& o) const = default;
};

namespace serial {

MedialScan medial_scan(const std::vector<std::uint32_t>& table, std::size_t n, std::size_t max_examples);
// Indices of non-identity permutations having a fixed point, ascending.
std::vector<std::size_t> fixed_point_displacements(const std::vector<Perm>& perms);

template <class F>
void fill_table(std::vector<std::uint32_t>& table, std::size_t n, F&& f) {
  table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = f(x, y);
}

}  // namespace serial

namespace parallel {

MedialScan medial_scan(const std::vector<std::uint32_t>& table, std::size_t n, std::size_t max_examples);
std::vector<std::size_t> fixed_point_displacements(const std::vector<Perm>& perms);

template <class F>
void fill_table(std::vector<std::uint32_t>& table, std::size_t n, F&& f) {
  table.resize(n * n);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t x = 0; x < rows; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[static_cast<std::size_t>(x) * n + y] = f(static_cast<std::size_t>(x), y);
}

}  // namespace parallel

}  // namespace medq::kernels
