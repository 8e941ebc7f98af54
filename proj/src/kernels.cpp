#include "medq/kernels.hpp"

#include <algorithm>


namespace medq::kernels {

namespace {

// Violations with first coordinate w, in lexicographic order.
void scan_row(const std::vector<std::uint32_t>& t, std::size_t n, std::size_t w, std::size_t max_examples,
              MedialScan& out) {
  const std::uint32_t* row_w = t.data() + w * n;
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint32_t wx = row_w[x];
    const std::uint32_t* row_wx = t.data() + static_cast<std::size_t>(wx) * n;
    for (std::size_t y = 0; y < n; ++y) {
      const std::uint32_t wy = row_w[y];
      const std::uint32_t* row_wy = t.data() + static_cast<std::size_t>(wy) * n;
      const std::uint32_t* row_x = t.data() + x * n;
      const std::uint32_t* row_y = t.data() + y * n;
      for (std::size_t z = 0; z < n; ++z) {
        if (row_wx[row_y[z]] != row_wy[row_x[z]]) {
          ++out.count;
          if (out.examples.size() < max_examples)
            out.examples.push_back({static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(x),
                                    static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(z)});
        }
      }
    }
  }
}

bool has_fixed_point(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == i) return true;
  return false;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

}  // namespace

namespace serial {

MedialScan medial_scan(const std::vector<std::uint32_t>& table, std::size_t n, std::size_t max_examples) {
  MedialScan out;
  for (std::size_t w = 0; w < n; ++w) scan_row(table, n, w, max_examples, out);
  return out;
}

std::vector<std::size_t> fixed_point_displacements(const std::vector<Perm>& perms) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (!is_identity(perms[i]) && has_fixed_point(perms[i])) out.push_back(i);
  return out;
}

}  // namespace serial

namespace parallel {

MedialScan medial_scan(const std::vector<std::uint32_t>& table, std::size_t n, std::size_t max_examples) {
  std::vector<MedialScan> rows(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t w = 0; w < count; ++w)
    scan_row(table, n, static_cast<std::size_t>(w), max_examples, rows[static_cast<std::size_t>(w)]);
  MedialScan out;
  for (auto& r : rows) {
    out.count += r.count;
    for (const auto& q : r.examples) {
      if (out.examples.size() >= max_examples) break;
      out.examples.push_back(q);
    }
  }
  return out;
}

std::vector<std::size_t> fixed_point_displacements(const std::vector<Perm>& perms) {
  std::vector<char> flag(perms.size(), 0);
  const auto count = static_cast<std::int64_t>(perms.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const Perm& p = perms[static_cast<std::size_t>(i)];
    flag[static_cast<std::size_t>(i)] = !is_identity(p) && has_fixed_point(p);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < flag.size(); ++i)
    if (flag[i]) out.push_back(i);
  return out;
}

}  // namespace parallel

}  // namespace medq::kernels
