#include "medq/linkinv.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "medq/error.hpp"
#include "medq/quandle.hpp"

namespace medq {

namespace {

const LaurentPoly kOneMinusT = LaurentPoly(1) - LaurentPoly::t();

// Longitude-meridian multipliers are found by scanning residues.
constexpr std::int64_t kMaxScanExponent = 100000;

std::string factors_string(const std::vector<std::int64_t>& f) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
  out << ']';
  return out.str();
}

std::size_t least_named_arc(const Diagram& d, std::size_t component) {
  const auto& arcs = d.component_arcs(component);
  return *std::min_element(arcs.begin(), arcs.end(),
                           [&](std::size_t a, std::size_t b) { return d.arc_name(a) < d.arc_name(b); });
}

// Column of the crossing relation indexed by arc.
ArcVector crossing_relation(const Diagram& d, const Crossing& c) {
  ArcVector col(d.num_arcs());
  col[c.over] += kOneMinusT;
  col[c.right] += LaurentPoly::t();
  col[c.left] -= LaurentPoly(1);
  return col;
}

ArcVector arc_unit(std::size_t arcs, std::size_t a) {
  ArcVector v(arcs);
  v[a] = LaurentPoly(1);
  return v;
}

}  // namespace

const std::vector<ScalarRing>& default_ring_panel() {
  static const std::vector<ScalarRing> panel{ScalarRing(0, -1), ScalarRing(27, 4), ScalarRing(5, 2),
                                             ScalarRing(9, 2), ScalarRing(16, 3)};
  return panel;
}

LambdaPresentation present_reduced_module(const Diagram& d) {
  LambdaPresentation p;
  p.generators = d.arc_names();
  for (std::size_t c = 0; c < d.num_crossings(); ++c) {
    p.relation_labels.push_back("c" + std::to_string(c + 1));
    p.columns.push_back(crossing_relation(d, d.crossings()[c]));
  }
  return p;
}

KernelPresentation present_kernel(const Diagram& d) {
  KernelPresentation k;
  k.base_arc = least_named_arc(d, 0);
  k.generator_of_arc.resize(d.num_arcs());
  for (std::size_t a = 0; a < d.num_arcs(); ++a) {
    if (a == k.base_arc) continue;
    k.generator_of_arc[a] = k.presentation.generators.size();
    k.presentation.generators.push_back("g_" + d.arc_name(a));
  }
  for (std::size_t c = 0; c < d.num_crossings(); ++c) {
    ArcVector full = crossing_relation(d, d.crossings()[c]);
    std::vector<LaurentPoly> col(k.presentation.generators.size());
    for (std::size_t a = 0; a < d.num_arcs(); ++a)
      if (k.generator_of_arc[a]) col[*k.generator_of_arc[a]] = full[a];
    k.presentation.relation_labels.push_back("c" + std::to_string(c + 1));
    k.presentation.columns.push_back(std::move(col));
  }
  return k;
}

KernelAtRing::KernelAtRing(const Diagram& d, const ScalarRing& r)
    : ring_(r), arcs_(d.num_arcs()), kernel_(present_kernel(d)) {
  presented_ = finite_module_from(specialize_presentation(kernel_.presentation, r));
}

Vec KernelAtRing::image(const ArcVector& v) const {
  if (v.size() != arcs_) throw std::invalid_argument("arc vector has wrong length");
  LaurentPoly sum;
  for (const auto& c : v) sum += c;
  if (!sum.is_zero()) throw std::invalid_argument("arc vector is not in the augmentation kernel");
  const std::size_t deg = ring_.degree();
  IntVector coords(kernel_.presentation.generators.size() * deg);
  for (std::size_t a = 0; a < arcs_; ++a) {
    if (!kernel_.generator_of_arc[a] || v[a].is_zero()) continue;
    RingElem e = lp_specialize(v[a], ring_);
    for (std::size_t k = 0; k < deg; ++k) coords[*kernel_.generator_of_arc[a] * deg + k] = e.value[k];
  }
  return presented_.map(coords);
}

Vec KernelAtRing::arc_difference(std::size_t a, std::size_t b) const {
  ArcVector v(arcs_);
  v[a] += LaurentPoly(1);
  v[b] -= LaurentPoly(1);
  return image(v);
}

IntVector KernelAtRing::generator_coords(const Vec& v) const {
  return presented_.from_module * module().to_integer(v);
}

PhiValue phi_of(const Diagram& d, const ArcVector& v, const ScalarRing& r) {
  PhiValue out{r.zero(), std::vector<Integer>(d.num_components() - 1, 0)};
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a].is_zero()) continue;
    out.first = r.add(out.first, lp_specialize(v[a], r));
    const std::size_t k = d.component_of(a);
    if (k > 0) out.rest[k - 1] += augment(v[a]);
  }
  return out;
}

std::vector<PhiValue> phi_values(const Diagram& d, const ScalarRing& r) {
  std::vector<PhiValue> out;
  for (std::size_t a = 0; a < d.num_arcs(); ++a) out.push_back(phi_of(d, arc_unit(d.num_arcs(), a), r));
  return out;
}

LongitudeSet longitudes(const Diagram& d) {
  const std::size_t mu = d.num_components();
  LongitudeSet out;
  out.chi.assign(mu, ArcVector(d.num_arcs()));
  ArcVector zero(d.num_arcs());
  std::vector<ArcVector> simple(mu, zero);
  for (const auto& c : d.crossings()) {
    const std::size_t i = d.component_of(c.right);
    out.chi[i][c.over] += LaurentPoly(c.writhe);
    simple[i][c.over] += LaurentPoly(c.writhe);
  }
  for (std::size_t a = 0; a < d.num_arcs(); ++a) {
    const int s = d.end_writhe_sum(a);
    if (s % 2 != 0)
      throw HalfIntegral("end writhes of arc '" + d.arc_name(a) + "' sum to " + std::to_string(s));
    out.chi[d.component_of(a)][a] -= LaurentPoly(s / 2);
  }
  if (d.has_alternating_writhes()) {
    if (simple != out.chi) throw std::logic_error("longitude formulas disagree on an alternating diagram");
    out.alternating_checked = true;
  }
  return out;
}

std::vector<std::size_t> meridian_arcs(const Diagram& d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.num_components(); ++i) out.push_back(least_named_arc(d, i));
  return out;
}

EnhancedFingerprint fingerprint(const Diagram& d, const std::vector<ScalarRing>& panel) {
  EnhancedFingerprint fp;
  fp.mu = d.num_components();
  const LongitudeSet chi = longitudes(d);
  const auto refs = meridian_arcs(d);
  const LambdaPresentation reduced = present_reduced_module(d);
  for (const auto& r : panel) {
    RingRecord rec;
    rec.ring = r.label();
    PresentedModule m = finite_module_from(specialize_presentation(reduced, r));
    rec.module_factors = m.module->factors();
    rec.module_free_rank = m.module->free_rank();
    KernelAtRing k(d, r);
    const FiniteModule& n = k.module();
    rec.kernel_factors = n.factors();
    rec.kernel_finite = n.is_finite();
    if (!rec.kernel_finite) {
      fp.rings.push_back(std::move(rec));
      continue;
    }
    rec.exponent = 1;
    for (auto f : n.factors()) rec.exponent = std::lcm(rec.exponent, f);

    std::vector<Vec> x, mer;
    for (std::size_t i = 0; i < fp.mu; ++i) {
      x.push_back(k.image(chi.chi[i]));
      mer.push_back(k.arc_difference(refs[i], refs[0]));
    }
    const Submodule w = Submodule::whole(k.module_ptr()).image(kOneMinusT);
    const Subquotient mod_w = quotient_by(w);
    std::vector<Vec> others(mer.begin() + 1, mer.end());
    const Submodule span = w.sum(Submodule(k.module_ptr(), others));
    for (std::size_t i = 0; i < fp.mu; ++i) {
      ComponentRecord c;
      c.longitude_order = n.order_of(x[i]);
      c.meridian_order = mod_w.module().order_of(mod_w.map(mer[i]));
      c.longitude_in_meridian_span = span.contains(x[i]);
      for (std::size_t j = 0; j < fp.mu; ++j) c.longitude_ratio.push_back(solve_scalar(n, x[j], x[i]));
      for (std::size_t j = 1; j < fp.mu && rec.exponent <= kMaxScanExponent; ++j) {
        std::vector<std::int64_t> residues;
        for (std::int64_t s = 0; s < rec.exponent; ++s) {
          std::vector<Vec> scaled;
          for (const auto& b : w.basis()) scaled.push_back(n.scale(b, s));
          if (Submodule(k.module_ptr(), scaled).contains(n.sub(x[i], n.scale(mer[j], s)))) residues.push_back(s);
        }
        c.longitude_meridian.push_back(std::move(residues));
      }
      rec.components.push_back(std::move(c));
    }
    fp.rings.push_back(std::move(rec));
  }
  return fp;
}

Def1Data link_def1(const Diagram& d, const KernelAtRing& k, const LongitudeSet& chi,
                   const std::vector<std::size_t>& reference_arcs) {
  Def1Data data;
  data.module = k.module_ptr();
  for (std::size_t i = 0; i < d.num_components(); ++i) {
    data.offsets.push_back(k.arc_difference(reference_arcs[i], reference_arcs[0]));
    data.stabilizers.emplace_back(k.module_ptr(), std::vector<Vec>{k.image(chi.chi[i])});
  }
  return data;
}

namespace {

MQReport make_report(const ScalarRing& r, Def1Data data, std::uint64_t cap) {
  MQReport rep;
  rep.ring = r.label();
  auto q = std::make_shared<Def1Quandle>(data, cap);
  rep.data = std::move(data);
  rep.size = q->size();
  rep.orbit_sizes = orbit_sizes(q->quandle());
  rep.dis_factors = displacement_module(rep.data).quotient.module().factors();
  rep.quandle = std::move(q);
  return rep;
}

}  // namespace

MQReport mq_specialized(const Diagram& d, const ScalarRing& r, std::uint64_t cap) {
  KernelAtRing k(d, r);
  if (!k.module().is_finite())
    throw InfiniteUnsupported("K at " + r.label() + " is infinite: factors " + factors_string(k.module().factors()));
  return make_report(r, link_def1(d, k, longitudes(d), meridian_arcs(d)), cap);
}

IMQResult imq(const Diagram& d, std::uint64_t cap) {
  const ScalarRing r(0, -1);
  KernelAtRing k(d, r);
  IMQResult out;
  out.factors = k.module().factors();
  out.free_rank = k.module().free_rank();
  out.finite = k.module().is_finite();
  if (out.finite) out.report = make_report(r, link_def1(d, k, longitudes(d), meridian_arcs(d)), cap);
  return out;
}

Integer determinant(const Diagram& d) { return KernelAtRing(d, ScalarRing(0, -1)).module().order(); }

XiReport xi_verify(const Diagram& d, const ScalarRing& r, const std::vector<std::optional<std::string>>& base_arcs) {
  const ComponentIndexing ix = index_components(d, base_arcs);
  KernelAtRing k(d, r);
  if (!k.module().is_finite()) throw InfiniteUnsupported("K at " + r.label() + " is infinite");
  const FiniteModule& n = k.module();
  const std::size_t mu = d.num_components();
  std::vector<std::size_t> refs;
  for (const auto& c : ix.components) refs.push_back(c.b[0]);
  Def1Quandle q(link_def1(d, k, longitudes(d), refs));
  const FiniteQuandle& fq = q.quandle();

  XiReport rep;
  rep.ring = r.label();
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.failures.size() < 16) rep.failures.push_back(what);
  };

  std::vector<std::uint32_t> xi(d.num_arcs());
  const LaurentPoly t_inv = LaurentPoly::t_inv();
  for (std::size_t i = 0; i < mu; ++i) {
    const auto& c = ix.components[i];
    ArcVector acc(d.num_arcs());
    for (std::size_t j = 0; j < c.b.size(); ++j) {
      ArcVector v = acc;
      if (j % 2 == 1) {
        v[c.b[0]] += LaurentPoly(1);
        for (auto& e : v) e = e * t_inv;
      }
      const Vec value = k.image(v);
      const std::string name = d.arc_name(c.b[j]);
      if (!n.is_zero(n.sub(n.apply(kOneMinusT, value), k.arc_difference(c.b[j], c.b[0]))))
        fail(rep.differences, "(1-t) xi(" + name + ") differs from the class of " + name + " - " + d.arc_name(c.b[0]));
      xi[c.b[j]] = q.element_of(i, value);
      if (j == 0 && xi[c.b[0]] != q.element_of(i, n.zero()))
        fail(rep.base_zero, "xi(" + name + ") is not 0 + X");
      acc[c.a[j]] += LaurentPoly(j % 2 == 0 ? -1 : 1);
    }
  }

  for (std::size_t c = 0; c < d.num_crossings(); ++c) {
    const Crossing& x = d.crossings()[c];
    if (fq.op(xi[x.right], xi[x.over]) != xi[x.left])
      fail(rep.crossings, "crossing #" + std::to_string(c + 1) + " relation fails");
  }

  // Subquandle generated by the xi values, closed under the operation and
  // its right inverse.
  std::vector<char> in(fq.size(), 0);
  std::vector<std::uint32_t> members;
  for (auto e : xi)
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
    }
  std::vector<std::vector<std::uint32_t>> inv(fq.size(), std::vector<std::uint32_t>(fq.size()));
  for (std::uint32_t x = 0; x < fq.size(); ++x)
    for (std::uint32_t y = 0; y < fq.size(); ++y) inv[y][fq.op(x, y)] = x;
  for (std::size_t done = 0; done < members.size(); ++done) {
    const std::uint32_t x = members[done];
    for (std::size_t s = 0; s <= done; ++s) {
      const std::uint32_t y = members[s];
      for (std::uint32_t z : {fq.op(x, y), fq.op(y, x), inv[y][x], inv[x][y]})
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
        }
    }
  }
  if (members.size() != fq.size())
    fail(rep.generates, "xi values generate " + std::to_string(members.size()) + " of " + std::to_string(fq.size()) +
                            " elements");

  const auto orb = orbits(fq);
  bool parts_are_orbits = orb.size() == mu;
  for (std::size_t i = 0; parts_are_orbits && i < mu; ++i)
    parts_are_orbits = orb[i].size() == q.part_size(i) && orb[i].front() == q.part_offset(i);
  if (!parts_are_orbits) fail(rep.orbits, "orbits do not match components");
  for (std::size_t a = 0; a < d.num_arcs(); ++a)
    if (q.part_of(xi[a]) != d.component_of(a)) fail(rep.orbits, "xi(" + d.arc_name(a) + ") in the wrong part");
  return rep;
}

MeridianKernelCheck check_meridian_kernel(const Diagram& d, const ScalarRing& r) {
  if (r.has_poly_modulus()) throw Unsupported("kernel comparison needs a scalar ring Z/m");
  KernelAtRing k(d, r);
  const FiniteModule& n = k.module();
  if (!n.is_finite()) throw InfiniteUnsupported("K at " + r.label() + " is infinite");
  // phi_tau on K sends g_a to e_{kappa(a)} in (R / (1 - u))^{mu - 1}.
  Integer q = gcd(r.modulus(), Integer(1) - Integer(r.t_image().value[0]));
  const auto& gens = k.kernel_presentation().generator_of_arc;
  auto psi_zero = [&](const Vec& v) {
    IntVector g = k.generator_coords(v);
    std::vector<Integer> out(d.num_components(), 0);
    for (std::size_t a = 0; a < d.num_arcs(); ++a)
      if (gens[a]) out[d.component_of(a)] += g[*gens[a]];
    for (std::size_t i = 1; i < out.size(); ++i)
      if ((q == 0 && out[i] != 0) || (q != 0 && mod_floor(out[i], q) != 0)) return false;
    return true;
  };
  MeridianKernelCheck out;
  out.kernel_order = 0;
  for (std::uint64_t c = 0; c < n.size(); ++c)
    if (psi_zero(n.decode(c))) out.kernel_order += 1;
  const Submodule image = Submodule::whole(k.module_ptr()).image(kOneMinusT);
  out.image_order = image.order();
  bool inside = true;
  for (const auto& b : image.basis()) inside = inside && psi_zero(b);
  out.holds = inside && out.kernel_order == out.image_order;
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::equal:
      return "equal";
    case Verdict::differ:
      return "differ";
    default:
      return "skipped";
  }
}

const LayerVerdict& CompareResult::layer(const std::string& name) const {
  for (const auto& l : layers)
    if (l.layer == name) return l;
  throw std::out_of_range("no comparison layer " + name);
}

namespace {

std::vector<std::int64_t> negated(const std::vector<std::int64_t>& s, std::int64_t e) {
  std::vector<std::int64_t> out;
  for (auto c : s) out.push_back(mod_i64(-c, e));
  std::sort(out.begin(), out.end());
  return out;
}

// Records differ only in longitude-meridian multipliers, and those only by sign.
bool sign_only(const RingRecord& a, const RingRecord& b) {
  if (!a.same_modules(b) || a.components.size() != b.components.size()) return false;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    ComponentRecord x = a.components[i], y = b.components[i];
    for (std::size_t j = 0; j < x.longitude_meridian.size(); ++j)
      if (x.longitude_meridian[j] != y.longitude_meridian[j] &&
          negated(x.longitude_meridian[j], a.exponent) != y.longitude_meridian[j])
        return false;
    x.longitude_meridian.clear();
    y.longitude_meridian.clear();
    if (!(x == y)) return false;
  }
  return true;
}

std::string first_difference(const RingRecord& a, const RingRecord& b) {
  if (a.module_factors != b.module_factors)
    return a.ring + ": M factors " + factors_string(a.module_factors) + " vs " + factors_string(b.module_factors);
  if (a.kernel_factors != b.kernel_factors)
    return a.ring + ": K factors " + factors_string(a.kernel_factors) + " vs " + factors_string(b.kernel_factors);
  for (std::size_t i = 0; i < std::min(a.components.size(), b.components.size()); ++i) {
    const auto& x = a.components[i];
    const auto& y = b.components[i];
    const std::string at = a.ring + ", K" + std::to_string(i + 1) + ": ";
    if (x.longitude_order != y.longitude_order) return at + "longitude order";
    if (x.meridian_order != y.meridian_order) return at + "meridian order";
    if (x.longitude_in_meridian_span != y.longitude_in_meridian_span) return at + "longitude in meridian span";
    if (x.longitude_ratio != y.longitude_ratio) return at + "longitude ratios";
    for (std::size_t j = 0; j < x.longitude_meridian.size(); ++j)
      if (x.longitude_meridian[j] != y.longitude_meridian[j])
        return at + "longitude = c * meridian difference " + std::to_string(j + 2) + ": " +
               factors_string(x.longitude_meridian[j]) + " vs " + factors_string(y.longitude_meridian[j]) + " mod " +
               std::to_string(a.exponent);
  }
  return a.ring + ": records differ";
}

LayerVerdict compare_quandles(const std::string& name, const FiniteQuandle& a, const FiniteQuandle& b) {
  if (a.size() > kDefaultIsoCap || b.size() > kDefaultIsoCap) {
    if (a.size() != b.size())
      return {name, Verdict::differ, "sizes " + std::to_string(a.size()) + " vs " + std::to_string(b.size())};
    return {name, Verdict::skipped, "size " + std::to_string(a.size()) + " above search bound"};
  }
  IsoResult iso = iso_search(a, b);
  if (iso) return {name, Verdict::equal, "isomorphism on " + std::to_string(a.size()) + " elements"};
  return {name, Verdict::differ, iso.mismatch};
}

}  // namespace

CompareResult compare_links(const Diagram& a, const Diagram& b, const std::vector<ScalarRing>& panel,
                            std::uint64_t cap) {
  CompareResult out;
  const EnhancedFingerprint fa = fingerprint(a, panel), fb = fingerprint(b, panel);

  LayerVerdict module{"module", Verdict::equal, "invariant factors agree on " + std::to_string(panel.size()) + " rings"};
  LayerVerdict enhanced{"enhanced", Verdict::equal, "all records agree"};
  if (fa.mu != fb.mu) {
    module = {"module", Verdict::differ, "component counts " + std::to_string(fa.mu) + " vs " + std::to_string(fb.mu)};
    enhanced = {"enhanced", Verdict::differ, module.witness};
  } else {
    bool signs = true;
    for (std::size_t r = 0; r < fa.rings.size(); ++r) {
      const auto& x = fa.rings[r];
      const auto& y = fb.rings[r];
      if (!x.same_modules(y) && module.verdict == Verdict::equal)
        module = {"module", Verdict::differ, first_difference(x, y)};
      if (!(x == y)) {
        if (enhanced.verdict == Verdict::equal) enhanced = {"enhanced", Verdict::differ, first_difference(x, y)};
        signs = signs && sign_only(x, y);
      }
    }
    out.longitude_sign = enhanced.verdict == Verdict::differ && module.verdict == Verdict::equal && signs;
    if (out.longitude_sign) enhanced.witness += " (longitude sign)";
  }
  out.layers.push_back(module);
  out.layers.push_back(enhanced);

  IMQResult ia = imq(a, cap), ib = imq(b, cap);
  if (ia.finite && ib.finite) {
    out.layers.push_back(compare_quandles("IMQ", ia.report->quandle->quandle(), ib.report->quandle->quandle()));
  } else if (ia.finite != ib.finite) {
    out.layers.push_back({"IMQ", Verdict::differ, "finite vs infinite"});
  } else {
    out.layers.push_back({"IMQ", Verdict::skipped, "both infinite"});
  }

  for (const auto& r : panel) {
    const std::string name = "MQ " + r.label();
    try {
      MQReport ma = mq_specialized(a, r, cap), mb = mq_specialized(b, r, cap);
      out.layers.push_back(compare_quandles(name, ma.quandle->quandle(), mb.quandle->quandle()));
    } catch (const InfiniteUnsupported& e) {
      out.layers.push_back({name, Verdict::skipped, e.what()});
    }
  }
  return out;
}

}  // namespace medq
