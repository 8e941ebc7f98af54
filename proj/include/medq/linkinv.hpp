#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "medq/def1.hpp"
#include "medq/diagram.hpp"
#include "medq/laurent.hpp"
#include "medq/module.hpp"

namespace medq {

// (0,-1), (27,4), (5,2), (9,2), (16,3).
const std::vector<ScalarRing>& default_ring_panel();

// One generator per arc, one column (1 - t) a + t b1 - b2 per crossing.
LambdaPresentation present_reduced_module(const Diagram& d);

// Kernel of the augmentation, generated by g_a = a - a* where a* is the
// least-named arc of the first component; relations are the crossing
// relations with g_{a*} = 0.
struct KernelPresentation {
  LambdaPresentation presentation;
  std::size_t base_arc = 0;
  // Generator index of each arc, none for the base arc.
  std::vector<std::optional<std::size_t>> generator_of_arc;
};
KernelPresentation present_kernel(const Diagram& d);

// Lambda-combination of arcs, indexed by arc.
using ArcVector = std::vector<LaurentPoly>;

// K (x) R with the embedding of coefficient-sum-zero arc vectors.
class KernelAtRing {
 public:
  KernelAtRing(const Diagram& d, const ScalarRing& r);
  const ScalarRing& ring() const { return ring_; }
  const PresentedModule& presented() const { return presented_; }
  const FiniteModule& module() const { return *presented_.module; }
  const ModulePtr& module_ptr() const { return presented_.module; }
  std::size_t base_arc() const { return kernel_.base_arc; }
  // Throws std::invalid_argument if the coefficients do not sum to zero.
  Vec image(const ArcVector& v) const;
  // Class of a - b.
  Vec arc_difference(std::size_t a, std::size_t b) const;
  // Generator coordinates (block per generator) of a module element.
  IntVector generator_coords(const Vec& v) const;
  const KernelPresentation& kernel_presentation() const { return kernel_; }

 private:
  ScalarRing ring_;
  std::size_t arcs_;
  KernelPresentation kernel_;
  PresentedModule presented_;
};

// phi_tau of an arc vector: the specialized augmentation, and one integer
// per component 2..mu counting (augmented) coefficients of its arcs.
struct PhiValue {
  RingElem first;
  std::vector<Integer> rest;
  bool operator==(const PhiValue& o) const = default;
};
PhiValue phi_of(const Diagram& d, const ArcVector& v, const ScalarRing& r);
std::vector<PhiValue> phi_values(const Diagram& d, const ScalarRing& r);

struct LongitudeSet {
  std::vector<ArcVector> chi;
  // True when the diagram has alternating writhes and the short formula
  // agreed with the general one.
  bool alternating_checked = false;
};
// Throws HalfIntegral if an end-writhe half sum is not an integer.
LongitudeSet longitudes(const Diagram& d);

// Meridian reference arc of each component (least name); n_i is the class of
// its difference with the first component's.
std::vector<std::size_t> meridian_arcs(const Diagram& d);

struct ComponentRecord {
  std::int64_t longitude_order = 0;
  // Order of n_i modulo (1 - t) K; meridian differences are defined up to it.
  std::int64_t meridian_order = 0;
  // chi_i lies in N' = (1 - t) K + <n_2, ..., n_mu>.
  bool longitude_in_meridian_span = false;
  // c with chi_i = c chi_j, for each j.
  std::vector<ScalarSolution> longitude_ratio;
  // For j = 2..mu: residues c modulo the exponent of K with
  // chi_i in c (n_j + (1 - t) K). Detects the sign of a longitude. Left
  // empty when the exponent of K is above 10^5.
  std::vector<std::vector<std::int64_t>> longitude_meridian;
  bool operator==(const ComponentRecord& o) const = default;
};

struct RingRecord {
  std::string ring;
  std::vector<std::int64_t> module_factors;
  std::size_t module_free_rank = 0;
  std::vector<std::int64_t> kernel_factors;
  bool kernel_finite = false;
  std::int64_t exponent = 0;
  // Empty when K (x) R is infinite.
  std::vector<ComponentRecord> components;
  bool operator==(const RingRecord& o) const = default;
  bool same_modules(const RingRecord& o) const {
    return ring == o.ring && module_factors == o.module_factors && kernel_factors == o.kernel_factors;
  }
};

struct EnhancedFingerprint {
  std::size_t mu = 0;
  std::vector<RingRecord> rings;
  bool operator==(const EnhancedFingerprint& o) const = default;
};
EnhancedFingerprint fingerprint(const Diagram& d, const std::vector<ScalarRing>& panel = default_ring_panel());

// Def1 data (K (x) R, n_i, <chi_i>) with the given reference arcs.
Def1Data link_def1(const Diagram& d, const KernelAtRing& k, const LongitudeSet& chi,
                   const std::vector<std::size_t>& reference_arcs);

struct MQReport {
  std::string ring;
  Def1Data data;
  std::shared_ptr<const Def1Quandle> quandle;
  std::size_t size = 0;
  std::vector<std::size_t> orbit_sizes;
  std::vector<std::int64_t> dis_factors;
};
// Throws InfiniteUnsupported when K (x) R is infinite, SizeCap above cap.
MQReport mq_specialized(const Diagram& d, const ScalarRing& r, std::uint64_t cap = kDefaultQuandleCap);

// IMQ through K / (1 + t) K, i.e. K at t = -1.
struct IMQResult {
  bool finite = false;
  std::vector<std::int64_t> factors;
  std::size_t free_rank = 0;
  std::optional<MQReport> report;
};
IMQResult imq(const Diagram& d, std::uint64_t cap = kDefaultQuandleCap);

// |K / (1 + t) K|, 0 when infinite.
Integer determinant(const Diagram& d);

struct XiReport {
  std::string ring;
  bool base_zero = true;
  bool differences = true;
  bool crossings = true;
  bool generates = true;
  bool orbits = true;
  std::vector<std::string> failures;
  bool ok() const { return base_zero && differences && crossings && generates && orbits; }
};
// Requires alternating writhes (NotAlternating otherwise) and finite K (x) R.
XiReport xi_verify(const Diagram& d, const ScalarRing& r,
                   const std::vector<std::optional<std::string>>& base_arcs = {});

// Kernel of phi_tau on K (x) R against (1 - u)(K (x) R); scalar rings only.
struct MeridianKernelCheck {
  bool holds = false;
  Integer kernel_order;
  Integer image_order;
};
MeridianKernelCheck check_meridian_kernel(const Diagram& d, const ScalarRing& r);

enum class Verdict { equal, differ, skipped };
std::string verdict_name(Verdict v);

struct LayerVerdict {
  std::string layer;
  Verdict verdict = Verdict::skipped;
  std::string witness;
};
struct CompareResult {
  std::vector<LayerVerdict> layers;
  // Enhanced records differ only by negated longitude-meridian multipliers.
  bool longitude_sign = false;
  const LayerVerdict& layer(const std::string& name) const;
};
CompareResult compare_links(const Diagram& a, const Diagram& b,
                            const std::vector<ScalarRing>& panel = default_ring_panel(),
                            std::uint64_t cap = kDefaultQuandleCap);

}  // namespace medq
