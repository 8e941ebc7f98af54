#include "medq/report.hpp"

#include <sstream>

#include "medq/error.hpp"

namespace medq {

namespace {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

bool is_quandle_layer(const std::string& layer) { return layer == "IMQ" || layer.rfind("MQ ", 0) == 0; }

std::string verdict_word(const LayerVerdict& l) {
  if (!is_quandle_layer(l.layer)) return verdict_name(l.verdict);
  switch (l.verdict) {
    case Verdict::equal:
      return "isomorphic";
    case Verdict::differ:
      return "not isomorphic";
    default:
      return "skipped";
  }
}

}  // namespace

Json fingerprint_json(const EnhancedFingerprint& fp) {
  Json rings = Json::array();
  for (const auto& r : fp.rings) {
    Json comps = Json::array();
    for (const auto& c : r.components) {
      Json ratios = Json::array();
      for (const auto& s : c.longitude_ratio) ratios.push_back(s.to_string());
      comps.push_back({{"longitude_order", c.longitude_order},
                       {"meridian_order", c.meridian_order},
                       {"longitude_in_meridian_span", c.longitude_in_meridian_span},
                       {"longitude_ratio", ratios},
                       {"longitude_meridian", c.longitude_meridian}});
    }
    rings.push_back({{"ring", r.ring},
                     {"module_factors", r.module_factors},
                     {"module_free_rank", r.module_free_rank},
                     {"kernel_factors", r.kernel_factors},
                     {"kernel_finite", r.kernel_finite},
                     {"exponent", r.exponent},
                     {"components", comps}});
  }
  return {{"components", fp.mu}, {"rings", rings}};
}

Json longitudes_json(const Diagram& d, const LongitudeSet& chi) {
  Json out = Json::array();
  for (const auto& v : chi.chi) {
    Json terms = Json::object();
    for (std::size_t a = 0; a < v.size(); ++a)
      if (!v[a].is_zero()) terms[d.arc_name(a)] = v[a].to_string();
    out.push_back(terms);
  }
  return out;
}

Json invariants_json(const Diagram& d, const std::vector<ScalarRing>& panel) {
  Json out;
  out["components"] = d.num_components();
  out["arcs"] = d.num_arcs();
  out["crossings"] = d.num_crossings();
  out["determinant"] = integer_json(determinant(d));
  out["longitudes"] = longitudes_json(d, longitudes(d));
  out["fingerprint"] = fingerprint_json(fingerprint(d, panel));
  return out;
}

Json quandle_json(const MQReport& r) {
  const FiniteQuandle& q = r.quandle->quandle();
  Json table = Json::array();
  for (std::uint32_t x = 0; x < q.size(); ++x) {
    Json row = Json::array();
    for (std::uint32_t y = 0; y < q.size(); ++y) row.push_back(q.op(x, y));
    table.push_back(row);
  }
  Json orbits_out = Json::array();
  for (const auto& o : orbits(q)) orbits_out.push_back(o);
  return {{"ring", r.ring},
          {"finite", true},
          {"size", r.size},
          {"orbit_sizes", r.orbit_sizes},
          {"orbits", orbits_out},
          {"dis_factors", r.dis_factors},
          {"module_factors", r.data.module->factors()},
          {"elements", q.labels()},
          {"table", table}};
}

Json infinite_json(const std::string& ring, const std::string& reason) {
  return {{"ring", ring}, {"finite", false}, {"reason", reason}};
}

Json imq_json(const IMQResult& r) {
  if (!r.finite) {
    Json out = infinite_json("0:-1", "K / (1 + t) K is infinite");
    out["factors"] = r.factors;
    out["free_rank"] = r.free_rank;
    return out;
  }
  Json out = quandle_json(*r.report);
  out["factors"] = r.factors;
  return out;
}

Json compare_json(const CompareResult& c) {
  Json layers = Json::array();
  for (const auto& l : c.layers)
    layers.push_back({{"layer", l.layer}, {"verdict", verdict_name(l.verdict)}, {"witness", l.witness}});
  return {{"layers", layers}, {"longitude_sign", c.longitude_sign}};
}

std::string invariants_text(const Diagram& d, const std::vector<ScalarRing>& panel) {
  std::ostringstream out;
  out << "components: " << d.num_components() << "\n";
  out << "arcs: " << d.num_arcs() << ", crossings: " << d.num_crossings() << "\n";
  out << "det = " << determinant(d).get_str() << "\n";
  LongitudeSet chi = longitudes(d);
  for (std::size_t i = 0; i < chi.chi.size(); ++i) {
    out << "chi_" << i + 1 << " =";
    bool any = false;
    for (std::size_t a = 0; a < chi.chi[i].size(); ++a)
      if (!chi.chi[i][a].is_zero()) {
        out << (any ? " +" : "") << " (" << chi.chi[i][a].to_string() << ") " << d.arc_name(a);
        any = true;
      }
    out << (any ? "" : " 0") << "\n";
  }
  EnhancedFingerprint fp = fingerprint(d, panel);
  for (const auto& r : fp.rings) {
    out << "ring " << r.ring << ": module " << join(r.module_factors) << ", kernel " << join(r.kernel_factors);
    if (r.kernel_finite) out << ", exponent " << r.exponent;
    out << "\n";
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      const auto& c = r.components[i];
      out << "  K" << i + 1 << ": longitude order " << c.longitude_order << ", meridian order " << c.meridian_order
          << (c.longitude_in_meridian_span ? ", longitude in meridian span" : "");
      for (std::size_t j = 0; j < c.longitude_meridian.size(); ++j)
        out << ", longitude/meridian " << j + 2 << ": " << join(c.longitude_meridian[j]);
      out << "\n";
    }
  }
  return out.str();
}

std::string compare_text(const CompareResult& c) {
  std::ostringstream out;
  for (const auto& l : c.layers) {
    out << l.layer << ": " << verdict_word(l);
    if (l.layer == "enhanced" && c.longitude_sign) out << " (longitude sign)";
    out << "\n    " << l.witness << "\n";
  }
  return out.str();
}

std::vector<ScalarRing> parse_ring_list(const std::string& text) {
  std::vector<ScalarRing> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(ScalarRing::parse(item));
  if (out.empty()) throw ParseError("empty ring list");
  return out;
}

}  // namespace medq
