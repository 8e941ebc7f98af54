#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "medq/linkinv.hpp"

namespace medq {

// JSON renderings used by the command-line tool. Key order is fixed, so equal
// inputs give byte-identical output.
using Json = nlohmann::ordered_json;

Json fingerprint_json(const EnhancedFingerprint& fp);
Json longitudes_json(const Diagram& d, const LongitudeSet& chi);
Json invariants_json(const Diagram& d, const std::vector<ScalarRing>& panel);
Json quandle_json(const MQReport& r);
Json infinite_json(const std::string& ring, const std::string& reason);
Json imq_json(const IMQResult& r);
Json compare_json(const CompareResult& c);

// Plain-text renderings.
std::string invariants_text(const Diagram& d, const std::vector<ScalarRing>& panel);
std::string compare_text(const CompareResult& c);

std::vector<ScalarRing> parse_ring_list(const std::string& text);

}  // namespace medq
