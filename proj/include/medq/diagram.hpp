#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace medq {

// Crossing given by arc names; right is b1 and left is b2 relative to the
// overpassing arc.
struct NamedCrossing {
  std::string over;
  std::string right;
  std::string left;
  int writhe = 1;
};

// Crossing by arc index.
struct Crossing {
  std::size_t over = 0;
  std::size_t right = 0;
  std::size_t left = 0;
  int writhe = 1;

  // The underpassing arc entering the crossing. At a positive crossing the
  // under strand runs from the right arc to the left arc, at a negative one
  // from left to right.
  std::size_t incoming() const { return writhe > 0 ? right : left; }
  std::size_t outgoing() const { return writhe > 0 ? left : right; }
};

// Oriented virtual link diagram: arcs listed per component in traversal
// order, classical crossings only. Construction validates.
class Diagram {
 public:
  Diagram(std::vector<std::vector<std::string>> components, const std::vector<NamedCrossing>& crossings);

  std::size_t num_components() const { return components_.size(); }
  std::size_t num_arcs() const { return names_.size(); }
  std::size_t num_crossings() const { return crossings_.size(); }

  const std::string& arc_name(std::size_t arc) const { return names_[arc]; }
  std::size_t arc_index(const std::string& name) const;
  bool has_arc(const std::string& name) const { return index_.count(name) != 0; }
  const std::vector<std::string>& arc_names() const { return names_; }

  const std::vector<std::size_t>& component_arcs(std::size_t i) const { return components_[i]; }
  std::size_t component_of(std::size_t arc) const { return component_of_[arc]; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::vector<NamedCrossing> named_crossings() const;
  std::vector<std::vector<std::string>> named_components() const;

  // Crossing where the arc ends (enters as underpass) / starts; none for a
  // component that never underpasses.
  std::optional<std::size_t> end_crossing(std::size_t arc) const { return end_[arc]; }
  std::optional<std::size_t> start_crossing(std::size_t arc) const { return start_[arc]; }
  // Writhe sum of the two end crossings, 0 if the arc has no ends.
  int end_writhe_sum(std::size_t arc) const;
  bool has_alternating_writhes() const;
  bool operator==(const Diagram& o) const {
    return names_ == o.names_ && components_ == o.components_ && named_crossings() == o.named_crossings();
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> component_of_;
  std::vector<Crossing> crossings_;
  std::vector<std::optional<std::size_t>> end_;
  std::vector<std::optional<std::size_t>> start_;
};

inline bool operator==(const NamedCrossing& a, const NamedCrossing& b) {
  return a.over == b.over && a.right == b.right && a.left == b.left && a.writhe == b.writhe;
}

struct AlternatingResult {
  Diagram diagram;
  std::vector<std::string> moves;
};

// Inserts Reidemeister I kinks until every arc underpasses once at a positive
// and once at a negative crossing.
AlternatingResult make_alternating_writhes(const Diagram& d);

// Arcs b_ij, crossings c_ij and overpasses a_ij of one component, j = 0..2n-1.
struct ComponentIndex {
  std::vector<std::size_t> b;
  std::vector<std::size_t> c;
  std::vector<std::size_t> a;
};

struct ComponentIndexing {
  std::vector<ComponentIndex> components;
};

// base_arcs[i], when given, names the arc used as b_i0.
ComponentIndexing index_components(const Diagram& d,
                                   const std::vector<std::optional<std::string>>& base_arcs = {});

// JSON diagram format (see README).
Diagram parse_diagram(std::string_view text);
std::string diagram_to_json(const Diagram& d, int indent = 2);

// Planar diagram code "PD[X[i,j,k,l],...]", classical links only.
Diagram import_pd(std::string_view text);

// Dispatches on content: PD code or JSON.
Diagram read_diagram(std::string_view text);

}  // namespace medq
