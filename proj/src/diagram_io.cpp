#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "medq/diagram.hpp"
#include "medq/error.hpp"

namespace medq {

using nlohmann::json;

Diagram parse_diagram(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("diagram JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("diagram JSON must be an object");
  auto require = [](const json& obj, const char* key) -> const json& {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("diagram JSON: missing field '") + key + "'");
    return *it;
  };
  auto as_string = [](const json& v, const std::string& what) {
    if (!v.is_string()) throw ParseError("diagram JSON: " + what + " must be a string");
    return v.get<std::string>();
  };

  const json& comps = require(doc, "components");
  if (!comps.is_array()) throw ParseError("diagram JSON: 'components' must be an array");
  std::vector<std::vector<std::string>> components;
  for (const auto& comp : comps) {
    if (!comp.is_array()) throw ParseError("diagram JSON: each component must be an array of arc names");
    std::vector<std::string> arcs;
    for (const auto& a : comp) arcs.push_back(as_string(a, "arc name"));
    components.push_back(std::move(arcs));
  }

  std::vector<NamedCrossing> crossings;
  auto it = doc.find("crossings");
  if (it != doc.end()) {
    if (!it->is_array()) throw ParseError("diagram JSON: 'crossings' must be an array");
    for (const auto& c : *it) {
      if (!c.is_object()) throw ParseError("diagram JSON: each crossing must be an object");
      NamedCrossing x;
      x.over = as_string(require(c, "over"), "'over'");
      x.right = as_string(require(c, "right"), "'right'");
      x.left = as_string(require(c, "left"), "'left'");
      const json& w = require(c, "writhe");
      if (!w.is_number_integer()) throw ParseError("diagram JSON: 'writhe' must be an integer");
      x.writhe = w.get<int>();
      crossings.push_back(std::move(x));
    }
  }
  return Diagram(std::move(components), crossings);
}

std::string diagram_to_json(const Diagram& d, int indent) {
  nlohmann::ordered_json doc;
  doc["components"] = d.named_components();
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto& x : d.named_crossings())
    cs.push_back({{"over", x.over}, {"right", x.right}, {"left", x.left}, {"writhe", x.writhe}});
  doc["crossings"] = cs;
  return doc.dump(indent);
}

namespace {

struct PdCrossing {
  long label[4];
};

std::vector<PdCrossing> parse_pd_tuples(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.rfind("PD[", 0) != 0 || s.back() != ']') throw ParseError("PD code must have the form PD[X[...],...]");
  std::string body = s.substr(3, s.size() - 4);
  std::vector<PdCrossing> out;
  std::size_t p = 0;
  while (p < body.size()) {
    std::size_t open = body.find('[', p);
    if (open == std::string::npos) throw ParseError("PD code: expected a crossing tuple");
    std::string head = body.substr(p, open - p);
    if (head == "V" || head == "Virtual" || head == "XV")
      throw Unsupported("PD code contains a virtual crossing marker '" + head + "'");
    if (head != "X") throw ParseError("PD code: unknown tuple head '" + head + "'");
    std::size_t close = body.find(']', open);
    if (close == std::string::npos) throw ParseError("PD code: unterminated tuple");
    std::string inner = body.substr(open + 1, close - open - 1);
    std::vector<long> labels;
    std::size_t q = 0;
    while (q <= inner.size()) {
      std::size_t comma = inner.find(',', q);
      if (comma == std::string::npos) comma = inner.size();
      std::string tok = inner.substr(q, comma - q);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
          tok.size() > 9)
        throw ParseError("PD code: bad label '" + tok + "'");
      labels.push_back(std::stol(tok));
      q = comma + 1;
    }
    if (labels.size() != 4)
      throw ParseError("PD code: crossing tuple has " + std::to_string(labels.size()) + " labels; expected 4");
    out.push_back({{labels[0], labels[1], labels[2], labels[3]}});
    p = close + 1;
    if (p < body.size()) {
      if (body[p] != ',') throw ParseError("PD code: expected ',' between tuples");
      ++p;
      if (p == body.size()) throw ParseError("PD code: trailing ','");
    }
  }
  if (out.empty()) throw ParseError("PD code has no crossings");
  return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Diagram import_pd(std::string_view text) {
  std::vector<PdCrossing> xs = parse_pd_tuples(text);
  const std::size_t n = xs.size();

  // Occurrences of each label: (crossing, position).
  std::map<long, std::vector<std::pair<std::size_t, int>>> occ;
  for (std::size_t c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) occ[xs[c].label[k]].push_back({c, k});
  for (const auto& [label, v] : occ)
    if (v.size() != 2)
      throw ParseError("PD code: label " + std::to_string(label) + " occurs " + std::to_string(v.size()) +
                       " times; each edge label must occur exactly twice");

  // role[c][k]: +1 edge enters crossing c at position k, -1 leaves, 0 unknown.
  std::vector<std::array<int, 4>> role(n, {0, 0, 0, 0});
  std::vector<std::pair<std::size_t, int>> queue;
  auto set_role = [&](std::size_t c, int k, int r) {
    if (role[c][k] == r) return;
    if (role[c][k] != 0) throw AmbiguousOrientation("PD code: inconsistent orientation at crossing " + std::to_string(c + 1));
    role[c][k] = r;
    queue.push_back({c, k});
  };
  auto propagate = [&]() {
    while (!queue.empty()) {
      auto [c, k] = queue.back();
      queue.pop_back();
      int r = role[c][k];
      // The other end of the same edge has the opposite role.
      for (auto [c2, k2] : occ[xs[c].label[k]])
        if (c2 != c || k2 != k) set_role(c2, k2, -r);
      // Over strand positions 1 and 3 have opposite roles; so do 0 and 2.
      set_role(c, (k + 2) % 4, -r);
    }
  };
  for (std::size_t c = 0; c < n; ++c) {
    set_role(c, 0, 1);
    set_role(c, 2, -1);
  }
  propagate();
  // Fallback: labels increase along each component.
  for (std::size_t c = 0; c < n; ++c) {
    if (role[c][1] != 0) continue;
    long j = xs[c].label[1], l = xs[c].label[3];
    if (j == l) throw AmbiguousOrientation("PD code: cannot orient the over strand at crossing " + std::to_string(c + 1));
    bool j_in = (std::abs(j - l) == 1) ? (j < l) : (j > l);
    set_role(c, 1, j_in ? 1 : -1);
    propagate();
  }

  // Arcs: edges joined through overpasses.
  std::vector<long> labels;
  for (const auto& [label, v] : occ) labels.push_back(label);
  std::map<long, std::size_t> edge_index;
  for (std::size_t e = 0; e < labels.size(); ++e) edge_index[labels[e]] = e;
  std::vector<std::size_t> parent(labels.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& x : xs) {
    std::size_t a = find_root(parent, edge_index[x.label[1]]);
    std::size_t b = find_root(parent, edge_index[x.label[3]]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  // Edge successor along the orientation.
  std::vector<std::size_t> next_edge(labels.size());
  for (std::size_t c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k)
      if (role[c][k] == 1) next_edge[edge_index[xs[c].label[k]]] = edge_index[xs[c].label[(k + 2) % 4]];

  std::vector<char> seen(labels.size(), 0);
  std::vector<std::vector<std::string>> components;
  std::map<std::size_t, std::string> arc_name;
  auto name_of = [&](std::size_t e) {
    std::size_t root = find_root(parent, e);
    auto it = arc_name.find(root);
    if (it != arc_name.end()) return it->second;
    std::string name = "a" + std::to_string(labels[root]);
    arc_name[root] = name;
    return name;
  };
  for (std::size_t start = 0; start < labels.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::string> comp;
    std::size_t e = start;
    while (!seen[e]) {
      seen[e] = 1;
      std::string name = name_of(e);
      if (std::find(comp.begin(), comp.end(), name) == comp.end()) comp.push_back(name);
      e = next_edge[e];
    }
    if (e != start) throw AmbiguousOrientation("PD code: edges do not form closed components");
    components.push_back(std::move(comp));
  }

  std::vector<NamedCrossing> crossings;
  for (std::size_t c = 0; c < n; ++c) {
    const auto& x = xs[c];
    bool positive = role[c][3] == 1;  // over strand runs from position 3 to 1
    std::string over = name_of(edge_index[x.label[1]]);
    std::string in = name_of(edge_index[x.label[0]]);
    std::string out = name_of(edge_index[x.label[2]]);
    crossings.push_back(positive ? NamedCrossing{over, in, out, 1} : NamedCrossing{over, out, in, -1});
  }
  return Diagram(std::move(components), crossings);
}

Diagram read_diagram(std::string_view text) {
  std::size_t p = 0;
  while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  if (text.substr(p, 2) == "PD") return import_pd(text.substr(p));
  return parse_diagram(text);
}

}  // namespace medq
