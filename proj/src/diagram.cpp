#include "medq/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "medq/error.hpp"

namespace medq {

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string component_label(std::size_t i) { return "K" + std::to_string(i + 1); }

}  // namespace

Diagram::Diagram(std::vector<std::vector<std::string>> components,
                 const std::vector<NamedCrossing>& crossings) {
  if (components.empty()) throw ValidationError("diagram has no components");
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].empty()) throw ValidationError("component " + component_label(i) + " has no arcs");
    std::vector<std::size_t> arcs;
    for (const auto& name : components[i]) {
      if (name.empty()) throw ValidationError("arc names must be nonempty");
      if (index_.count(name))
        throw ValidationError("arc " + quoted(name) + " appears more than once; every arc must belong to exactly one component");
      index_[name] = names_.size();
      arcs.push_back(names_.size());
      names_.push_back(name);
      component_of_.push_back(i);
    }
    components_.push_back(std::move(arcs));
  }

  auto lookup = [&](const std::string& name, std::size_t c) {
    auto it = index_.find(name);
    if (it == index_.end())
      throw ValidationError("crossing #" + std::to_string(c + 1) + " references unknown arc " + quoted(name));
    return it->second;
  };
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const auto& nc = crossings[c];
    if (nc.writhe != 1 && nc.writhe != -1)
      throw ValidationError("crossing #" + std::to_string(c + 1) + " has writhe " + std::to_string(nc.writhe) +
                            "; writhe must be +1 or -1");
    Crossing x{lookup(nc.over, c), lookup(nc.right, c), lookup(nc.left, c), nc.writhe};
    if (component_of_[x.right] != component_of_[x.left])
      throw ValidationError("crossing #" + std::to_string(c + 1) + " joins underpassing arcs " + quoted(nc.right) +
                            " and " + quoted(nc.left) + " of different components");
    crossings_.push_back(x);
  }

  // Underpass slot counts.
  std::vector<int> slots(names_.size(), 0);
  for (const auto& x : crossings_) {
    ++slots[x.right];
    ++slots[x.left];
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    int total = 0;
    for (auto a : components_[i]) total += slots[a];
    if (total == 0) {
      if (components_[i].size() != 1)
        throw ValidationError("component " + component_label(i) + " never underpasses but has " +
                              std::to_string(components_[i].size()) + " arcs; such a component must be a single arc");
      continue;
    }
    for (auto a : components_[i])
      if (slots[a] != 2)
        throw ValidationError("arc " + quoted(names_[a]) + " occupies " + std::to_string(slots[a]) +
                              " underpass slots; each arc must end at exactly two underpasses");
  }

  // Direction: one incoming and one outgoing end per arc.
  end_.assign(names_.size(), std::nullopt);
  start_.assign(names_.size(), std::nullopt);
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& x = crossings_[c];
    if (end_[x.incoming()])
      throw ValidationError("arc " + quoted(names_[x.incoming()]) +
                            " enters two crossings as underpass; the writhes and right/left slots disagree with an orientation");
    end_[x.incoming()] = c;
    if (start_[x.outgoing()])
      throw ValidationError("arc " + quoted(names_[x.outgoing()]) +
                            " leaves two crossings as underpass; the writhes and right/left slots disagree with an orientation");
    start_[x.outgoing()] = c;
  }

  // Traversal order: the arc leaving b's end crossing follows b.
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& arcs = components_[i];
    for (std::size_t p = 0; p < arcs.size(); ++p) {
      std::size_t b = arcs[p];
      if (!end_[b]) continue;
      std::size_t next = crossings_[*end_[b]].outgoing();
      std::size_t expected = arcs[(p + 1) % arcs.size()];
      if (next != expected)
        throw ValidationError("component " + component_label(i) + " lists " + quoted(names_[expected]) + " after " +
                              quoted(names_[b]) + ", but the crossing ending " + quoted(names_[b]) + " continues into " +
                              quoted(names_[next]));
    }
  }
}

std::size_t Diagram::arc_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ValidationError("unknown arc " + quoted(name));
  return it->second;
}

std::vector<NamedCrossing> Diagram::named_crossings() const {
  std::vector<NamedCrossing> out;
  for (const auto& x : crossings_) out.push_back({names_[x.over], names_[x.right], names_[x.left], x.writhe});
  return out;
}

std::vector<std::vector<std::string>> Diagram::named_components() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& comp : components_) {
    std::vector<std::string> names;
    for (auto a : comp) names.push_back(names_[a]);
    out.push_back(std::move(names));
  }
  return out;
}

int Diagram::end_writhe_sum(std::size_t arc) const {
  if (!end_[arc]) return 0;
  return crossings_[*end_[arc]].writhe + crossings_[*start_[arc]].writhe;
}

bool Diagram::has_alternating_writhes() const {
  for (std::size_t a = 0; a < names_.size(); ++a)
    if (!end_[a] || end_writhe_sum(a) != 0) return false;
  return true;
}

AlternatingResult make_alternating_writhes(const Diagram& d) {
  auto components = d.named_components();
  auto crossings = d.named_crossings();
  std::vector<std::string> moves;
  std::set<std::string> used(d.arc_names().begin(), d.arc_names().end());
  auto fresh = [&](const std::string& base) {
    for (int k = 1;; ++k) {
      std::string name = base + "." + std::to_string(k);
      if (used.insert(name).second) return name;
    }
  };
  auto sign = [](int w) { return w > 0 ? std::string("+1") : std::string("-1"); };

  // A component that never underpasses becomes a single arc with a positive kink.
  for (std::size_t i = 0; i < d.num_components(); ++i) {
    std::size_t b = d.component_arcs(i)[0];
    if (d.end_crossing(b)) continue;
    const std::string& name = d.arc_name(b);
    crossings.push_back({name, name, name, 1});
    moves.push_back("R1 kink (writhe +1) on " + quoted(name) + " of " + component_label(i) +
                    ", which had no undercrossings");
  }
  Diagram mid(components, crossings);

  // Each arc whose two ends share a writhe w gets a kink of writhe -w just
  // before its end crossing. The strand passes under first, so the old arc
  // ends at the kink and the new arc carries the kink's overpass on to the
  // old end crossing.
  for (std::size_t a = 0; a < mid.num_arcs(); ++a) {
    std::size_t c = *mid.end_crossing(a);
    int w = mid.crossings()[c].writhe;
    if (mid.crossings()[*mid.start_crossing(a)].writhe != w) continue;
    const std::string& name = mid.arc_name(a);
    std::string added = fresh(name);
    // Redirect the incoming slot of the old end crossing.
    if (crossings[c].writhe > 0)
      crossings[c].right = added;
    else
      crossings[c].left = added;
    int wk = -w;
    NamedCrossing kink{added, wk > 0 ? name : added, wk > 0 ? added : name, wk};
    crossings.push_back(kink);
    auto& comp = components[mid.component_of(a)];
    comp.insert(std::find(comp.begin(), comp.end(), name) + 1, added);
    moves.push_back("R1 kink (writhe " + sign(wk) + ") at the end of " + quoted(name) + ", new arc " + quoted(added));
  }
  Diagram out(components, crossings);
  if (!out.has_alternating_writhes()) throw std::logic_error("alternating-writhes transform failed");
  return {std::move(out), std::move(moves)};
}

ComponentIndexing index_components(const Diagram& d, const std::vector<std::optional<std::string>>& base_arcs) {
  ComponentIndexing out;
  for (std::size_t i = 0; i < d.num_components(); ++i) {
    const auto& arcs = d.component_arcs(i);
    for (auto a : arcs)
      if (!d.end_crossing(a) || d.end_writhe_sum(a) != 0)
        throw NotAlternating("arc " + quoted(d.arc_name(a)) + " of " + component_label(i) +
                             " does not underpass once at each writhe");
    auto eligible = [&](std::size_t a) {
      return d.crossings()[*d.start_crossing(a)].writhe > 0 && d.crossings()[*d.end_crossing(a)].writhe < 0;
    };
    std::optional<std::size_t> base;
    if (i < base_arcs.size() && base_arcs[i]) {
      std::size_t a = d.arc_index(*base_arcs[i]);
      if (d.component_of(a) != i || !eligible(a))
        throw ValidationError("arc " + quoted(*base_arcs[i]) + " cannot serve as base arc of " + component_label(i));
      base = a;
    } else {
      for (auto a : arcs)
        if (eligible(a) && (!base || d.arc_name(a) < d.arc_name(*base))) base = a;
    }
    if (!base) throw NotAlternating("component " + component_label(i) + " has no arc from a +1 to a -1 crossing");
    ComponentIndex idx;
    std::size_t b = *base;
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      std::size_t c = *d.end_crossing(b);
      idx.b.push_back(b);
      idx.c.push_back(c);
      idx.a.push_back(d.crossings()[c].over);
      b = d.crossings()[c].outgoing();
    }
    if (b != *base) throw std::logic_error("component traversal did not close up");
    const std::size_t n2 = idx.b.size();
    for (std::size_t j = 0; j < n2; ++j) {
      const auto& x = d.crossings()[idx.c[j]];
      int expected = (j % 2 == 0) ? -1 : 1;
      std::size_t next = idx.b[(j + 1) % n2];
      bool ok = x.writhe == expected && (j % 2 == 0 ? (x.right == next && x.left == idx.b[j])
                                                    : (x.right == idx.b[j] && x.left == next));
      if (!ok) throw NotAlternating("indexing invariant fails at crossing c_" + std::to_string(i + 1) + std::to_string(j));
    }
    out.components.push_back(std::move(idx));
  }
  return out;
}

}  // namespace medq
