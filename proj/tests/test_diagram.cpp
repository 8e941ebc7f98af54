#include <random>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "medq/corpus.hpp"
#include "medq/diagram.hpp"
#include "medq/error.hpp"

using namespace medq;

namespace {

std::string validation_message(const std::string& json) {
  try {
    parse_diagram(json);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

void check_indexing(const Diagram& d, const ComponentIndexing& ix) {
  REQUIRE(ix.components.size() == d.num_components());
  for (std::size_t i = 0; i < d.num_components(); ++i) {
    const auto& c = ix.components[i];
    const std::size_t len = c.b.size();
    REQUIRE(len % 2 == 0);
    REQUIRE(len == d.component_arcs(i).size());
    for (std::size_t j = 0; j < len; ++j) {
      const Crossing& x = d.crossings()[c.c[j]];
      CHECK(x.writhe == (j % 2 == 0 ? -1 : 1));
      CHECK(x.over == c.a[j]);
      const std::size_t next = c.b[(j + 1) % len];
      if (j % 2 == 0) {
        CHECK(x.right == next);
        CHECK(x.left == c.b[j]);
      } else {
        CHECK(x.right == c.b[j]);
        CHECK(x.left == next);
      }
    }
  }
}

}  // namespace

TEST_CASE("corpus diagrams parse with the expected shapes") {
  struct Shape {
    const char* name;
    std::size_t mu, arcs, crossings;
  };
  for (const Shape& s : {Shape{"hopf", 2, 2, 2}, Shape{"virtual-hopf", 2, 2, 1}, Shape{"whitehead", 2, 5, 5},
                         Shape{"whitehead-mirror", 2, 5, 5}, Shape{"7-2-8", 2, 7, 7}, Shape{"trefoil", 1, 3, 3},
                         Shape{"unknot", 1, 1, 0}}) {
    CAPTURE(s.name);
    Diagram d = corpus_entry(s.name).diagram();
    CHECK(d.num_components() == s.mu);
    CHECK(d.num_arcs() == s.arcs);
    CHECK(d.num_crossings() == s.crossings);
    CHECK(parse_diagram(diagram_to_json(d)) == d);
  }
  CHECK_THROWS_AS(corpus_entry("no-such-link"), ValidationError);
}

TEST_CASE("validation names the violated invariant") {
  // An arc in three underpass slots.
  std::string three = validation_message(
      R"({"components":[["a1"],["a2"]],"crossings":[{"over":"a2","right":"a1","left":"a1","writhe":-1},)"
      R"({"over":"a1","right":"a2","left":"a2","writhe":-1},{"over":"a2","right":"a1","left":"a2","writhe":1}]})");
  CHECK_FALSE(three.empty());
  std::string slots = validation_message(
      R"({"components":[["a","b"]],"crossings":[{"over":"a","right":"a","left":"b","writhe":1},)"
      R"({"over":"a","right":"a","left":"b","writhe":1},{"over":"a","right":"a","left":"b","writhe":1}]})");
  CHECK(slots.find("slot") != std::string::npos);
  CHECK(validation_message(R"({"components":[["a"]],"crossings":[{"over":"z","right":"a","left":"a","writhe":1}]})")
            .find("unknown arc") != std::string::npos);
  CHECK(validation_message(R"({"components":[["a"]],"crossings":[{"over":"a","right":"a","left":"a","writhe":2}]})")
            .find("writhe") != std::string::npos);
  CHECK(validation_message(R"({"components":[["a"],["a"]]})").find("more than once") != std::string::npos);
  CHECK(validation_message(R"({"components":[["a","b"]]})").find("never underpasses") != std::string::npos);
  // Both ends of a enter their crossings: direction violated.
  CHECK_FALSE(validation_message(
                  R"({"components":[["a","b"]],"crossings":[{"over":"a","right":"a","left":"b","writhe":1},)"
                  R"({"over":"a","right":"b","left":"a","writhe":-1}]})")
                  .empty());
  // The same crossings accept one traversal order and reject another.
  CHECK(validation_message(
                  R"({"components":[["a","b","c"]],"crossings":[{"over":"a","right":"a","left":"b","writhe":1},)"
                  R"({"over":"a","right":"b","left":"c","writhe":1},{"over":"a","right":"c","left":"a","writhe":1}]})")
                  .empty());
  CHECK_FALSE(validation_message(
                  R"({"components":[["a","c","b"]],"crossings":[{"over":"a","right":"a","left":"b","writhe":1},)"
                  R"({"over":"a","right":"b","left":"c","writhe":1},{"over":"a","right":"c","left":"a","writhe":1}]})")
                  .empty());
}

TEST_CASE("syntax errors are parse errors") {
  CHECK_THROWS_AS(parse_diagram("{"), ParseError);
  CHECK_THROWS_AS(parse_diagram("[]"), ParseError);
  CHECK_THROWS_AS(parse_diagram(R"({"crossings":[]})"), ParseError);
  CHECK_THROWS_AS(parse_diagram(R"({"components":[["a"]],"crossings":[{"over":"a","right":"a","left":"a"}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram(R"({"components":[[1]]})"), ParseError);
}

TEST_CASE("PD import") {
  Diagram t = import_pd("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]");
  CHECK(t.num_components() == 1);
  CHECK(t.num_arcs() == 3);
  CHECK(t.num_crossings() == 3);
  std::set<int> writhes;
  for (const auto& c : t.crossings()) writhes.insert(c.writhe);
  CHECK(writhes.size() == 1);
  CHECK(read_diagram("  PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]\n") == t);

  // Mirror image flips every writhe.
  Diagram m = import_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  CHECK(m.num_crossings() == 3);
  for (const auto& c : m.crossings()) CHECK(c.writhe == -*writhes.begin());

  Diagram kink = import_pd("PD[X[1,2,2,1]]");
  CHECK(kink.num_components() == 1);
  CHECK(kink.num_arcs() == 1);
  CHECK(kink.num_crossings() == 1);
  const Crossing& k = kink.crossings()[0];
  CHECK(k.over == 0);
  CHECK(k.right == 0);
  CHECK(k.left == 0);

  // Hopf link, two components.
  Diagram h = import_pd("PD[X[4,1,3,2],X[2,3,1,4]]");
  CHECK(h.num_components() == 2);
  CHECK(h.num_arcs() == 2);

  CHECK_THROWS_AS(import_pd("PD[X[1,2,3]]"), ParseError);
  CHECK_THROWS_AS(import_pd("PD[X[1,5,2,4],V[3,1,4,6]]"), Unsupported);
  CHECK_THROWS_AS(import_pd("PD[X[1,2,3,4]]"), ParseError);
  CHECK_THROWS_AS(import_pd("PD[Y[1,2,2,1]]"), ParseError);
  CHECK_THROWS_AS(import_pd("X[1,2,2,1]"), ParseError);
}

TEST_CASE("alternating writhes") {
  Diagram w = make_alternating_writhes(corpus_entry("whitehead").diagram()).diagram;
  CHECK_FALSE(corpus_entry("whitehead").diagram().has_alternating_writhes());
  CHECK(w.has_alternating_writhes());
  AlternatingResult same = make_alternating_writhes(w);
  CHECK(same.moves.empty());
  CHECK(same.diagram == w);
  check_indexing(w, index_components(w));

  Diagram t = corpus_entry("trefoil").diagram();
  CHECK_FALSE(t.has_alternating_writhes());
  CHECK_THROWS_AS(index_components(t), NotAlternating);
  AlternatingResult at = make_alternating_writhes(t);
  CHECK(at.moves.size() == 3);
  CHECK(at.diagram.has_alternating_writhes());
  check_indexing(at.diagram, index_components(at.diagram));

  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    AlternatingResult r = make_alternating_writhes(e.diagram());
    CHECK(r.diagram.has_alternating_writhes());
    for (std::size_t a = 0; a < r.diagram.num_arcs(); ++a) CHECK(r.diagram.end_writhe_sum(a) == 0);
    check_indexing(r.diagram, index_components(r.diagram));
  }

  // A two-arc component gives n = 1.
  Diagram u = make_alternating_writhes(corpus_entry("unknot").diagram()).diagram;
  CHECK(u.num_arcs() == 2);
  CHECK(index_components(u).components[0].b.size() == 2);
}

TEST_CASE("base arc choice") {
  Diagram w = make_alternating_writhes(corpus_entry("whitehead").diagram()).diagram;
  ComponentIndexing def = index_components(w);
  const Diagram& d = w;
  // Every eligible arc works as an override and yields a valid indexing.
  int eligible = 0;
  for (std::size_t i = 0; i < d.num_components(); ++i)
    for (std::size_t arc : d.component_arcs(i)) {
      const Crossing& s = d.crossings()[*d.start_crossing(arc)];
      const Crossing& e = d.crossings()[*d.end_crossing(arc)];
      std::vector<std::optional<std::string>> base(d.num_components());
      base[i] = d.arc_name(arc);
      if (s.writhe == 1 && e.writhe == -1) {
        ++eligible;
        ComponentIndexing ix = index_components(d, base);
        check_indexing(d, ix);
        CHECK(ix.components[i].b[0] == arc);
      } else {
        CHECK_THROWS_AS(index_components(d, base), ValidationError);
      }
    }
  CHECK(eligible >= 2);
  CHECK(d.arc_name(def.components[0].b[0]) <= d.arc_name(def.components[0].b[2]));
}

TEST_CASE("property: random virtual diagrams") {
  std::mt19937_64 rng(2718);
  for (int iter = 0; iter < 300; ++iter) {
    Diagram d = gen::random_diagram(rng);
    // Every arc of a component with crossings sits in exactly two slots.
    std::vector<int> slots(d.num_arcs());
    for (const auto& c : d.crossings()) {
      ++slots[c.right];
      ++slots[c.left];
    }
    for (std::size_t a = 0; a < d.num_arcs(); ++a) {
      CHECK((slots[a] == 2 || slots[a] == 0));
      int s = d.end_writhe_sum(a);
      CHECK((s == -2 || s == 0 || s == 2));
    }
    CHECK(parse_diagram(diagram_to_json(d)) == d);
    AlternatingResult r = make_alternating_writhes(d);
    CHECK(r.diagram.has_alternating_writhes());
    CHECK(r.diagram.num_components() == d.num_components());
    check_indexing(r.diagram, index_components(r.diagram));
    CHECK(make_alternating_writhes(r.diagram).moves.empty());
  }
}
