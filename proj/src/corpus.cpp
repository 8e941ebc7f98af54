#include "medq/corpus.hpp"

#include "medq/error.hpp"

namespace medq {

namespace {

// Whitehead link. Arc names follow the usual figure; a5, a4, a2 form the
// first component. The transcription reproduces (1-t)^3 (a3 - a5) = 0 and
// the longitudes a5 - a2 and a3 + a2 - a1 - a4.
const char* kWhitehead = R"({
  "components": [["a5", "a4", "a2"], ["a3", "a1"]],
  "crossings": [
    {"over": "a5", "right": "a3", "left": "a1", "writhe": 1},
    {"over": "a3", "right": "a5", "left": "a4", "writhe": 1},
    {"over": "a4", "right": "a5", "left": "a2", "writhe": -1},
    {"over": "a2", "right": "a3", "left": "a1", "writhe": -1},
    {"over": "a1", "right": "a2", "left": "a4", "writhe": -1}
  ]
})";

// Orientation-reversed mirror of the Whitehead link: same arcs and relations,
// all writhes negated, so the traversal order reverses.
const char* kWhiteheadMirror = R"({
  "components": [["a5'", "a2'", "a4'"], ["a3'", "a1'"]],
  "crossings": [
    {"over": "a5'", "right": "a3'", "left": "a1'", "writhe": -1},
    {"over": "a3'", "right": "a5'", "left": "a4'", "writhe": -1},
    {"over": "a4'", "right": "a5'", "left": "a2'", "writhe": 1},
    {"over": "a2'", "right": "a3'", "left": "a1'", "writhe": 1},
    {"over": "a1'", "right": "a2'", "left": "a4'", "writhe": 1}
  ]
})";

// 7^2_8. The last crossing is fixed by the eight-term first longitude.
const char* kSevenTwoEight = R"({
  "components": [["a2", "a4", "a5", "a6", "a7"], ["a1", "a3"]],
  "crossings": [
    {"over": "a7", "right": "a3", "left": "a1", "writhe": -1},
    {"over": "a2", "right": "a3", "left": "a1", "writhe": 1},
    {"over": "a1", "right": "a7", "left": "a6", "writhe": -1},
    {"over": "a4", "right": "a6", "left": "a5", "writhe": -1},
    {"over": "a7", "right": "a5", "left": "a4", "writhe": -1},
    {"over": "a1", "right": "a2", "left": "a4", "writhe": 1},
    {"over": "a5", "right": "a2", "left": "a7", "writhe": -1}
  ]
})";

const char* kHopf = R"({
  "components": [["a1"], ["a2"]],
  "crossings": [
    {"over": "a2", "right": "a1", "left": "a1", "writhe": -1},
    {"over": "a1", "right": "a2", "left": "a2", "writhe": -1}
  ]
})";

// One classical and one virtual crossing; the virtual one is not recorded.
const char* kVirtualHopf = R"({
  "components": [["a1'"], ["a2'"]],
  "crossings": [
    {"over": "a2'", "right": "a1'", "left": "a1'", "writhe": -1}
  ]
})";

const char* kTrefoil = "PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]";

const char* kUnknot = R"({"components": [["u"]], "crossings": []})";

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {"hopf", "classical Hopf link", kHopf, 2, 2, "Lambda + Lambda/(1-t)"},
      {"virtual-hopf", "virtual Hopf link", kVirtualHopf, 2, 3, "Lambda + Lambda/(1-t)"},
      {"whitehead", "Whitehead link W", kWhitehead, 8, 8, "Lambda + Lambda/(1-t)^3"},
      {"whitehead-mirror", "mirror image W' of the Whitehead link", kWhiteheadMirror, 8, 8,
       "Lambda + Lambda/(1-t)^3"},
      {"7-2-8", "two-component link 7^2_8", kSevenTwoEight, 8, 8, "Lambda + Lambda/(1-t)^3"},
      {"trefoil", "positive trefoil (PD code)", kTrefoil, 3, 3, "Lambda + Lambda/(1-t+t^2)"},
      {"unknot", "unknot, no crossings", kUnknot, 1, 1, "Lambda"},
  };
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw ValidationError("no corpus entry named '" + name + "'");
}

}  // namespace medq
