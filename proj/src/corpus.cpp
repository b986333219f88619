#include "fmc/corpus.hpp"

#include "fmc/errors.hpp"
#include "fmc/spec_io.hpp"

namespace fmc {

namespace {

// Dual numbers K[t]/(t^2) with e = 1, f = t.
constexpr const char* kE1 = R"({
  "group": {"cyclic_orders": []},
  "bicharacter": {"root_order": 1, "exponents": []},
  "scalars": {"cyclotomic_order": 1},
  "module": {"dimension": 2, "degrees": [[], []]},
  "products": {
    "dot": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
    "bracket": []
  },
  "forms": {"B": [[0, 1, "1"], [1, 0, "1"]]}
})";

constexpr const char* kE2 = R"({
  "group": {"cyclic_orders": [2]},
  "bicharacter": {"root_order": 2, "exponents": [[1]]},
  "scalars": {"cyclotomic_order": 2},
  "module": {"dimension": 2, "degrees": [[0], [1]]},
  "products": {
    "dot": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
    "bracket": [[0, 1, 1, "1"], [1, 0, 1, "-1"]]
  }
})";

// sl2 with basis h, e, f.
constexpr const char* kE3 = R"({
  "group": {"cyclic_orders": []},
  "bicharacter": {"root_order": 1, "exponents": []},
  "scalars": {"cyclotomic_order": 1},
  "module": {"dimension": 3, "degrees": [[], [], []]},
  "products": {
    "dot": [],
    "bracket": [
      [0, 1, 1, "2"], [1, 0, 1, "-2"],
      [0, 2, 2, "-2"], [2, 0, 2, "2"],
      [1, 2, 0, "1"], [2, 1, 0, "-1"]
    ]
  }
})";

constexpr const char* kE4 = R"({
  "group": {"cyclic_orders": []},
  "bicharacter": {"root_order": 1, "exponents": []},
  "scalars": {"cyclotomic_order": 1},
  "module": {"dimension": 2, "degrees": [[], []]},
  "products": {"zinbiel": [[0, 0, 1, "1"]]}
})";

constexpr const char* kE5 = R"({
  "group": {"cyclic_orders": []},
  "bicharacter": {"root_order": 1, "exponents": []},
  "scalars": {"cyclotomic_order": 1},
  "module": {"dimension": 2, "degrees": [[], []]},
  "products": {"zinbiel": [[0, 0, 1, "1"]], "prelie": []}
})";

// K[x,y]/(x^2, y^2) with basis 1, x, y, xy and Poisson bracket [x,y] = xy.
constexpr const char* kE6 = R"({
  "group": {"cyclic_orders": []},
  "bicharacter": {"root_order": 1, "exponents": []},
  "scalars": {"cyclotomic_order": 1},
  "module": {"dimension": 4, "degrees": [[], [], [], []]},
  "products": {
    "dot": [
      [0, 0, 0, "1"], [0, 1, 1, "1"], [0, 2, 2, "1"], [0, 3, 3, "1"],
      [1, 0, 1, "1"], [2, 0, 2, "1"], [3, 0, 3, "1"],
      [1, 2, 3, "1"], [2, 1, 3, "1"]
    ],
    "bracket": [[1, 2, 3, "1"], [2, 1, 3, "-1"]]
  }
})";

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out = {
      {"E1", "dual numbers K[t]/(t^2), trivial grading, zero bracket, hyperbolic form B",
       {"f-manifold-color", "coherence", "form"}, kE1},
      {"E2", "super dual numbers: deg e = 0, deg f = 1, [e,f] = f", {"f-manifold-color"}, kE2},
      {"E3", "sl2 with zero product, trivial grading", {"f-manifold-color"}, kE3},
      {"E4", "two-dimensional Zinbiel algebra a<>a = b", {"zinbiel-color"}, kE4},
      {"E5", "E4 with zero pre-Lie product", {"pre-f-manifold-color"}, kE5},
      {"E6", "Poisson algebra K[x,y]/(x^2,y^2) with [x,y] = xy", {"f-manifold-color"}, kE6},
  };
  // Store canonical text so `corpus show` round-trips byte for byte.
  for (auto& e : out) e.text = emit_spec(parse_spec(e.text));
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw InvalidArgument("unknown corpus entry '" + std::string(name) + "'");
}

AlgebraSpec corpus_spec(std::string_view name) { return parse_spec(corpus_entry(name).text); }

}  // namespace fmc
