#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgc/chords.hpp"
#include "fgc/linalg.hpp"
#include "fgc/morita.hpp"
#include "fgc/randomgen.hpp"

using namespace fgc;

TEST_CASE("normalize applies the fG' quotient") {
  // Separating edge: dumbbell-with-structure dies.
  Graph g(4);
  g.addEdge(0, 1);
  g.addEdge(0, 1);
  g.addEdge(2, 3);
  g.addEdge(2, 3);
  g.addEdge(0, 2);  // bridge
  // valences: 0,2 have 3; 1,3 have 2 -> bivalent quotient anyway
  CHECK(normalizeForested({g, {4}}).isZero());

  // (G3, F3) is a nonzero generator.
  CHECK_FALSE(normalizeForested(buildGk(3)).isZero());

  // Swapping two forest edges negates the chain.
  ForestedGraph fg = buildGk(3);
  Chain plus = normalizeForested(fg);
  std::swap(fg.forestOrder[0], fg.forestOrder[1]);
  Chain minus = normalizeForested(fg);
  CHECK(plus == Rat(-1) * minus);
}

TEST_CASE("boundary of a maximal tree vanishes and d(G3,F3) matches the paper") {
  ForestedGraph g3 = buildGk(3);
  Chain b = boundaryOf(g3);
  // = 2(G3,T1) + (G3,T2) up to generator orientation: two classes, with
  // coefficient magnitudes {1, 2}.
  REQUIRE(b.terms.size() == 2);
  std::multiset<std::string> mags;
  for (const auto& [k, c] : b.terms) mags.insert(Rat(abs(c)).get_str());
  CHECK(mags == std::multiset<std::string>{"1", "2"});

  // Maximal trees have no extensions.
  for (const auto& [key, c] : b.terms) CHECK(boundaryOf(decodeForested(key)).isZero());
}

TEST_CASE("boundary squared vanishes on random forested graphs") {
  Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    ForestedGraph fg = randomForestedGraph(2 + static_cast<int>(rng() % 3), rng);
    CHECK(boundary(boundaryOf(fg)).isZero());
  }
}

TEST_CASE("IHX relator: D = -2C on the nose, B = -2C via a second relation") {
  ChordDiagram B{4, {{1, 4}, {2, 5}, {3, 6}}};
  ChordDiagram C{4, {{1, 4}, {2, 6}, {3, 5}}};
  ChordDiagram D{4, {{1, 6}, {2, 4}, {3, 5}}};
  Chain cB = normalizeDiagram(B), cC = normalizeDiagram(C), cD = normalizeDiagram(D);

  // Edge (12) of the line is forest edge 0.
  Chain relD = ihxRelator(toForested(D), 0);
  CHECK(relD == cD + Rat(2) * cC);

  // IHX at (45) of B, then at the image of (56), eliminates the non-diagram
  // middle term; combined: B + 2C = 0.
  Chain relB = ihxRelator(toForested(B), 3);
  Chain middle;
  for (const auto& [key, coeff] : relB.terms) {
    if (key == cB.terms.begin()->first || key == cC.terms.begin()->first) continue;
    middle.add(key, coeff);
  }
  REQUIRE(middle.terms.size() == 1);
  Chain total = relB;
  {
    const auto& [mkey, mcoeff] = *middle.terms.begin();
    ForestedGraph mid = decodeForested(mkey);
    // the image of (56): the tree edge whose removal leaves the long line;
    // reduce the middle generator instead of locating it by hand
    Chain red = toChordDiagrams(mid);
    total -= middle;
    red *= mcoeff;
    total += red;
  }
  CHECK(total == cB + Rat(2) * cC);

  CHECK_THROWS_AS(ihxRelator(toForested(D), 8), std::invalid_argument);
}

TEST_CASE("relator span is closed under re-expansion and under the boundary") {
  // Rank-3 maximal trees: small enough to materialize completely.
  auto gens2 = enumerateForestedGenerators(3, 2);
  auto gens1 = enumerateForestedGenerators(3, 1);
  auto span2 = ihxSpanOf(gens2);
  auto span1 = ihxSpanOf(gens1);

  // Boundaries of relators lie in the lower IHX span.
  ColumnIndex cols;
  SparseMatrix m1 = matrixFromChains(span1, cols);
  int base = rank(m1);
  std::vector<Chain> withBoundaries = span1;
  for (const Chain& r : span2) withBoundaries.push_back(boundary(r));
  ColumnIndex cols2;
  CHECK(rank(matrixFromChains(withBoundaries, cols2)) == base);

  // Re-expansion stability: relators of relator terms stay in the span.
  std::vector<Chain> extended = span1;
  for (const auto& key : gens1) {
    ForestedGraph fg = decodeForested(key);
    for (int e : fg.forestOrder) {
      Chain r = ihxRelator(fg, e);
      for (const auto& [k2, c2] : r.terms) {
        ForestedGraph fg2 = decodeForested(k2);
        extended.push_back(ihxRelator(fg2, fg2.forestOrder.front()));
      }
    }
  }
  ColumnIndex cols3;
  CHECK(rank(matrixFromChains(extended, cols3)) ==
        rank(matrixFromChains(span1, cols3)));
}

TEST_CASE("Lemma 5.1: a chord parallel to a tree edge kills the generator") {
  Rng rng(7);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 25; ++trial) {
    ForestedGraph fg = randomForestedGraph(3, rng);
    if (static_cast<int>(fg.forestOrder.size()) != fg.g.nv - 1) continue;
    // look for a non-tree edge parallel to a tree edge
    std::set<std::pair<int, int>> treePairs;
    for (int e : fg.forestOrder) {
      auto [u, v] = fg.g.ends[e];
      treePairs.insert({std::min(u, v), std::max(u, v)});
    }
    bool has = false;
    std::vector<char> inTree(fg.g.ne(), 0);
    for (int e : fg.forestOrder) inTree[e] = 1;
    for (int e = 0; e < fg.g.ne() && !has; ++e) {
      if (inTree[e]) continue;
      auto [u, v] = fg.g.ends[e];
      has = treePairs.count({std::min(u, v), std::max(u, v)}) > 0;
    }
    if (!has) continue;
    checked++;
    CHECK(toChordDiagrams(fg).isZero());
  }
  CHECK(checked >= 25);
}

TEST_CASE("reduction is well-defined modulo sliding relations") {
  // Reducing with different fixed chords agrees modulo the sliding span.
  auto sliding = slidingRelations(4);
  Rng rng(99);
  int cases = 0;
  for (int trial = 0; trial < 300 && cases < 40; ++trial) {
    ForestedGraph fg = randomForestedGraph(4, rng);
    if (static_cast<int>(fg.forestOrder.size()) != fg.g.nv - 1) continue;
    cases++;
    Chain base = toChordDiagrams(fg);
    std::vector<char> inTree(fg.g.ne(), 0);
    for (int e : fg.forestOrder) inTree[e] = 1;
    for (int e = 0; e < fg.g.ne(); ++e) {
      if (inTree[e]) continue;
      Chain alt = toChordDiagrams(fg, e);
      CHECK(solveMembership(sliding, alt - base).has_value());
    }
  }
  CHECK(cases >= 40);
}

TEST_CASE("rank-4 homology of the quotient complex matches Out(F_4)") {
  // H^{6-t}(Out F_4): Q at t=6 (H^0) and t=2 (H^4), zero elsewhere.
  std::vector<std::vector<std::string>> gens(8);
  std::vector<std::vector<Chain>> relators(8), boundaries(8);
  for (int t = 1; t <= 6; ++t) {
    gens[t] = enumerateForestedGenerators(4, t);
    relators[t] = ihxSpanOf(gens[t]);
    for (const auto& k : gens[t]) boundaries[t].push_back(boundaryOf(decodeForested(k)));
  }
  std::vector<int> expected = {0, 0, 1, 0, 0, 0, 1};  // index by t
  for (int t = 1; t <= 6; ++t) {
    ColumnIndex ct;
    int ihxRank = rank(matrixFromChains(relators[t], ct));
    int q = static_cast<int>(gens[t].size()) - ihxRank;
    auto rankMod = [&](const std::vector<Chain>& vecs, const std::vector<Chain>& mod) {
      std::vector<Chain> both = vecs;
      both.insert(both.end(), mod.begin(), mod.end());
      ColumnIndex c1, c2;
      return rank(matrixFromChains(both, c1)) - rank(matrixFromChains(mod, c2));
    };
    int dOut = t >= 2 ? rankMod(boundaries[t], relators[t - 1]) : 0;
    int dIn = t < 6 ? rankMod(boundaries[t + 1], relators[t]) : 0;
    CHECK(q - dOut - dIn == expected[t]);
  }
}
