#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fgc/canonical.hpp"
#include "fgc/chords.hpp"
#include "fgc/graph.hpp"

using namespace fgc;

namespace {

Graph theta3() {
  Graph g(2);
  g.addEdge(0, 1);
  g.addEdge(0, 1);
  g.addEdge(0, 1);
  return g;
}

Graph dumbbell() {
  Graph g(2);
  g.addEdge(0, 0);
  g.addEdge(1, 1);
  g.addEdge(0, 1);
  return g;
}

// Relabel vertices and shuffle edge ids/ends.
std::pair<Graph, Decoration> relabel(const Graph& g, const Decoration& d, std::mt19937_64& rng) {
  std::vector<int> vperm(g.nv);
  for (int i = 0; i < g.nv; ++i) vperm[i] = i;
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::vector<int> eperm(g.ne());
  for (int i = 0; i < g.ne(); ++i) eperm[i] = i;
  std::shuffle(eperm.begin(), eperm.end(), rng);
  Graph h(g.nv);
  std::vector<int> halfMap(g.nh());  // old half -> new half
  for (int newId = 0; newId < g.ne(); ++newId) {
    int oldId = eperm[newId];
    auto [u, v] = g.ends[oldId];
    bool flip = rng() & 1;
    if (flip)
      h.addEdge(vperm[v], vperm[u]);
    else
      h.addEdge(vperm[u], vperm[v]);
    halfMap[2 * oldId] = 2 * newId + (flip ? 1 : 0);
    halfMap[2 * oldId + 1] = 2 * newId + (flip ? 0 : 1);
  }
  std::vector<int> edgeMap(g.ne());
  for (int newId = 0; newId < g.ne(); ++newId) edgeMap[eperm[newId]] = newId;
  Decoration nd;
  nd.hasForest = d.hasForest;
  for (int e : d.forest) nd.forest.push_back(edgeMap[e]);
  nd.hasFiltration = d.hasFiltration;
  for (const auto& stage : d.filtration) {
    std::vector<int> mapped;
    for (int e : stage) mapped.push_back(edgeMap[e]);
    std::sort(mapped.begin(), mapped.end());
    nd.filtration.push_back(mapped);
  }
  if (!d.vertexType.empty()) {
    nd.vertexType.assign(g.nv, 'A');
    for (int v = 0; v < g.nv; ++v) nd.vertexType[vperm[v]] = d.vertexType[v];
  }
  nd.hasHalfOrders = d.hasHalfOrders;
  if (d.hasHalfOrders) {
    nd.halfOrders.resize(g.nv);
    for (int v = 0; v < g.nv; ++v)
      for (int half : d.halfOrders[v]) nd.halfOrders[vperm[v]].push_back(halfMap[half]);
  }
  nd.hasEdgeOrder = d.hasEdgeOrder;
  for (int e : d.edgeOrder) nd.edgeOrder.push_back(edgeMap[e]);
  return {std::move(h), std::move(nd)};
}

}  // namespace

TEST_CASE("core and separating edges") {
  Graph loop(1);
  loop.addEdge(0, 0);
  CHECK(isCore(loop));
  CHECK(isCore(theta3()));
  CHECK_FALSE(isCore(dumbbell()));
  CHECK(separatingEdges(dumbbell()) == std::vector<int>{2});
  CHECK(separatingEdges(theta3()).empty());

  Graph path(4);
  path.addEdge(0, 1);
  path.addEdge(1, 2);
  path.addEdge(2, 3);
  CHECK(separatingEdges(path).size() == 3);
}

TEST_CASE("collapse preserves rank on forests and drops it on cycles") {
  Graph t = theta3();
  auto res = collapse(t, {0});
  CHECK(res.graph.nv == 1);
  CHECK(res.graph.ne() == 2);
  CHECK(res.graph.isLoop(0));
  CHECK(firstBetti(res.graph) == firstBetti(t));

  auto whole = collapse(t, {0, 1});  // contains a cycle
  CHECK(firstBetti(whole.graph) < firstBetti(t));

  auto nothing = collapse(t, {});
  CHECK(nothing.graph.nv == t.nv);
  CHECK(nothing.graph.ne() == t.ne());
}

TEST_CASE("collapsing a maximal tree of a rank-4 graph leaves a 4-petal rose") {
  // G3 from the Morita pipeline: 6 vertices, 9 edges.
  Graph g(6);
  g.addEdge(0, 1);
  g.addEdge(1, 2);
  g.addEdge(3, 4);
  g.addEdge(4, 5);
  g.addEdge(0, 2);
  g.addEdge(3, 5);
  g.addEdge(0, 3);
  g.addEdge(1, 4);
  g.addEdge(2, 5);
  std::vector<int> tree = {0, 1, 2, 3, 6};
  REQUIRE(isForest(g, tree));
  auto res = collapse(g, tree);
  CHECK(res.graph.nv == 1);
  CHECK(res.graph.ne() == 4);
}

TEST_CASE("forest extensions") {
  Graph g(6);
  g.addEdge(0, 1);
  g.addEdge(1, 2);
  g.addEdge(3, 4);
  g.addEdge(4, 5);
  g.addEdge(0, 2);
  g.addEdge(3, 5);
  g.addEdge(0, 3);
  g.addEdge(1, 4);
  g.addEdge(2, 5);
  auto ext = forestExtensions(g, {0, 1, 2, 3});
  CHECK(ext == std::vector<int>{6, 7, 8});  // the three verticals

  Graph loop(1);
  loop.addEdge(0, 0);
  CHECK(forestExtensions(loop, {}).empty());
}

TEST_CASE("canonicalize: orientation flips and zero generators") {
  // Theta3 with half orders; transposing two half-edges at one vertex flips
  // the sign but not the key.
  Graph t = theta3();
  Decoration d;
  d.hasHalfOrders = true;
  d.halfOrders = {{0, 2, 4}, {1, 3, 5}};
  auto a = canonicalize(t, d);
  std::swap(d.halfOrders[0][0], d.halfOrders[0][1]);
  auto b = canonicalize(t, d);
  CHECK(a.key == b.key);
  CHECK(a.sign == -b.sign);
  CHECK(a.sign != 0);

  // A loop at an ordered vertex reverses orientation: zero generator.
  Graph l(2);
  l.addEdge(0, 0);
  int e = l.addEdge(0, 1);
  l.addEdge(0, 1);
  l.addEdge(1, 1);
  (void)e;
  Decoration dl;
  dl.hasHalfOrders = true;
  dl.halfOrders = l.halvesAt();
  CHECK(canonicalize(l, dl).sign == 0);
}

TEST_CASE("canonicalize is constant on isomorphism classes with multiplicative signs") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    // Random small multigraph.
    int nv = 2 + static_cast<int>(rng() % 5);
    int ne = nv + static_cast<int>(rng() % 5);
    Graph g(nv);
    for (int i = 0; i < ne; ++i) {
      int u = static_cast<int>(rng() % nv), v = static_cast<int>(rng() % nv);
      g.addEdge(u, v);
    }
    Decoration d;
    switch (rng() % 3) {
      case 0: {  // forest decoration
        d.hasForest = true;
        std::vector<int> order(g.ne());
        for (int i = 0; i < g.ne(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (int e : order) {
          d.forest.push_back(e);
          if (!isForest(g, d.forest)) d.forest.pop_back();
        }
        break;
      }
      case 1: {  // edge order decoration
        d.hasEdgeOrder = true;
        d.edgeOrder.resize(g.ne());
        for (int i = 0; i < g.ne(); ++i) d.edgeOrder[i] = i;
        std::shuffle(d.edgeOrder.begin(), d.edgeOrder.end(), rng);
        break;
      }
      default: {  // half orders everywhere
        d.hasHalfOrders = true;
        d.halfOrders = g.halvesAt();
        for (auto& ho : d.halfOrders) std::shuffle(ho.begin(), ho.end(), rng);
        break;
      }
    }
    auto base = canonicalize(g, d);
    auto [h, nd] = relabel(g, d, rng);
    auto moved = canonicalize(h, nd);
    CHECK(base.key == moved.key);
    // A relabeling is an isomorphism: both presentations have the same
    // canonical form, so zero-ness agrees and signs are both determined.
    CHECK((base.sign == 0) == (moved.sign == 0));
  }
}

TEST_CASE("decode round-trips the canonical representative") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    int nv = 2 + static_cast<int>(rng() % 4);
    Graph g(nv);
    for (int i = 0; i < nv + 2; ++i) g.addEdge(static_cast<int>(rng() % nv), static_cast<int>(rng() % nv));
    Decoration d;
    auto res = canonicalize(g, d);
    auto [rg, rd] = decodeKey(res.key);
    auto res2 = canonicalize(rg, rd);
    CHECK(res.key == res2.key);
  }
}

TEST_CASE("the four rank-4 chord diagrams have distinct keys") {
  ChordDiagram A{4, {{1, 3}, {2, 5}, {4, 6}}};
  ChordDiagram B{4, {{1, 4}, {2, 5}, {3, 6}}};
  ChordDiagram C{4, {{1, 4}, {2, 6}, {3, 5}}};
  ChordDiagram D{4, {{1, 6}, {2, 4}, {3, 5}}};
  std::set<std::string> keys;
  for (const auto* d : {&A, &B, &C, &D}) {
    Chain c = normalizeDiagram(*d);
    REQUIRE_FALSE(c.isZero());
    keys.insert(c.terms.begin()->first);
  }
  CHECK(keys.size() == 4);
}

TEST_CASE("inconsistent decorations are structural errors") {
  Graph t = theta3();
  Decoration d;
  d.hasForest = true;
  d.forest = {0, 1};  // parallel edges: a cycle
  CHECK_THROWS_AS(canonicalize(t, d), std::invalid_argument);

  Decoration f;
  f.hasFiltration = true;
  f.filtration = {{0, 1}, {0}};  // not nested
  CHECK_THROWS_AS(canonicalize(t, f), std::invalid_argument);
}
