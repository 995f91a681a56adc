#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fgc {

// Half-edge multigraph. Edge e owns half-edges 2e and 2e+1, attached to
// ends(e).first and ends(e).second respectively. Loops and parallel edges
// are first-class.
struct Graph {
  int nv = 0;
  std::vector<std::pair<int, int>> ends;

  Graph() = default;
  explicit Graph(int vertices) : nv(vertices) {}

  int ne() const { return static_cast<int>(ends.size()); }
  int nh() const { return 2 * ne(); }

  int addEdge(int u, int v) {
    if (u < 0 || u >= nv || v < 0 || v >= nv)
      throw std::invalid_argument("edge endpoint out of range");
    ends.emplace_back(u, v);
    return ne() - 1;
  }

  int vertexOf(int half) const {
    const auto& e = ends[half >> 1];
    return (half & 1) ? e.second : e.first;
  }
  static int partner(int half) { return half ^ 1; }
  static int edgeOf(int half) { return half >> 1; }
  bool isLoop(int e) const { return ends[e].first == ends[e].second; }

  std::vector<int> valences() const {
    std::vector<int> val(nv, 0);
    for (const auto& [u, v] : ends) {
      val[u]++;
      val[v]++;
    }
    return val;
  }

  // Half-edges at each vertex, ascending half-edge id.
  std::vector<std::vector<int>> halvesAt() const {
    std::vector<std::vector<int>> at(nv);
    for (int h = 0; h < nh(); ++h) at[vertexOf(h)].push_back(h);
    return at;
  }
};

// Optional decorations. Order-carrying fields double as orientation data:
// forest order for forested graphs, per-vertex half-edge orders for odd
// graphs, the global edge order for filtered graphs.
struct Decoration {
  bool hasForest = false;
  std::vector<int> forest;  // edge ids, in orientation order

  bool hasFiltration = false;
  std::vector<std::vector<int>> filtration;  // proper stages; G itself implicit

  std::vector<char> vertexType;  // 'A'/'B' per vertex; empty = untyped

  bool hasHalfOrders = false;
  std::vector<std::vector<int>> halfOrders;  // per vertex; only at A vertices

  bool hasEdgeOrder = false;
  std::vector<int> edgeOrder;  // all edge ids exactly once
};

// Connected components of the subgraph spanned by `edgeSubset`, as a vertex
// partition over all nv vertices (vertices not covered sit alone).
std::vector<int> componentsOf(const Graph& g, const std::vector<int>& edgeSubset);
int componentCount(const Graph& g, const std::vector<int>& edgeSubset);
bool isConnected(const Graph& g);

// Bridges of the whole graph (parallel edges are never bridges).
std::vector<int> bridges(const Graph& g);
// Bridges of the subgraph spanned by the given edges, reported as edge ids.
std::vector<int> bridgesOf(const Graph& g, const std::vector<int>& edgeSubset);

bool isForest(const Graph& g, const std::vector<int>& edgeSubset);

// Core: all valences >= 2 within the subgraph and no separating edges.
bool isCoreSubgraph(const Graph& g, const std::vector<int>& edgeSubset);
bool isCore(const Graph& g);

std::vector<int> separatingEdges(const Graph& g);

int firstBetti(const Graph& g);

// Edges e not in `forest` such that forest + e is still a forest.
std::vector<int> forestExtensions(const Graph& g, const std::vector<int>& forest);

struct CollapseResult {
  Graph graph;
  std::vector<int> vertexMap;  // old vertex -> new vertex
  std::vector<int> edgeMap;    // old edge -> new edge id, -1 if collapsed
  std::vector<int> keptEdges;  // old ids of surviving edges, in new-id order
};

// Collapse each connected component of `edgeSubset` to a single vertex.
// Half-edges outside the subset are retained.
CollapseResult collapse(const Graph& g, const std::vector<int>& edgeSubset);

// Distances from a vertex, edges weighted 1, restricted to `edgeSubset`.
std::vector<int> distancesFrom(const Graph& g, int start, const std::vector<int>& edgeSubset);

// Path between two vertices inside the subgraph, as edge ids in walk order.
std::vector<int> pathBetween(const Graph& g, int from, int to, const std::vector<int>& edgeSubset);

}  // namespace fgc
