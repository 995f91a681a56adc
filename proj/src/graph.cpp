#include "fgc/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace fgc {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::vector<int> componentsOf(const Graph& g, const std::vector<int>& edgeSubset) {
  UnionFind uf(g.nv);
  for (int e : edgeSubset) uf.unite(g.ends[e].first, g.ends[e].second);
  std::vector<int> comp(g.nv, -1);
  int next = 0;
  for (int v = 0; v < g.nv; ++v) {
    int r = uf.find(v);
    if (comp[r] < 0) comp[r] = next++;
    comp[v] = comp[r];
  }
  return comp;
}

int componentCount(const Graph& g, const std::vector<int>& edgeSubset) {
  auto comp = componentsOf(g, edgeSubset);
  int mx = -1;
  for (int c : comp) mx = std::max(mx, c);
  return mx + 1;
}

bool isConnected(const Graph& g) {
  if (g.nv == 0) return false;
  std::vector<int> all(g.ne());
  for (int e = 0; e < g.ne(); ++e) all[e] = e;
  return componentCount(g, all) == 1;
}

std::vector<int> bridgesOf(const Graph& g, const std::vector<int>& edgeSubset) {
  // Graphs here are tiny; test each non-loop edge by removal.
  std::vector<int> out;
  for (int e : edgeSubset) {
    auto [u, v] = g.ends[e];
    if (u == v) continue;
    UnionFind uf(g.nv);
    for (int f : edgeSubset)
      if (f != e) uf.unite(g.ends[f].first, g.ends[f].second);
    if (uf.find(u) != uf.find(v)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> bridges(const Graph& g) {
  std::vector<int> all(g.ne());
  for (int e = 0; e < g.ne(); ++e) all[e] = e;
  return bridgesOf(g, all);
}

bool isForest(const Graph& g, const std::vector<int>& edgeSubset) {
  UnionFind uf(g.nv);
  for (int e : edgeSubset) {
    auto [u, v] = g.ends[e];
    if (u == v) return false;
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

bool isCoreSubgraph(const Graph& g, const std::vector<int>& edgeSubset) {
  if (edgeSubset.empty()) return false;
  std::vector<int> val(g.nv, 0);
  for (int e : edgeSubset) {
    val[g.ends[e].first]++;
    val[g.ends[e].second]++;
  }
  for (int e : edgeSubset)
    if (val[g.ends[e].first] < 2 || val[g.ends[e].second] < 2) return false;
  return bridgesOf(g, edgeSubset).empty();
}

bool isCore(const Graph& g) {
  if (g.nv == 0) return false;
  auto val = g.valences();
  for (int v = 0; v < g.nv; ++v)
    if (val[v] < 2) return false;
  return bridges(g).empty();
}

std::vector<int> separatingEdges(const Graph& g) { return bridges(g); }

int firstBetti(const Graph& g) {
  std::vector<int> all(g.ne());
  for (int e = 0; e < g.ne(); ++e) all[e] = e;
  return g.ne() - g.nv + componentCount(g, all);
}

std::vector<int> forestExtensions(const Graph& g, const std::vector<int>& forest) {
  if (!isForest(g, forest)) throw std::invalid_argument("forest contains a cycle");
  auto comp = componentsOf(g, forest);
  std::vector<char> inForest(g.ne(), 0);
  for (int e : forest) inForest[e] = 1;
  std::vector<int> out;
  for (int e = 0; e < g.ne(); ++e) {
    if (inForest[e]) continue;
    auto [u, v] = g.ends[e];
    if (u != v && comp[u] != comp[v]) out.push_back(e);
  }
  return out;
}

CollapseResult collapse(const Graph& g, const std::vector<int>& edgeSubset) {
  CollapseResult res;
  auto comp = componentsOf(g, edgeSubset);
  // Components touched by the subset collapse to one vertex; untouched
  // vertices stay themselves. Renumber in old-vertex order.
  std::vector<char> inSet(g.ne(), 0);
  for (int e : edgeSubset) inSet[e] = 1;
  std::vector<int> newId(g.nv, -1);
  int next = 0;
  for (int v = 0; v < g.nv; ++v) {
    int rep = -1;
    for (int w = 0; w <= v; ++w)
      if (comp[w] == comp[v]) {
        rep = w;
        break;
      }
    if (newId[rep] < 0) newId[rep] = next++;
    newId[v] = newId[rep];
  }
  res.graph = Graph(next);
  res.vertexMap = newId;
  res.edgeMap.assign(g.ne(), -1);
  for (int e = 0; e < g.ne(); ++e) {
    if (inSet[e]) continue;
    res.edgeMap[e] = res.graph.addEdge(newId[g.ends[e].first], newId[g.ends[e].second]);
    res.keptEdges.push_back(e);
  }
  return res;
}

std::vector<int> distancesFrom(const Graph& g, int start, const std::vector<int>& edgeSubset) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.nv);
  for (int e : edgeSubset) {
    auto [u, v] = g.ends[e];
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  std::vector<int> dist(g.nv, -1);
  std::queue<int> q;
  dist[start] = 0;
  q.push(start);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [w, e] : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::vector<int> pathBetween(const Graph& g, int from, int to, const std::vector<int>& edgeSubset) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.nv);
  for (int e : edgeSubset) {
    auto [u, v] = g.ends[e];
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  std::vector<int> prevEdge(g.nv, -1), prevVert(g.nv, -1), seen(g.nv, 0);
  std::queue<int> q;
  seen[from] = 1;
  q.push(from);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == to) break;
    for (auto [w, e] : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        prevEdge[w] = e;
        prevVert[w] = v;
        q.push(w);
      }
  }
  if (!seen[to]) throw std::invalid_argument("vertices not connected in subgraph");
  std::vector<int> path;
  for (int v = to; v != from; v = prevVert[v]) path.push_back(prevEdge[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace fgc
