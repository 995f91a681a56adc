#include "fgc/randomgen.hpp"

#include <algorithm>
#include <numeric>

namespace fgc {

ForestedGraph randomForestedGraph(int rank, Rng& rng) {
  int nv = 2 * rank - 2;
  int stubs = 3 * nv;
  while (true) {
    // Random perfect matching of the stubs.
    std::vector<int> stub(stubs);
    std::iota(stub.begin(), stub.end(), 0);
    std::shuffle(stub.begin(), stub.end(), rng);
    Graph g(nv);
    bool ok = true;
    for (int i = 0; i < stubs; i += 2) {
      int u = stub[i] / 3, v = stub[i + 1] / 3;
      if (u == v) {
        ok = false;  // loops force separating edges in trivalent graphs
        break;
      }
      g.addEdge(u, v);
    }
    if (!ok || !isConnected(g) || !bridges(g).empty()) continue;
    // Random forest: random size, greedy random acyclic picks.
    std::vector<int> edges(g.ne());
    std::iota(edges.begin(), edges.end(), 0);
    std::shuffle(edges.begin(), edges.end(), rng);
    int want = std::uniform_int_distribution<int>(0, nv - 1)(rng);
    std::vector<int> forest;
    for (int e : edges) {
      if (static_cast<int>(forest.size()) == want) break;
      forest.push_back(e);
      if (!isForest(g, forest)) forest.pop_back();
    }
    ForestedGraph fg{std::move(g), std::move(forest)};
    if (normalizeForested(fg).isZero()) continue;
    return fg;
  }
}

FilteredGraph randomFilteredGraph(int maxRank, Rng& rng) {
  while (true) {
    int rank = std::uniform_int_distribution<int>(1, maxRank)(rng);
    int nv = std::uniform_int_distribution<int>(1, std::max(1, 2 * rank - 2))(rng);
    int ne = nv + rank - 1;
    if (ne > 10 || 2 * ne < 3 * nv) continue;
    // Random stub multigraph with valences >= 3 (loops allowed).
    std::vector<int> stub;
    for (int h = 0; h < 2 * ne; ++h) stub.push_back(h);
    std::shuffle(stub.begin(), stub.end(), rng);
    // Assign stubs to vertices: first give every vertex 3, then the rest randomly.
    std::vector<int> owner(2 * ne, -1);
    {
      std::vector<int> slots;
      for (int v = 0; v < nv; ++v)
        for (int i = 0; i < 3; ++i) slots.push_back(v);
      for (int i = 3 * nv; i < 2 * ne; ++i)
        slots.push_back(std::uniform_int_distribution<int>(0, nv - 1)(rng));
      std::shuffle(slots.begin(), slots.end(), rng);
      for (int h = 0; h < 2 * ne; ++h) owner[h] = slots[h];
    }
    Graph g(nv);
    for (int i = 0; i < 2 * ne; i += 2) g.addEdge(owner[stub[i]], owner[stub[i + 1]]);
    if (!isConnected(g)) continue;
    if (firstBetti(g) != rank) continue;
    bool val3 = true;
    for (int v : g.valences()) val3 &= v >= 3;
    if (!val3) continue;

    // Random chain of core subgraphs.
    std::vector<std::vector<int>> cores;
    std::vector<int> all(g.ne());
    std::iota(all.begin(), all.end(), 0);
    for (int mask = 1; mask < (1 << g.ne()) - 1; ++mask) {
      std::vector<int> sub;
      for (int e = 0; e < g.ne(); ++e)
        if (mask & (1 << e)) sub.push_back(e);
      if (isCoreSubgraph(g, sub)) cores.push_back(sub);
    }
    std::shuffle(cores.begin(), cores.end(), rng);
    FilteredGraph fg;
    fg.g = g;
    int wantStages = std::uniform_int_distribution<int>(0, 3)(rng);
    std::vector<std::vector<int>> chain;
    for (const auto& c : cores) {
      if (static_cast<int>(chain.size()) == wantStages) break;
      bool fits = true;
      std::vector<std::vector<int>> trial = chain;
      trial.push_back(c);
      std::sort(trial.begin(), trial.end(),
                [](const auto& a, const auto& b) { return a.size() < b.size(); });
      for (size_t i = 0; i + 1 < trial.size(); ++i) {
        if (trial[i].size() >= trial[i + 1].size() ||
            !std::includes(trial[i + 1].begin(), trial[i + 1].end(), trial[i].begin(),
                           trial[i].end()))
          fits = false;
      }
      if (fits) chain = std::move(trial);
    }
    fg.stages = chain;
    fg.edgeOrder = all;
    std::shuffle(fg.edgeOrder.begin(), fg.edgeOrder.end(), rng);
    Chain n;
    try {
      n = normalizeFiltered(fg);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (n.isZero()) continue;
    return fg;
  }
}

}  // namespace fgc
