#include "fgc/trace.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fgc {

OddGraph decodeOdd(const std::string& key) {
  auto [g, d] = decodeKey(key);
  if (!d.hasHalfOrders) throw std::invalid_argument("key carries no half orders");
  return {std::move(g), std::move(d.vertexType), std::move(d.halfOrders)};
}

Chain normalizeOdd(const OddGraph& og) {
  auto val = og.g.valences();
  for (int v = 0; v < og.g.nv; ++v) {
    if (val[v] % 2 == 0) throw std::invalid_argument("odd graph has an even valence");
    bool isB = !og.vertexType.empty() && og.vertexType[v] == 'B';
    if (isB && val[v] != 3) throw std::invalid_argument("type B vertex must be trivalent");
  }
  if (!isConnected(og.g)) return {};
  if (!bridges(og.g).empty()) return {};
  auto res = canonicalize(og.g, og.decoration());
  if (res.sign == 0) return {};
  return Chain::single(res.key, res.sign);
}

namespace {

struct ForestComponent {
  std::vector<int> pathEdges;   // in path order from endA to endB
  std::vector<int> pathVerts;   // endA ... endB (size = edges + 1)
  int minForestPos = -1;        // position of its lowest forest edge
};

// Decompose the forest into components; fails (returns false) if some
// component is not a linear tree.
bool linearComponents(const Graph& g, const std::vector<int>& forestOrder,
                      std::vector<ForestComponent>& comps, std::vector<int>& singles) {
  auto compIds = componentsOf(g, forestOrder);
  std::map<int, std::vector<int>> edgesByComp;
  std::vector<int> posOf(g.ne(), -1);
  for (size_t i = 0; i < forestOrder.size(); ++i) posOf[forestOrder[i]] = static_cast<int>(i);
  for (int e : forestOrder) edgesByComp[compIds[g.ends[e].first]].push_back(e);

  std::map<int, int> forestDeg;  // vertex -> # forest edges
  for (int e : forestOrder) {
    forestDeg[g.ends[e].first]++;
    forestDeg[g.ends[e].second]++;
  }
  std::set<int> touched;
  for (int e : forestOrder) {
    touched.insert(g.ends[e].first);
    touched.insert(g.ends[e].second);
  }
  for (int v = 0; v < g.nv; ++v)
    if (!touched.count(v)) singles.push_back(v);

  for (auto& [cid, edges] : edgesByComp) {
    ForestComponent fc;
    int endA = -1;
    for (int e : edges) {
      for (int v : {g.ends[e].first, g.ends[e].second}) {
        if (forestDeg[v] > 2) return false;  // non-linear tree
        if (forestDeg[v] == 1 && endA < 0) endA = v;
      }
    }
    // Walk the path from endA.
    int cur = endA;
    std::set<int> edgeSet(edges.begin(), edges.end());
    fc.pathVerts.push_back(cur);
    for (size_t step = 0; step < edges.size(); ++step) {
      int nextEdge = -1, nextVert = -1;
      for (int e : edgeSet) {
        auto [a, b] = g.ends[e];
        if (a == cur || b == cur) {
          nextEdge = e;
          nextVert = (a == cur) ? b : a;
          break;
        }
      }
      if (nextEdge < 0) return false;
      edgeSet.erase(nextEdge);
      fc.pathEdges.push_back(nextEdge);
      fc.pathVerts.push_back(nextVert);
      cur = nextVert;
    }
    if (!edgeSet.empty()) return false;
    fc.minForestPos = static_cast<int>(forestOrder.size());
    for (int e : fc.pathEdges) fc.minForestPos = std::min(fc.minForestPos, posOf[e]);
    comps.push_back(std::move(fc));
  }
  std::sort(comps.begin(), comps.end(),
            [](const ForestComponent& a, const ForestComponent& b) {
              return a.minForestPos < b.minForestPos;
            });
  return true;
}

}  // namespace

Chain graphicalTrace(const ForestedGraph& input, bool abVariant) {
  Chain normalized = normalizeForested(input);
  if (normalized.isZero()) return {};
  const auto& [key, inputSign] = *normalized.terms.begin();
  ForestedGraph fg = decodeForested(key);
  const Graph& g = fg.g;

  std::vector<ForestComponent> comps;
  std::vector<int> singles;
  if (!linearComponents(g, fg.forestOrder, comps, singles)) return {};

  std::vector<char> inForest(g.ne(), 0);
  for (int e : fg.forestOrder) inForest[e] = 1;
  std::vector<int> posOf(g.ne(), -1);
  for (size_t i = 0; i < fg.forestOrder.size(); ++i)
    posOf[fg.forestOrder[i]] = static_cast<int>(i);

  // Closer candidates per path component; odd paths kill the trace.
  std::vector<std::vector<int>> closers(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].pathEdges.size() % 2 != 0) return {};
    int endA = comps[i].pathVerts.front(), endB = comps[i].pathVerts.back();
    for (int e = 0; e < g.ne(); ++e) {
      if (inForest[e]) continue;
      auto [u, v] = g.ends[e];
      if ((u == endA && v == endB) || (u == endB && v == endA)) closers[i].push_back(e);
    }
    if (closers[i].empty()) return {};
  }
  // Single vertices: type B in the AB variant, loop-closed circles otherwise.
  std::vector<std::vector<int>> loopClosers(singles.size());
  if (!abVariant) {
    for (size_t i = 0; i < singles.size(); ++i) {
      for (int e = 0; e < g.ne(); ++e)
        if (!inForest[e] && g.isLoop(e) && g.ends[e].first == singles[i])
          loopClosers[i].push_back(e);
      if (loopClosers[i].empty()) return {};
    }
  }

  // Orientation bookkeeping: parity taking the forest order to the
  // block-normal form (components by lowest position, edges in walk order).
  // The walk starts at the path end nearer to the component's lowest edge;
  // both choices below are relative to that walk.
  Chain out;
  std::vector<size_t> choice(comps.size(), 0);
  std::vector<size_t> loopChoice(singles.size(), 0);
  while (true) {
    // Assemble this closure system.
    std::vector<int> collapseSet;
    std::vector<std::vector<int>> walks(comps.size());  // external halves per component
    std::vector<int> normalForm;
    for (size_t i = 0; i < comps.size(); ++i) {
      const auto& fc = comps[i];
      int closer = closers[i][choice[i]];
      int m = static_cast<int>(fc.pathEdges.size());
      // Start end: nearer to the lowest-position path edge.
      int minIdx = 0;
      for (int j = 1; j < m; ++j)
        if (posOf[fc.pathEdges[j]] < posOf[fc.pathEdges[minIdx]]) minIdx = j;
      bool fromFront = minIdx < m - 1 - minIdx;
      std::vector<int> edgesInWalk = fc.pathEdges;
      std::vector<int> vertsInWalk = fc.pathVerts;
      if (!fromFront) {
        std::reverse(edgesInWalk.begin(), edgesInWalk.end());
        std::reverse(vertsInWalk.begin(), vertsInWalk.end());
      }
      for (int e : edgesInWalk) normalForm.push_back(e);
      collapseSet.insert(collapseSet.end(), edgesInWalk.begin(), edgesInWalk.end());
      collapseSet.push_back(closer);
      // External half-edge at each walk vertex.
      std::set<int> cycleEdges(edgesInWalk.begin(), edgesInWalk.end());
      cycleEdges.insert(closer);
      for (int v : vertsInWalk) {
        int external = -1;
        for (int h = 0; h < g.nh(); ++h)
          if (g.vertexOf(h) == v && !cycleEdges.count(Graph::edgeOf(h))) external = h;
        if (external < 0) throw std::logic_error("cycle consumed a trivalent vertex");
        walks[i].push_back(external);
      }
    }
    if (!abVariant)
      for (size_t i = 0; i < singles.size(); ++i)
        collapseSet.push_back(loopClosers[i][loopChoice[i]]);

    std::vector<int> ranks;
    for (int e : normalForm) ranks.push_back(posOf[e]);
    int sign1 = permutationParity(ranks);

    auto col = collapse(g, collapseSet);
    OddGraph image;
    image.g = col.graph;
    image.vertexType.assign(col.graph.nv, 'A');
    image.halfOrders.resize(col.graph.nv);
    for (size_t i = 0; i < comps.size(); ++i) {
      int w = col.vertexMap[comps[i].pathVerts.front()];
      for (int h : walks[i]) {
        int e = Graph::edgeOf(h);
        image.halfOrders[w].push_back(2 * col.edgeMap[e] + (h & 1));
      }
    }
    for (size_t i = 0; i < singles.size(); ++i) {
      int w = col.vertexMap[singles[i]];
      if (abVariant) {
        image.vertexType[w] = 'B';
      } else {
        auto at = image.g.halvesAt();
        image.halfOrders[w] = at[w];  // one remaining half-edge
      }
    }
    if (!abVariant || singles.empty()) image.vertexType.clear();

    int a = static_cast<int>(comps.size()) + (abVariant ? 0 : static_cast<int>(singles.size()));
    Rat coeff = 1;
    for (int i = 0; i < a; ++i) coeff *= -2;
    Chain img = normalizeOdd(image);
    img *= coeff * sign1 * inputSign;
    out += img;

    // Next closure system.
    size_t i = 0;
    for (; i < comps.size(); ++i) {
      if (++choice[i] < closers[i].size()) break;
      choice[i] = 0;
    }
    if (i < comps.size()) continue;
    if (!abVariant) {
      size_t j = 0;
      for (; j < singles.size(); ++j) {
        if (++loopChoice[j] < loopClosers[j].size()) break;
        loopChoice[j] = 0;
      }
      if (j < singles.size()) continue;
    }
    break;
  }
  return out;
}

Chain graphicalTraceChain(const Chain& c, bool abVariant) {
  Chain out;
  for (const auto& [key, coeff] : c.terms) {
    Chain t = graphicalTrace(decodeForested(key), abVariant);
    t *= coeff;
    out += t;
  }
  return out;
}

Rat mu(const Chain& c, const OddGraph& theta) {
  Chain n = normalizeOdd(theta);
  if (n.isZero())
    throw std::invalid_argument("projection target is the zero generator");
  const auto& [key, sign] = *n.terms.begin();
  Chain tr = graphicalTraceChain(c);
  return Rat(sign) * tr.coeff(key);
}

ForestedGraph blowup(const OddGraph& theta) {
  auto val = theta.g.valences();
  for (int v = 0; v < theta.g.nv; ++v) {
    if (val[v] % 2 == 0) throw std::invalid_argument("blowup requires odd valences");
    if (!theta.vertexType.empty() && theta.vertexType[v] != 'A')
      throw std::invalid_argument("blowup requires an all-A graph");
  }
  ForestedGraph out;
  // Circle vertices, in theta-vertex order; theta half h at order position j
  // attaches to the j-th circle vertex.
  std::vector<int> base(theta.g.nv, 0);
  int total = 0;
  for (int v = 0; v < theta.g.nv; ++v) {
    base[v] = total;
    total += val[v];
  }
  out.g = Graph(total);
  std::vector<int> halfTarget(theta.g.nh(), -1);
  for (int v = 0; v < theta.g.nv; ++v)
    for (int j = 0; j < val[v]; ++j) halfTarget[theta.halfOrders[v][j]] = base[v] + j;
  // Path edges (the forest) then closing edges, per vertex.
  for (int v = 0; v < theta.g.nv; ++v)
    for (int j = 0; j + 1 < val[v]; ++j)
      out.forestOrder.push_back(out.g.addEdge(base[v] + j, base[v] + j + 1));
  for (int v = 0; v < theta.g.nv; ++v) out.g.addEdge(base[v], base[v] + val[v] - 1);
  for (int e = 0; e < theta.g.ne(); ++e)
    out.g.addEdge(halfTarget[2 * e], halfTarget[2 * e + 1]);
  return out;
}

int classDegree(const OddGraph& theta) {
  int r = firstBetti(theta.g);
  int a = 0, b = 0;
  for (int v = 0; v < theta.g.nv; ++v) {
    if (!theta.vertexType.empty() && theta.vertexType[v] == 'B')
      b++;
    else
      a++;
  }
  return 2 * r - 2 + a - b;
}

}  // namespace fgc
