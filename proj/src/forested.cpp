#include "fgc/forested.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fgc {

namespace {

bool isTrivalent(const Graph& g) {
  for (int v : g.valences())
    if (v != 3) return false;
  return true;
}

// Non-tree edge joining the endpoints of a tree edge (the configuration that
// vanishes in fG' by an IHX move against a separating-edge graph).
bool hasParallelToForest(const Graph& g, const std::vector<int>& forest) {
  std::set<std::pair<int, int>> forestPairs;
  for (int e : forest) {
    auto [u, v] = g.ends[e];
    forestPairs.insert({std::min(u, v), std::max(u, v)});
  }
  std::vector<char> inForest(g.ne(), 0);
  for (int e : forest) inForest[e] = 1;
  for (int e = 0; e < g.ne(); ++e) {
    if (inForest[e]) continue;
    auto [u, v] = g.ends[e];
    if (forestPairs.count({std::min(u, v), std::max(u, v)})) return true;
  }
  return false;
}

}  // namespace

ForestedGraph decodeForested(const std::string& key) {
  auto [g, d] = decodeKey(key);
  if (!d.hasForest) throw std::invalid_argument("key carries no forest");
  return {std::move(g), std::move(d.forest)};
}

Chain normalizeForested(const ForestedGraph& fg) {
  for (int v : fg.g.valences()) {
    if (v > 3) throw std::invalid_argument("forested graph must be at most trivalent");
    if (v <= 2) return {};  // bivalent vertices are quotiented away
  }
  if (!isConnected(fg.g)) return {};
  if (!bridges(fg.g).empty()) return {};
  auto res = canonicalize(fg.g, fg.decoration());
  if (res.sign == 0) return {};
  return Chain::single(res.key, res.sign);
}

Chain boundaryOf(const ForestedGraph& fg) {
  Chain out;
  for (int e : forestExtensions(fg.g, fg.forestOrder)) {
    ForestedGraph next = fg;
    next.forestOrder.push_back(e);
    out += normalizeForested(next);
  }
  return out;
}

Chain boundary(const Chain& c) {
  Chain out;
  for (const auto& [key, coeff] : c.terms) {
    Chain b = boundaryOf(decodeForested(key));
    b *= coeff;
    out += b;
  }
  return out;
}

namespace {

// The two re-pairings of the four half-edges around a forest edge. Swapping
// the attachments of half-edges hb and hc produces one expansion; the other
// uses hd. The forest edge keeps its slot in the order.
ForestedGraph swapHalves(const ForestedGraph& fg, int ha, int hb) {
  ForestedGraph out = fg;
  int ea = Graph::edgeOf(ha), eb = Graph::edgeOf(hb);
  int va = fg.g.vertexOf(ha), vb = fg.g.vertexOf(hb);
  auto setEnd = [&](int half, int v) {
    auto& e = out.g.ends[Graph::edgeOf(half)];
    if (half & 1)
      e.second = v;
    else
      e.first = v;
  };
  (void)ea;
  (void)eb;
  setEnd(ha, vb);
  setEnd(hb, va);
  return out;
}

struct IhxTerms {
  ForestedGraph h, x;
};

IhxTerms ihxExpansions(const ForestedGraph& fg, int forestEdge) {
  const Graph& g = fg.g;
  auto [u, v] = g.ends[forestEdge];
  if (u == v) throw std::invalid_argument("forest edge is a loop");
  std::vector<int> atU, atV;
  for (int h = 0; h < g.nh(); ++h) {
    if (Graph::edgeOf(h) == forestEdge) continue;
    if (g.vertexOf(h) == u) atU.push_back(h);
    if (g.vertexOf(h) == v) atV.push_back(h);
  }
  if (atU.size() != 2 || atV.size() != 2)
    throw std::invalid_argument("IHX requires trivalent endpoints");
  // I = (a b | c d); H swaps b <-> c; X swaps b <-> d.
  return {swapHalves(fg, atU[1], atV[0]), swapHalves(fg, atU[1], atV[1])};
}

}  // namespace

#ifndef FGC_IHX_LAMBDA
#define FGC_IHX_LAMBDA 1
#endif

Chain ihxRelator(const ForestedGraph& fg, int forestEdge) {
  if (std::find(fg.forestOrder.begin(), fg.forestOrder.end(), forestEdge) ==
      fg.forestOrder.end())
    throw std::invalid_argument("edge not in forest");
  auto [h, x] = ihxExpansions(fg, forestEdge);
  Chain out = normalizeForested(fg);
  Chain rest = normalizeForested(h);
  rest += normalizeForested(x);
  rest *= Rat(FGC_IHX_LAMBDA);
  out += rest;
  return out;
}

std::vector<Chain> ihxSpanOf(const std::vector<std::string>& generatorKeys) {
  std::vector<Chain> out;
  for (const auto& key : generatorKeys) {
    ForestedGraph fg = decodeForested(key);
    for (int e : fg.forestOrder) {
      Chain r = ihxRelator(fg, e);
      if (!r.isZero()) out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

// Geodesic of a non-tree edge in the tree, as a set of tree edges.
std::vector<int> geodesicOf(const Graph& g, const std::vector<int>& tree, int chord) {
  auto [u, v] = g.ends[chord];
  return pathBetween(g, u, v, tree);
}

}  // namespace

Chain toChordDiagrams(const ForestedGraph& fg, int fixedChord) {
  Chain out;
  // Work on concrete graphs; canonicalize only terminal diagrams.
  struct Item {
    ForestedGraph fg;
    Rat coeff;
    int chord;  // fixed chord id, or -1
  };
  std::vector<Item> queue{{fg, 1, fixedChord}};
  while (!queue.empty()) {
    Item it = std::move(queue.back());
    queue.pop_back();
    const Graph& g = it.fg.g;
    const auto& tree = it.fg.forestOrder;
    if (static_cast<int>(tree.size()) != g.nv - 1)
      throw std::invalid_argument("reduction requires a maximal tree");
    if (!bridges(g).empty()) continue;
    if (hasParallelToForest(g, tree)) continue;  // zero by the IHX-vs-separating move

    std::vector<char> inTree(g.ne(), 0);
    for (int e : tree) inTree[e] = 1;
    int chosen = it.chord;
    if (chosen < 0) {
      size_t best = 0;
      for (int e = 0; e < g.ne(); ++e) {
        if (inTree[e]) continue;
        size_t len = geodesicOf(g, tree, e).size();
        if (len > best) {
          best = len;
          chosen = e;
        }
      }
    }
    auto geo = geodesicOf(g, tree, chosen);
    if (geo.size() == tree.size()) {
      Chain n = normalizeForested(it.fg);
      n *= it.coeff;
      out += n;
      continue;
    }
    // Grow the geodesic: IHX at a tree edge incident to it but not in it.
    std::set<int> geoSet(geo.begin(), geo.end());
    std::set<int> geoVerts;
    for (int e : geo) {
      geoVerts.insert(g.ends[e].first);
      geoVerts.insert(g.ends[e].second);
    }
    geoVerts.insert(g.ends[chosen].first);
    geoVerts.insert(g.ends[chosen].second);
    int pivot = -1;
    for (int e : tree) {
      if (geoSet.count(e)) continue;
      if (geoVerts.count(g.ends[e].first) || geoVerts.count(g.ends[e].second)) {
        pivot = e;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("no tree edge incident to geodesic");
    auto [h, x] = ihxExpansions(it.fg, pivot);
    Rat next = it.coeff * Rat(-FGC_IHX_LAMBDA);
    queue.push_back({std::move(h), next, it.chord});
    queue.push_back({std::move(x), next, it.chord});
  }
  return out;
}

Chain reduceChain(const Chain& c) {
  Chain out;
  for (const auto& [key, coeff] : c.terms) {
    Chain r = toChordDiagrams(decodeForested(key));
    r *= coeff;
    out += r;
  }
  return out;
}

std::vector<std::string> enumerateTrivalentGraphs(int rank) {
  int nv = 2 * rank - 2;
  std::vector<std::string> keys;
  std::set<std::string> seen;
  // Upper-triangular multiplicity matrices with all degrees 3 (no loops:
  // a trivalent vertex with a loop forces a separating edge).
  std::vector<std::vector<int>> mult(nv, std::vector<int>(nv, 0));
  std::vector<int> deg(nv, 0);
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == nv) {
      for (int v = 0; v < nv; ++v)
        if (deg[v] != 3) return;
      Graph g(nv);
      for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
          for (int k = 0; k < mult[a][b]; ++k) g.addEdge(a, b);
      if (!isConnected(g) || !bridges(g).empty()) return;
      auto res = canonicalize(g, Decoration{});
      if (seen.insert(res.key).second) keys.push_back(res.key);
      return;
    }
    if (j == nv) {
      if (deg[i] == 3)
        rec(i + 1, i + 2);
      return;
    }
    for (int m = 0; m <= std::min(3 - deg[i], 3 - deg[j]); ++m) {
      mult[i][j] = m;
      deg[i] += m;
      deg[j] += m;
      rec(i, j + 1);
      deg[i] -= m;
      deg[j] -= m;
      mult[i][j] = 0;
    }
  };
  if (nv >= 2)
    rec(0, 1);
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<std::string> enumerateForestedGenerators(int rank, int trees) {
  int nv = 2 * rank - 2;
  int forestSize = nv - trees;
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& gkey : enumerateTrivalentGraphs(rank)) {
    auto [g, d0] = decodeKey(gkey);
    (void)d0;
    int m = g.ne();
    // All forests of the right size.
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int from) {
      if (static_cast<int>(subset.size()) == forestSize) {
        if (!isForest(g, subset)) return;
        ForestedGraph fg{g, subset};
        Chain n = normalizeForested(fg);
        if (n.isZero()) return;
        const std::string& key = n.terms.begin()->first;
        if (seen.insert(key).second) out.push_back(key);
        return;
      }
      for (int e = from; e < m; ++e) {
        subset.push_back(e);
        if (isForest(g, subset)) rec(e + 1);
        subset.pop_back();
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fgc
