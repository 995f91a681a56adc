#include "fgc/bordification.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace fgc {

FilteredGraph decodeFiltered(const std::string& key) {
  auto [g, d] = decodeKey(key);
  if (!d.hasFiltration || !d.hasEdgeOrder)
    throw std::invalid_argument("key is not a filtered graph");
  FilteredGraph fg{std::move(g), std::move(d.filtration), std::move(d.edgeOrder)};
  for (auto& s : fg.stages) std::sort(s.begin(), s.end());
  return fg;
}

void validateFiltered(const FilteredGraph& fg) {
  if (!isConnected(fg.g)) throw std::invalid_argument("filtered graph must be connected");
  for (int v : fg.g.valences())
    if (v < 3) throw std::invalid_argument("filtered graph needs valences >= 3");
  std::set<int> prev;
  for (const auto& stage : fg.stages) {
    std::set<int> cur(stage.begin(), stage.end());
    if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()) || cur == prev)
      throw std::invalid_argument("stages must be strictly nested");
    if (static_cast<int>(cur.size()) >= fg.g.ne())
      throw std::invalid_argument("stage must be a proper subgraph");
    if (!isCoreSubgraph(fg.g, stage)) throw std::invalid_argument("stage is not core");
    prev = std::move(cur);
  }
  auto sorted = fg.edgeOrder;
  std::sort(sorted.begin(), sorted.end());
  for (int e = 0; e < fg.g.ne(); ++e)
    if (e >= static_cast<int>(sorted.size()) || sorted[e] != e)
      throw std::invalid_argument("edge order must list every edge once");
}

Chain normalizeFiltered(const FilteredGraph& fg) {
  validateFiltered(fg);
  auto res = canonicalize(fg.g, fg.decoration());
  if (res.sign == 0) return {};
  return Chain::single(res.key, res.sign);
}

namespace {

// 1-based index of the stage (counting the full graph as stage k) where the
// edge first appears.
std::vector<int> firstStageOf(const FilteredGraph& fg) {
  int k = fg.filtrationLength();
  std::vector<int> f(fg.g.ne(), k);
  for (int i = static_cast<int>(fg.stages.size()) - 1; i >= 0; --i)
    for (int e : fg.stages[i]) f[e] = i + 1;
  return f;
}

}  // namespace

std::vector<std::pair<std::vector<int>, int>> insertableCores(const FilteredGraph& fg) {
  std::vector<std::pair<std::vector<int>, int>> out;
  int k = fg.filtrationLength();
  std::vector<int> all(fg.g.ne());
  std::iota(all.begin(), all.end(), 0);
  for (int pos = 1; pos <= k; ++pos) {
    const std::vector<int>& lower = pos == 1 ? std::vector<int>{} : fg.stages[pos - 2];
    const std::vector<int>& upper = pos == k ? all : fg.stages[pos - 1];
    std::set<int> lowerSet(lower.begin(), lower.end());
    std::vector<int> gap;
    for (int e : upper)
      if (!lowerSet.count(e)) gap.push_back(e);
    if (gap.size() < 2) continue;
    int subsets = 1 << gap.size();
    for (int mask = 1; mask + 1 < subsets; ++mask) {
      std::vector<int> cand(lower);
      for (size_t i = 0; i < gap.size(); ++i)
        if (mask & (1 << i)) cand.push_back(gap[i]);
      std::sort(cand.begin(), cand.end());
      if (isCoreSubgraph(fg.g, cand)) out.push_back({cand, pos});
    }
  }
  return out;
}

Chain dFOf(const FilteredGraph& fg) {
  Chain out;
  for (const auto& [core, pos] : insertableCores(fg)) {
    FilteredGraph next = fg;
    next.stages.insert(next.stages.begin() + (pos - 1), core);
    Chain n = normalizeFiltered(next);
    n *= (pos % 2 == 0) ? Rat(1) : Rat(-1);
    out += n;
  }
  return out;
}

Chain dEOf(const FilteredGraph& fg) {
  Chain out;
  int k = fg.filtrationLength();
  auto fstage = firstStageOf(fg);
  // size of each stage difference
  std::vector<int> diffSize(k + 1, 0);
  for (int e = 0; e < fg.g.ne(); ++e) diffSize[fstage[e]]++;
  std::vector<int> posOf(fg.g.ne(), 0);
  for (size_t i = 0; i < fg.edgeOrder.size(); ++i) posOf[fg.edgeOrder[i]] = static_cast<int>(i) + 1;
  for (int e = 0; e < fg.g.ne(); ++e) {
    if (fg.g.isLoop(e)) continue;
    if (diffSize[fstage[e]] < 2) continue;  // collapsing would shorten the filtration
    auto col = collapse(fg.g, {e});
    FilteredGraph next;
    next.g = col.graph;
    for (const auto& stage : fg.stages) {
      std::vector<int> mapped;
      for (int f : stage)
        if (f != e) mapped.push_back(col.edgeMap[f]);
      std::sort(mapped.begin(), mapped.end());
      next.stages.push_back(std::move(mapped));
    }
    for (int f : fg.edgeOrder)
      if (f != e) next.edgeOrder.push_back(col.edgeMap[f]);
    Chain n = normalizeFiltered(next);
    n *= ((posOf[e] + k - 1) % 2 == 0) ? Rat(1) : Rat(-1);
    out += n;
  }
  return out;
}

Chain dF(const Chain& c) {
  Chain out;
  for (const auto& [key, coeff] : c.terms) {
    Chain d = dFOf(decodeFiltered(key));
    d *= coeff;
    out += d;
  }
  return out;
}

Chain dE(const Chain& c) {
  Chain out;
  for (const auto& [key, coeff] : c.terms) {
    Chain d = dEOf(decodeFiltered(key));
    d *= coeff;
    out += d;
  }
  return out;
}

Chain dTotal(const Chain& c) { return dE(c) + dF(c); }

PhiChoices defaultChoices(const ABGraph& x) {
  PhiChoices ch;
  // BFS tree over edges in id order.
  std::vector<int> comp(x.g.nv, -1);
  std::vector<char> inTree(x.g.ne(), 0);
  {
    std::vector<int> parent(x.g.nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int e = 0; e < x.g.ne(); ++e) {
      int a = find(x.g.ends[e].first), b = find(x.g.ends[e].second);
      if (a != b) {
        parent[a] = b;
        inTree[e] = 1;
        ch.tree.push_back(e);
      }
    }
  }
  (void)comp;
  for (int v = 0; v < x.g.nv; ++v)
    if (x.vertexType.empty() || x.vertexType[v] == 'A') ch.aOrder.push_back(v);
  for (int e = 0; e < x.g.ne(); ++e)
    if (!inTree[e]) ch.nontreeOrder.push_back(e);
  return ch;
}

namespace {

struct BlowupPlan {
  const ABGraph& x;
  const PhiChoices& ch;
  std::vector<int> valence;        // per A vertex in aOrder
  std::vector<int> polyBase;       // first blowup-vertex id per aOrder entry
  std::vector<int> vertexBase;     // blowup vertex of B vertices
  int totalVerts = 0;

  explicit BlowupPlan(const ABGraph& x_, const PhiChoices& ch_) : x(x_), ch(ch_) {
    auto val = x.g.valences();
    std::vector<char> isA(x.g.nv, 1);
    if (!x.vertexType.empty())
      for (int v = 0; v < x.g.nv; ++v) isA[v] = x.vertexType[v] == 'A';
    for (int s : ch.aOrder) {
      if (!isA[s]) throw std::invalid_argument("aOrder contains a B vertex");
      polyBase.push_back(totalVerts);
      valence.push_back(val[s]);
      totalVerts += val[s];
    }
    vertexBase.assign(x.g.nv, -1);
    for (int v = 0; v < x.g.nv; ++v)
      if (!isA[v]) vertexBase[v] = totalVerts++;
  }
};

// Filtered graph for one bijection tuple. `keepTreeEdge` < 0 collapses the
// whole tree (the Phi construction); otherwise that tree edge is kept as an
// edge and `jointWith` names the non-tree edge sharing its filtration stage.
// `skipStage` omits the i-th assembled stage (the truncated chains of the
// choice-independence argument).
struct TupleGraph {
  FilteredGraph fg;
  bool valid = false;
};

TupleGraph buildTuple(const BlowupPlan& plan, const std::vector<std::vector<int>>& iota,
                      int keepTreeEdge, int jointWith, int skipStage) {
  const ABGraph& x = plan.x;
  const PhiChoices& ch = plan.ch;
  int a = static_cast<int>(ch.aOrder.size());

  Graph big(plan.totalVerts);
  // Polygon edges first: polygon i contributes valence[i] edges q_j from
  // vertex j to j+1 (cyclic).
  std::vector<std::vector<int>> polyEdges(a);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < plan.valence[i]; ++j)
      polyEdges[i].push_back(
          big.addEdge(plan.polyBase[i] + j, plan.polyBase[i] + (j + 1) % plan.valence[i]));
  // X edges: half at an A vertex s attaches to the polygon vertex its
  // bijection assigns; halves at B vertices attach to the B image.
  std::map<int, int> aIndex;
  for (int i = 0; i < a; ++i) aIndex[ch.aOrder[i]] = i;
  std::vector<int> halfRank(x.g.nh(), -1);
  for (int i = 0; i < a; ++i) {
    const auto& order = x.halfOrders[ch.aOrder[i]];
    for (size_t r = 0; r < order.size(); ++r) halfRank[order[r]] = static_cast<int>(r);
  }
  auto attach = [&](int half) {
    int v = x.g.vertexOf(half);
    auto it = aIndex.find(v);
    if (it == aIndex.end()) return plan.vertexBase[v];
    int i = it->second;
    return plan.polyBase[i] + iota[i][halfRank[half]];
  };
  std::vector<int> xEdgeId(x.g.ne());
  for (int e = 0; e < x.g.ne(); ++e) xEdgeId[e] = big.addEdge(attach(2 * e), attach(2 * e + 1));

  // Collapse the image of the tree (minus a kept edge, if any).
  std::vector<int> collapseSet;
  for (int e : ch.tree)
    if (e != keepTreeEdge) collapseSet.push_back(xEdgeId[e]);
  auto col = collapse(big, collapseSet);

  FilteredGraph fg;
  fg.g = col.graph;
  // Edge order: polygon blocks in aOrder, then the non-tree edges, with a
  // kept tree edge placed immediately before its joint partner.
  for (int i = 0; i < a; ++i)
    for (int e : polyEdges[i]) fg.edgeOrder.push_back(col.edgeMap[e]);
  for (int e : ch.nontreeOrder) {
    if (e == jointWith && keepTreeEdge >= 0)
      fg.edgeOrder.push_back(col.edgeMap[xEdgeId[keepTreeEdge]]);
    fg.edgeOrder.push_back(col.edgeMap[xEdgeId[e]]);
  }

  // Stages: polygons cumulatively, then non-tree edges cumulatively; the
  // final (full) stage is implicit. A kept tree edge enters with its joint
  // partner.
  std::vector<int> accum;
  std::vector<std::vector<int>> stages;
  for (int i = 0; i < a; ++i) {
    for (int e : polyEdges[i]) accum.push_back(col.edgeMap[e]);
    stages.push_back(accum);
  }
  for (size_t j = 0; j < ch.nontreeOrder.size(); ++j) {
    int e = ch.nontreeOrder[j];
    if (e == jointWith && keepTreeEdge >= 0) accum.push_back(col.edgeMap[xEdgeId[keepTreeEdge]]);
    accum.push_back(col.edgeMap[xEdgeId[e]]);
    stages.push_back(accum);
  }
  stages.pop_back();  // the full graph is implicit
  if (skipStage >= 0) stages.erase(stages.begin() + skipStage);
  for (auto& s : stages) std::sort(s.begin(), s.end());
  fg.stages = std::move(stages);
  return {std::move(fg), true};
}

int permSign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) inv++;
  return inv % 2 ? -1 : 1;
}

// Sum over bijection tuples with permutation signs.
Chain tupleSum(const ABGraph& x, const PhiChoices& ch, int keepTreeEdge, int jointWith,
               int skipStage) {
  BlowupPlan plan(x, ch);
  int a = static_cast<int>(ch.aOrder.size());
  std::vector<std::vector<int>> iota(a);
  for (int i = 0; i < a; ++i) {
    iota[i].resize(plan.valence[i]);
    std::iota(iota[i].begin(), iota[i].end(), 0);
  }
  Chain out;
  // Iterate the product of permutation groups in lexicographic order.
  std::function<void(int, int)> rec = [&](int i, int sign) {
    if (i == a) {
      auto tg = buildTuple(plan, iota, keepTreeEdge, jointWith, skipStage);
      Chain n = normalizeFiltered(tg.fg);
      n *= Rat(sign);
      out += n;
      return;
    }
    std::sort(iota[i].begin(), iota[i].end());
    do {
      rec(i + 1, sign * permSign(iota[i]));
    } while (std::next_permutation(iota[i].begin(), iota[i].end()));
  };
  rec(0, 1);
  return out;
}

void validateAB(const ABGraph& x) {
  if (!isConnected(x.g)) throw std::invalid_argument("AB graph must be connected");
  auto val = x.g.valences();
  for (int v = 0; v < x.g.nv; ++v) {
    if (val[v] < 3) throw std::invalid_argument("AB graph needs valences >= 3");
    bool isA = x.vertexType.empty() || x.vertexType[v] == 'A';
    if (isA && static_cast<int>(x.halfOrders[v].size()) != val[v])
      throw std::invalid_argument("half order missing at an A vertex");
  }
}

}  // namespace

Chain phi(const ABGraph& x, const PhiChoices& ch) {
  validateAB(x);
  return tupleSum(x, ch, -1, -1, -1);
}

Chain phi(const ABGraph& x) { return phi(x, defaultChoices(x)); }

int phiDegree(const ABGraph& x) {
  int n = firstBetti(x.g);
  int a = 0, b = 0, vb = 0;
  auto val = x.g.valences();
  for (int v = 0; v < x.g.nv; ++v) {
    if (x.vertexType.empty() || x.vertexType[v] == 'A') {
      a++;
    } else {
      b++;
      vb += val[v];
    }
  }
  return 2 * n - 2 + a + 2 * b - vb;
}

ChoiceInvariance phiChoiceInvariance(const ABGraph& x, const PhiChoices& A,
                                     const PhiChoices& B) {
  validateAB(x);
  ChoiceInvariance res;
  Chain target = phi(x, A) - phi(x, B);
  Chain witness;
  PhiChoices cur = A;
  Chain phiCur = phi(x, cur);
  auto step = [&](const Chain& w, const PhiChoices& next) -> bool {
    Chain phiNext = phi(x, next);
    Chain dw = dTotal(w);
    if (dw == phiCur - phiNext) {
      witness += w;
    } else if (dw == phiNext - phiCur) {
      witness -= w;
    } else {
      return false;
    }
    cur = next;
    phiCur = std::move(phiNext);
    return true;
  };

  // Tree moves: matroid exchange toward B's tree.
  for (int guard = 0; guard < x.g.ne() + 2; ++guard) {
    std::set<int> curTree(cur.tree.begin(), cur.tree.end());
    std::set<int> targetTree(B.tree.begin(), B.tree.end());
    if (curTree == targetTree) break;
    int entering = -1;
    for (int e : B.tree)
      if (!curTree.count(e)) {
        entering = e;
        break;
      }
    if (entering < 0) return res;
    // Leaving edge: on the tree path between entering's endpoints, not in
    // the target tree.
    auto [u, v] = x.g.ends[entering];
    int leaving = -1;
    for (int f : pathBetween(x.g, u, v, cur.tree))
      if (!targetTree.count(f)) {
        leaving = f;
        break;
      }
    if (leaving < 0) return res;
    PhiChoices next = cur;
    next.tree.erase(std::remove(next.tree.begin(), next.tree.end(), leaving), next.tree.end());
    next.tree.push_back(entering);
    // entering takes leaving's slot in the non-tree order.
    for (int& e : next.nontreeOrder)
      if (e == entering) e = leaving;
    // Connecting chain: keep `leaving` uncollapsed, entering the filtration
    // jointly with `entering` and just before it in the orientation.
    Chain w = tupleSum(x, cur, leaving, entering, -1);
    if (!step(w, next)) return res;
  }

  // Reorder A vertices by adjacent transpositions.
  for (int guard = 0; guard < x.g.nv * x.g.nv + 2 && cur.aOrder != B.aOrder; ++guard) {
    int i = 0;
    while (cur.aOrder[i] == B.aOrder[i]) i++;
    int j = i;
    while (cur.aOrder[j] != B.aOrder[i]) j++;
    for (; j > i; --j) {
      PhiChoices next = cur;
      std::swap(next.aOrder[j - 1], next.aOrder[j]);
      Chain w = tupleSum(x, cur, -1, -1, /*skipStage=*/j - 1);
      if (!step(w, next)) return res;
    }
  }

  // Reorder non-tree edges by adjacent transpositions.
  int a = static_cast<int>(cur.aOrder.size());
  for (int guard = 0; guard < x.g.ne() * x.g.ne() + 2 && cur.nontreeOrder != B.nontreeOrder;
       ++guard) {
    int i = 0;
    while (cur.nontreeOrder[i] == B.nontreeOrder[i]) i++;
    int j = i;
    while (cur.nontreeOrder[j] != B.nontreeOrder[i]) j++;
    for (; j > i; --j) {
      PhiChoices next = cur;
      std::swap(next.nontreeOrder[j - 1], next.nontreeOrder[j]);
      Chain w = tupleSum(x, cur, -1, -1, /*skipStage=*/a + j - 1);
      if (!step(w, next)) return res;
    }
  }

  if (!(dTotal(witness) == target)) return res;
  res.resolved = true;
  res.witness = std::move(witness);
  return res;
}

}  // namespace fgc
