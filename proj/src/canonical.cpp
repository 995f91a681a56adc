#include "fgc/canonical.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <tuple>

namespace fgc {

int permutationParity(const std::vector<int>& ranks) {
  int inv = 0;
  for (size_t i = 0; i < ranks.size(); ++i)
    for (size_t j = i + 1; j < ranks.size(); ++j)
      if (ranks[i] > ranks[j]) inv++;
  return (inv % 2 == 0) ? 1 : -1;
}

namespace {

struct EdgeClass {
  int inForest;
  int stage;  // 1-based first filtration stage, stages+1 if only in G, 0 if none
  bool operator<(const EdgeClass& o) const {
    return std::tie(inForest, stage) < std::tie(o.inForest, o.stage);
  }
  bool operator==(const EdgeClass& o) const {
    return inForest == o.inForest && stage == o.stage;
  }
};

void validate(const Graph& g, const Decoration& d) {
  if (d.hasForest) {
    std::vector<char> seen(g.ne(), 0);
    for (int e : d.forest) {
      if (e < 0 || e >= g.ne() || seen[e]) throw std::invalid_argument("bad forest edge");
      seen[e] = 1;
    }
    if (!isForest(g, d.forest)) throw std::invalid_argument("forest is not acyclic");
  }
  if (d.hasFiltration) {
    std::set<int> prev;
    for (const auto& stage : d.filtration) {
      std::set<int> cur(stage.begin(), stage.end());
      if (cur.size() != stage.size()) throw std::invalid_argument("duplicate edge in stage");
      for (int e : cur)
        if (e < 0 || e >= g.ne()) throw std::invalid_argument("bad stage edge");
      if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()) || cur == prev)
        throw std::invalid_argument("filtration not strictly nested");
      prev = cur;
    }
    if (static_cast<int>(prev.size()) >= g.ne() && !d.filtration.empty())
      throw std::invalid_argument("filtration stage equals the whole graph");
  }
  if (!d.vertexType.empty() && static_cast<int>(d.vertexType.size()) != g.nv)
    throw std::invalid_argument("vertexType size mismatch");
  if (d.hasHalfOrders) {
    if (static_cast<int>(d.halfOrders.size()) != g.nv)
      throw std::invalid_argument("halfOrders size mismatch");
    auto at = g.halvesAt();
    for (int v = 0; v < g.nv; ++v) {
      bool ordered = d.vertexType.empty() || d.vertexType[v] == 'A';
      if (!ordered) {
        if (!d.halfOrders[v].empty()) throw std::invalid_argument("half order at B vertex");
        continue;
      }
      auto sorted = d.halfOrders[v];
      std::sort(sorted.begin(), sorted.end());
      if (sorted != at[v]) throw std::invalid_argument("half order does not match incidences");
    }
  }
  if (d.hasEdgeOrder) {
    auto sorted = d.edgeOrder;
    std::sort(sorted.begin(), sorted.end());
    for (int e = 0; e < g.ne(); ++e)
      if (e >= static_cast<int>(sorted.size()) || sorted[e] != e)
        throw std::invalid_argument("edge order must list every edge once");
  }
}

std::vector<EdgeClass> edgeClasses(const Graph& g, const Decoration& d) {
  std::vector<EdgeClass> cls(g.ne(), {0, 0});
  if (d.hasForest)
    for (int e : d.forest) cls[e].inForest = 1;
  if (d.hasFiltration) {
    int k = static_cast<int>(d.filtration.size()) + 1;
    for (int e = 0; e < g.ne(); ++e) cls[e].stage = k;
    for (int i = static_cast<int>(d.filtration.size()) - 1; i >= 0; --i)
      for (int e : d.filtration[i]) cls[e].stage = i + 1;
  }
  return cls;
}

struct Searcher {
  const Graph& g;
  const Decoration& d;
  std::vector<EdgeClass> ecls;
  std::vector<int> eclsId;
  std::vector<std::vector<int>> at;  // halves at each vertex

  std::string bestCert;
  std::vector<std::vector<int>> bestLabelings;  // vertex -> canonical label
  long long leafBudget = 2000000;

  Searcher(const Graph& g_, const Decoration& d_) : g(g_), d(d_) {
    ecls = edgeClasses(g, d);
    std::vector<EdgeClass> uniq(ecls.begin(), ecls.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    eclsId.resize(g.ne());
    for (int e = 0; e < g.ne(); ++e)
      eclsId[e] =
          static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), ecls[e]) - uniq.begin());
    at = g.halvesAt();
  }

  std::vector<int> initialColors() const {
    std::vector<std::pair<std::vector<int>, int>> sig(g.nv);
    for (int v = 0; v < g.nv; ++v) {
      std::vector<int> s;
      s.push_back(d.vertexType.empty() ? 0 : d.vertexType[v]);
      s.push_back(static_cast<int>(at[v].size()));
      std::vector<int> inc;
      for (int h : at[v]) inc.push_back(eclsId[Graph::edgeOf(h)]);
      std::sort(inc.begin(), inc.end());
      s.insert(s.end(), inc.begin(), inc.end());
      sig[v] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> color(g.nv);
    for (int v = 0; v < g.nv; ++v) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(),
                                 std::make_pair(sig[v].first, 0),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
      color[v] = static_cast<int>(it - sorted.begin());
    }
    return color;
  }

  void refine(std::vector<int>& color) const {
    for (int iter = 0; iter <= g.nv; ++iter) {
      std::vector<std::pair<std::vector<int>, int>> sig(g.nv);
      for (int v = 0; v < g.nv; ++v) {
        std::vector<int> s{color[v]};
        std::vector<std::pair<int, int>> inc;
        for (int h : at[v])
          inc.push_back({eclsId[Graph::edgeOf(h)], color[g.vertexOf(Graph::partner(h))]});
        std::sort(inc.begin(), inc.end());
        for (auto [a, b] : inc) {
          s.push_back(a);
          s.push_back(b);
        }
        sig[v] = {std::move(s), v};
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> next(g.nv);
      bool changed = false;
      for (int v = 0; v < g.nv; ++v) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(),
                                   std::make_pair(sig[v].first, 0),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        next[v] = static_cast<int>(it - sorted.begin());
        if (next[v] != color[v]) changed = true;
      }
      color = std::move(next);
      if (!changed) break;
    }
  }

  std::string certOf(const std::vector<int>& label) const {
    std::string out;
    out.reserve(16 + 12 * g.ne());
    char buf[64];
    std::snprintf(buf, sizeof(buf), "V%d;%d%d%d%d;", g.nv, d.hasForest ? 1 : 0,
                  d.hasHalfOrders ? 1 : 0, d.hasEdgeOrder ? 1 : 0,
                  d.hasFiltration ? static_cast<int>(d.filtration.size()) : -1);
    out += buf;
    std::vector<char> types(g.nv, '.');
    if (!d.vertexType.empty())
      for (int v = 0; v < g.nv; ++v) types[label[v]] = d.vertexType[v];
    out.append(types.begin(), types.end());
    out += ';';
    std::vector<std::tuple<int, int, int, int>> edges;
    edges.reserve(g.ne());
    for (int e = 0; e < g.ne(); ++e) {
      int a = label[g.ends[e].first], b = label[g.ends[e].second];
      if (a > b) std::swap(a, b);
      edges.emplace_back(a, b, ecls[e].inForest, ecls[e].stage);
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b, f, s] : edges) {
      std::snprintf(buf, sizeof(buf), "%d,%d,%d,%d|", a, b, f, s);
      out += buf;
    }
    return out;
  }

  void search(std::vector<int> color) {
    refine(color);
    int splitColor = -1;
    std::vector<int> counts(g.nv, 0);
    for (int v = 0; v < g.nv; ++v) counts[color[v]]++;
    for (int c = 0; c < g.nv; ++c)
      if (counts[c] > 1) {
        splitColor = c;
        break;
      }
    if (splitColor < 0) {
      if (--leafBudget < 0) throw std::runtime_error("canonical search exploded");
      std::vector<int> label(g.nv);
      for (int v = 0; v < g.nv; ++v) label[v] = color[v];
      std::string cert = certOf(label);
      if (bestCert.empty() || cert < bestCert) {
        bestCert = cert;
        bestLabelings.clear();
        bestLabelings.push_back(label);
      } else if (cert == bestCert) {
        bestLabelings.push_back(label);
      }
      return;
    }
    for (int v = 0; v < g.nv; ++v) {
      if (color[v] != splitColor) continue;
      std::vector<int> next(g.nv);
      for (int w = 0; w < g.nv; ++w) next[w] = 2 * color[w] + 1;
      next[v] = 2 * color[v];
      search(std::move(next));
    }
  }
};

// Sign of the orientation data of (g, d) relative to the canonical
// representative, through the vertex relabeling `label`.
int orientationSign(const Graph& g, const Decoration& d, const std::vector<EdgeClass>& ecls,
                    const std::vector<int>& label) {
  int m = g.ne();
  // Canonical slot of every input edge: sort by (a, b, class, input id).
  std::vector<std::tuple<int, int, int, int, int>> order;
  order.reserve(m);
  for (int e = 0; e < m; ++e) {
    int a = label[g.ends[e].first], b = label[g.ends[e].second];
    if (a > b) std::swap(a, b);
    order.emplace_back(a, b, ecls[e].inForest, ecls[e].stage, e);
  }
  std::sort(order.begin(), order.end());
  std::vector<int> slot(m);
  for (int i = 0; i < m; ++i) slot[std::get<4>(order[i])] = i;

  int sign = 1;
  if (d.hasForest) {
    std::vector<int> ranks;
    ranks.reserve(d.forest.size());
    for (int e : d.forest) ranks.push_back(slot[e]);
    sign *= permutationParity(ranks);
  }
  if (d.hasEdgeOrder) {
    std::vector<int> ranks;
    ranks.reserve(m);
    for (int e : d.edgeOrder) ranks.push_back(slot[e]);
    sign *= permutationParity(ranks);
  }
  if (d.hasHalfOrders) {
    for (int v = 0; v < g.nv; ++v) {
      if (!d.vertexType.empty() && d.vertexType[v] != 'A') continue;
      // Canonical half id of input half h: (slot, end-bit in the canonical
      // edge); loops keep their input half parity.
      std::vector<int> canon;
      canon.reserve(d.halfOrders[v].size());
      for (int h : d.halfOrders[v]) {
        int e = Graph::edgeOf(h);
        int a = label[g.ends[e].first], b = label[g.ends[e].second];
        int bit;
        if (a == b) {
          bit = h & 1;
        } else {
          int me = label[g.vertexOf(h)];
          bit = (me == std::min(a, b)) ? 0 : 1;
        }
        canon.push_back(2 * slot[e] + bit);
      }
      std::vector<int> sorted = canon;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> ranks;
      ranks.reserve(canon.size());
      for (int c : canon)
        ranks.push_back(
            static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin()));
      sign *= permutationParity(ranks);
    }
  }
  return sign;
}

}  // namespace

CanonResult canonicalize(const Graph& g, const Decoration& d) {
  validate(g, d);
  Searcher s(g, d);
  s.search(s.initialColors());
  if (g.nv == 0) return {s.bestCert, 1};

  // Kernel automorphisms (identity on vertices).
  auto vertexOrdered = [&](int v) {
    return d.hasHalfOrders && (d.vertexType.empty() || d.vertexType[v] == 'A');
  };
  for (int e = 0; e < g.ne(); ++e) {
    if (g.isLoop(e) && vertexOrdered(g.ends[e].first)) return {s.bestCert, 0};
  }
  // Parallel same-class pairs.
  {
    std::map<std::tuple<int, int, int, int>, std::vector<int>> classes;
    for (int e = 0; e < g.ne(); ++e) {
      int a = g.ends[e].first, b = g.ends[e].second;
      if (a > b) std::swap(a, b);
      classes[{a, b, s.ecls[e].inForest, s.ecls[e].stage}].push_back(e);
    }
    for (const auto& [key, edges] : classes) {
      if (edges.size() < 2) continue;
      if (d.hasEdgeOrder) return {s.bestCert, 0};
      auto [a, b, f, st] = key;
      if (a != b && vertexOrdered(a) != vertexOrdered(b)) return {s.bestCert, 0};
    }
  }

  int sign0 = 0;
  for (const auto& label : s.bestLabelings) {
    int sg = orientationSign(g, d, s.ecls, label);
    if (sign0 == 0)
      sign0 = sg;
    else if (sg != sign0)
      return {s.bestCert, 0};
  }
  return {s.bestCert, sign0};
}

std::pair<Graph, Decoration> decodeKey(const std::string& key) {
  auto fail = []() -> std::pair<Graph, Decoration> {
    throw std::invalid_argument("malformed canonical key");
  };
  size_t pos = 0;
  auto readInt = [&](char stop) {
    size_t end = key.find(stop, pos);
    if (end == std::string::npos) fail();
    int value = 0;
    auto res = std::from_chars(key.data() + pos, key.data() + end, value);
    if (res.ec != std::errc()) fail();
    pos = end + 1;
    return value;
  };
  if (pos >= key.size() || key[pos] != 'V') fail();
  pos++;
  int nv = readInt(';');
  Graph g(nv);
  Decoration d;
  if (pos + 4 > key.size()) fail();
  d.hasForest = key[pos++] == '1';
  d.hasHalfOrders = key[pos++] == '1';
  d.hasEdgeOrder = key[pos++] == '1';
  {
    size_t end = key.find(';', pos);
    if (end == std::string::npos) fail();
    int k = 0;
    auto res = std::from_chars(key.data() + pos, key.data() + end, k);
    if (res.ec != std::errc()) fail();
    pos = end + 1;
    d.hasFiltration = k >= 0;
    if (d.hasFiltration) d.filtration.resize(k);
  }
  bool typed = false;
  std::vector<char> types(nv, '.');
  for (int v = 0; v < nv; ++v) {
    if (pos >= key.size()) fail();
    types[v] = key[pos++];
    if (types[v] != '.') typed = true;
  }
  if (pos >= key.size() || key[pos++] != ';') fail();
  if (typed) d.vertexType = types;

  std::vector<int> stages;
  while (pos < key.size()) {
    int a = readInt(',');
    int b = readInt(',');
    int f = readInt(',');
    int st = readInt('|');
    int e = g.addEdge(a, b);
    if (f) d.forest.push_back(e);
    stages.push_back(st);
  }
  if (d.hasFiltration) {
    int k = static_cast<int>(d.filtration.size());
    for (int e = 0; e < g.ne(); ++e)
      for (int i = stages[e]; i <= k; ++i) d.filtration[i - 1].push_back(e);
  }
  if (d.hasHalfOrders) {
    d.halfOrders.resize(nv);
    auto at = g.halvesAt();
    for (int v = 0; v < nv; ++v)
      if (d.vertexType.empty() || d.vertexType[v] == 'A') d.halfOrders[v] = at[v];
  }
  if (d.hasEdgeOrder) {
    d.edgeOrder.resize(g.ne());
    for (int e = 0; e < g.ne(); ++e) d.edgeOrder[e] = e;
  }
  return {std::move(g), std::move(d)};
}

}  // namespace fgc
