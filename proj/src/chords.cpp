#include "fgc/chords.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fgc {

ForestedGraph toForested(const ChordDiagram& d) {
  int n = 2 * d.rank - 2;
  if (static_cast<int>(d.chords.size()) * 2 != n)
    throw std::invalid_argument("chords must match the line positions perfectly");
  ForestedGraph fg;
  fg.g = Graph(n);
  for (int i = 0; i + 1 < n; ++i) fg.forestOrder.push_back(fg.g.addEdge(i, i + 1));
  fg.g.addEdge(0, n - 1);  // closing edge
  std::vector<char> seen(n + 1, 0);
  for (auto [a, b] : d.chords) {
    if (a < 1 || b < 1 || a > n || b > n || a == b || seen[a] || seen[b])
      throw std::invalid_argument("bad chord");
    seen[a] = seen[b] = 1;
    fg.g.addEdge(a - 1, b - 1);
  }
  return fg;
}

Chain normalizeDiagram(const ChordDiagram& d) { return normalizeForested(toForested(d)); }

bool hasIsolatedChord(const ChordDiagram& d) {
  for (auto [a, b] : d.chords)
    if (std::abs(a - b) == 1) return true;
  return false;
}

std::vector<std::string> enumerateChordDiagrams(int rank, int* rawCount) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
  int n = 2 * rank - 2;
  std::vector<std::string> keys;
  std::set<std::string> seen;
  int raw = 0;
  std::vector<int> partner(n + 1, 0);
  std::function<void()> rec = [&]() {
    int a = 0;
    for (int i = 1; i <= n; ++i)
      if (!partner[i]) {
        a = i;
        break;
      }
    if (!a) {
      raw++;
      ChordDiagram d{rank, {}};
      for (int i = 1; i <= n; ++i)
        if (partner[i] > i) d.chords.push_back({i, partner[i]});
      Chain c = normalizeDiagram(d);
      if (!c.isZero()) {
        const std::string& key = c.terms.begin()->first;
        if (seen.insert(key).second) keys.push_back(key);
      }
      return;
    }
    for (int b = a + 2; b <= n; ++b) {
      if (partner[b]) continue;
      partner[a] = b;
      partner[b] = a;
      rec();
      partner[a] = partner[b] = 0;
    }
  };
  rec();
  if (rawCount) *rawCount = raw;
  std::sort(keys.begin(), keys.end());
  return keys;
}

ChordDiagram rotatedPresentation(const ChordDiagram& d) {
  int n = 2 * d.rank - 2;
  ChordDiagram out{d.rank, {}};
  auto shift = [&](int i) { return i == 1 ? n : i - 1; };
  for (auto [a, b] : d.chords) {
    int x = shift(a), y = shift(b);
    if (x > y) std::swap(x, y);
    out.chords.push_back({x, y});
  }
  std::sort(out.chords.begin(), out.chords.end());
  return out;
}

Chain rotateDiagram(const ChordDiagram& d) {
  // Same graph, re-rooted tree: drop the first line edge, close with the old
  // closing edge, order along the new line.
  ForestedGraph fg = toForested(d);
  int n = 2 * d.rank - 2;
  std::vector<int> newForest;
  for (int e = 1; e < n - 1; ++e) newForest.push_back(e);  // line edges (2,3)..(n-1,n)
  newForest.push_back(n - 1);                              // old closing edge
  fg.forestOrder = std::move(newForest);
  return normalizeForested(fg);
}

Chain permuteFeet(const ChordDiagram& d, const std::vector<int>& sigma) {
  int n = 2 * d.rank - 2;
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("sigma size mismatch");
  std::vector<char> hit(n + 1, 0);
  for (int v : sigma) {
    if (v < 1 || v > n || hit[v]) throw std::invalid_argument("sigma is not a permutation");
    hit[v] = 1;
  }
  ChordDiagram out{d.rank, {}};
  for (auto [a, b] : d.chords) {
    int x = sigma[a - 1], y = sigma[b - 1];
    if (x > y) std::swap(x, y);
    out.chords.push_back({x, y});
  }
  std::sort(out.chords.begin(), out.chords.end());
  return normalizeDiagram(out);
}

ChordDiagram presentationOf(const std::string& key) {
  ForestedGraph fg = decodeForested(key);
  const Graph& g = fg.g;
  int n = g.nv;
  // Forest must be a path; walk it from the lower-id end.
  std::vector<int> deg(n, 0);
  for (int e : fg.forestOrder) {
    deg[g.ends[e].first]++;
    deg[g.ends[e].second]++;
  }
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) {
      start = v;
      break;
    }
  if (start < 0) throw std::invalid_argument("key is not a chord diagram");
  std::vector<int> pos(n, -1);
  std::set<int> remaining(fg.forestOrder.begin(), fg.forestOrder.end());
  int cur = start, idx = 1;
  pos[cur] = idx++;
  while (!remaining.empty()) {
    int nextEdge = -1, nextVert = -1;
    for (int e : remaining) {
      auto [a, b] = g.ends[e];
      if (a == cur || b == cur) {
        nextEdge = e;
        nextVert = a == cur ? b : a;
        break;
      }
    }
    if (nextEdge < 0) throw std::invalid_argument("forest of key is not a line");
    remaining.erase(nextEdge);
    pos[nextVert] = idx++;
    cur = nextVert;
  }
  if (idx != n + 1) throw std::invalid_argument("forest does not span the line");
  std::vector<char> inForest(g.ne(), 0);
  for (int e : fg.forestOrder) inForest[e] = 1;
  ChordDiagram d{(g.ne() - n + 1), {}};
  bool closingSeen = false;
  for (int e = 0; e < g.ne(); ++e) {
    if (inForest[e]) continue;
    int a = pos[g.ends[e].first], b = pos[g.ends[e].second];
    if (a > b) std::swap(a, b);
    if (a == 1 && b == n && !closingSeen) {
      closingSeen = true;  // one end-joining edge plays the closing role
      continue;
    }
    d.chords.push_back({a, b});
  }
  if (!closingSeen) throw std::invalid_argument("no closing edge");
  std::sort(d.chords.begin(), d.chords.end());
  return d;
}

std::vector<Chain> slidingRelations(int rank) {
  std::vector<Chain> out;
  for (const auto& key : enumerateChordDiagrams(rank)) {
    ForestedGraph fg = decodeForested(key);
    std::vector<char> inForest(fg.g.ne(), 0);
    for (int e : fg.forestOrder) inForest[e] = 1;
    Chain self = Chain::single(key, 1);
    for (int e = 0; e < fg.g.ne(); ++e) {
      if (inForest[e]) continue;
      Chain rel = self - toChordDiagrams(fg, e);
      if (!rel.isZero()) out.push_back(std::move(rel));
    }
  }
  return out;
}

}  // namespace fgc
