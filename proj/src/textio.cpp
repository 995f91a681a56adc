#include "fgc/textio.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fgc {

std::string hexEncode(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

std::string hexDecode(const std::string& hex) {
  if (hex.size() % 2) throw std::invalid_argument("odd hex length");
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  std::string out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2)
    out += static_cast<char>(nib(hex[i]) * 16 + nib(hex[i + 1]));
  return out;
}

ParsedGraph parseGraphText(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  struct EdgeRec {
    int id, u, v;
  };
  std::vector<std::pair<int, char>> vertexRecs;  // (id, type or '.')
  std::vector<EdgeRec> edgeRecs;
  std::vector<std::vector<int>> forestIds;
  std::vector<std::vector<int>> filtrationIds;
  std::vector<std::pair<int, std::vector<std::pair<int, int>>>> halfOrderRecs;  // vertex, (edge, end)
  bool sawForest = false, sawFiltration = false;

  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "vertex") {
      int id;
      if (!(ls >> id)) throw std::invalid_argument("vertex record needs an id");
      std::string rest, type;
      char t = '.';
      if (ls >> rest) {
        if (rest != "type" && rest != "A" && rest != "B")
          throw std::invalid_argument("bad vertex record");
        if (rest == "type") {
          if (!(ls >> type)) throw std::invalid_argument("vertex type missing");
        } else {
          type = rest;
        }
        if (type != "A" && type != "B") throw std::invalid_argument("vertex type must be A or B");
        t = type[0];
      }
      vertexRecs.push_back({id, t});
    } else if (word == "edge") {
      EdgeRec e{};
      if (!(ls >> e.id >> e.u >> e.v)) throw std::invalid_argument("edge record needs id u v");
      edgeRecs.push_back(e);
    } else if (word == "forest") {
      sawForest = true;
      std::vector<int> ids;
      int id;
      while (ls >> id) ids.push_back(id);
      forestIds.push_back(ids);
    } else if (word == "filtration") {
      sawFiltration = true;
      std::vector<int> stage;
      std::string tok;
      while (ls >> tok) {
        if (tok == ";") {
          filtrationIds.push_back(stage);
          stage.clear();
        } else {
          stage.push_back(std::stoi(tok));
        }
      }
      if (!stage.empty()) filtrationIds.push_back(stage);
    } else if (word == "halforder") {
      int vid;
      if (!(ls >> vid)) throw std::invalid_argument("halforder needs a vertex");
      std::vector<std::pair<int, int>> halves;
      std::string tok;
      while (ls >> tok) {
        auto colon = tok.find(':');
        int end = -1;
        if (colon != std::string::npos) {
          end = std::stoi(tok.substr(colon + 1));
          tok.erase(colon);
        }
        halves.push_back({std::stoi(tok), end});
      }
      halfOrderRecs.push_back({vid, halves});
    } else {
      throw std::invalid_argument("unknown record: " + word);
    }
  }

  std::map<int, int> vmap;
  for (auto [id, t] : vertexRecs) {
    if (vmap.count(id)) throw std::invalid_argument("duplicate vertex id");
    int n = static_cast<int>(vmap.size());
    vmap[id] = n;
  }
  auto vOf = [&](int id) {
    auto it = vmap.find(id);
    if (it == vmap.end()) throw std::invalid_argument("unknown vertex id");
    return it->second;
  };
  ParsedGraph out;
  out.g = Graph(static_cast<int>(vmap.size()));
  std::map<int, int> emap;
  for (const auto& e : edgeRecs) {
    if (emap.count(e.id)) throw std::invalid_argument("duplicate edge id");
    emap[e.id] = out.g.addEdge(vOf(e.u), vOf(e.v));
  }
  auto eOf = [&](int id) {
    auto it = emap.find(id);
    if (it == emap.end()) throw std::invalid_argument("unknown edge id");
    return it->second;
  };

  bool typed = false;
  for (auto [id, t] : vertexRecs) typed |= t != '.';
  if (typed) {
    out.d.vertexType.assign(out.g.nv, 'A');
    for (auto [id, t] : vertexRecs) out.d.vertexType[vOf(id)] = t == '.' ? 'A' : t;
  }
  if (sawForest) {
    out.d.hasForest = true;
    for (const auto& ids : forestIds)
      for (int id : ids) out.d.forest.push_back(eOf(id));
  }
  if (sawFiltration) {
    out.d.hasFiltration = true;
    for (const auto& stage : filtrationIds) {
      std::vector<int> mapped;
      for (int id : stage) mapped.push_back(eOf(id));
      std::sort(mapped.begin(), mapped.end());
      out.d.filtration.push_back(mapped);
    }
    out.d.hasEdgeOrder = true;
    out.d.edgeOrder.resize(out.g.ne());
    for (int e = 0; e < out.g.ne(); ++e) out.d.edgeOrder[e] = e;
  }
  if (!halfOrderRecs.empty()) {
    out.d.hasHalfOrders = true;
    out.d.halfOrders.resize(out.g.nv);
    auto at = out.g.halvesAt();
    for (const auto& [vid, halves] : halfOrderRecs) {
      int v = vOf(vid);
      for (auto [eid, end] : halves) {
        int e = eOf(eid);
        int h;
        if (out.g.isLoop(e)) {
          if (end != 0 && end != 1)
            throw std::invalid_argument("loop half-edges need :0 or :1");
          h = 2 * e + end;
        } else if (end >= 0) {
          h = 2 * e + end;
          if (out.g.vertexOf(h) != v) throw std::invalid_argument("half-edge not at vertex");
        } else {
          if (out.g.vertexOf(2 * e) == v)
            h = 2 * e;
          else if (out.g.vertexOf(2 * e + 1) == v)
            h = 2 * e + 1;
          else
            throw std::invalid_argument("edge not incident to vertex");
        }
        out.d.halfOrders[v].push_back(h);
      }
    }
  }
  return out;
}

std::string graphText(const Graph& g, const Decoration& d) {
  std::ostringstream os;
  for (int v = 0; v < g.nv; ++v) {
    os << "vertex " << v;
    if (!d.vertexType.empty()) os << " type " << d.vertexType[v];
    os << "\n";
  }
  std::vector<int> order;
  if (d.hasEdgeOrder)
    order = d.edgeOrder;
  else {
    order.resize(g.ne());
    for (int e = 0; e < g.ne(); ++e) order[e] = e;
  }
  for (int e : order) os << "edge " << e << " " << g.ends[e].first << " " << g.ends[e].second << "\n";
  if (d.hasForest) {
    os << "forest";
    for (int e : d.forest) os << " " << e;
    os << "\n";
  }
  if (d.hasFiltration) {
    os << "filtration";
    for (size_t i = 0; i < d.filtration.size(); ++i) {
      if (i) os << " ;";
      for (int e : d.filtration[i]) os << " " << e;
    }
    os << "\n";
  }
  if (d.hasHalfOrders) {
    for (int v = 0; v < g.nv; ++v) {
      if (d.halfOrders.empty() || d.halfOrders[v].empty()) continue;
      os << "halforder " << v;
      for (int h : d.halfOrders[v]) os << " " << (h >> 1) << ":" << (h & 1);
      os << "\n";
    }
  }
  return os.str();
}

std::string chainText(const Chain& c, const std::string& header) {
  std::ostringstream os;
  if (!header.empty()) os << header << "\n";
  for (const auto& [key, coeff] : c.terms)
    os << coeff.get_str() << " " << hexEncode(key) << "\n";
  return os.str();
}

Chain parseChainText(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Chain out;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string coeff, hex;
    if (!(ls >> coeff)) continue;
    if (coeff.find('=') != std::string::npos) continue;  // header line
    if (!(ls >> hex)) throw std::invalid_argument("chain line needs coeff and key");
    out.add(hexDecode(hex), Rat(coeff));
  }
  return out;
}

std::string matrixText(const SparseMatrix& m) {
  std::ostringstream os;
  os << "cols=" << m.cols() << "\n";
  for (int i = 0; i < m.cols(); ++i) os << "label " << i << " " << hexEncode(m.columnLabels[i]) << "\n";
  for (const auto& row : m.rows) {
    os << "row:";
    for (const auto& [c, v] : row) os << " " << c << "=" << v.get_str();
    os << "\n";
  }
  return os.str();
}

SparseMatrix parseMatrixText(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  SparseMatrix m;
  int cols = -1;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word.rfind("cols=", 0) == 0) {
      cols = std::stoi(word.substr(5));
      m.columnLabels.assign(cols, "");
    } else if (word == "label") {
      int i;
      std::string hex;
      if (!(ls >> i >> hex)) throw std::invalid_argument("bad label line");
      if (i < 0 || i >= cols) throw std::invalid_argument("label index out of range");
      m.columnLabels[i] = hexDecode(hex);
    } else if (word == "row:") {
      std::map<int, Rat> row;
      std::string tok;
      while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad row entry");
        int c = std::stoi(tok.substr(0, eq));
        if (c < 0 || c >= cols) throw std::invalid_argument("column out of range");
        Rat v(tok.substr(eq + 1));
        if (v != 0) row[c] = v;
      }
      m.rows.push_back(std::move(row));
    } else {
      throw std::invalid_argument("unknown matrix record: " + word);
    }
  }
  if (cols < 0) throw std::invalid_argument("matrix needs a cols= header");
  return m;
}

}  // namespace fgc
