#pragma once

#include <optional>
#include <vector>

#include "fgc/canonical.hpp"
#include "fgc/chain.hpp"
#include "fgc/graph.hpp"

namespace fgc {

// A cell of the bordification: connected rank-r graph with valences >= 3, a
// chain of proper core subgraphs (stages; the whole graph is implicit), and
// a total edge order as orientation.
struct FilteredGraph {
  Graph g;
  std::vector<std::vector<int>> stages;  // each sorted ascending
  std::vector<int> edgeOrder;

  Decoration decoration() const {
    Decoration d;
    d.hasFiltration = true;
    d.filtration = stages;
    d.hasEdgeOrder = true;
    d.edgeOrder = edgeOrder;
    return d;
  }
  int filtrationLength() const { return static_cast<int>(stages.size()) + 1; }
  int degree() const { return g.ne() - filtrationLength(); }
};

FilteredGraph decodeFiltered(const std::string& key);

// Structural checks: connected, valences >= 3, stages strictly nested proper
// core subgraphs. Throws on violation.
void validateFiltered(const FilteredGraph& fg);

Chain normalizeFiltered(const FilteredGraph& fg);

// Core subgraphs insertable strictly between consecutive stages, with the
// 1-based position they would occupy.
std::vector<std::pair<std::vector<int>, int>> insertableCores(const FilteredGraph& fg);

// d_F = sum over insertions of (-1)^{f(C)}, d_E = sum over collapsible edges
// of (-1)^{n(e)+k-1}; d = d_E + d_F.
Chain dF(const Chain& c);
Chain dE(const Chain& c);
Chain dTotal(const Chain& c);
Chain dFOf(const FilteredGraph& fg);
Chain dEOf(const FilteredGraph& fg);

// Odd AB-graph: valences >= 3, types A/B, half-edge orders at A vertices
// (the orientation); odd means every A vertex has odd valence.
struct ABGraph {
  Graph g;
  std::vector<char> vertexType;
  std::vector<std::vector<int>> halfOrders;

  Decoration decoration() const {
    Decoration d;
    d.vertexType = vertexType;
    d.hasHalfOrders = true;
    d.halfOrders = halfOrders;
    return d;
  }
};

// Choices entering Phi. Defaults: BFS maximal tree, A vertices ascending,
// non-tree edges ascending.
struct PhiChoices {
  std::vector<int> tree;
  std::vector<int> aOrder;
  std::vector<int> nontreeOrder;
};
PhiChoices defaultChoices(const ABGraph& x);

// Insert a polygon at every type A vertex over all attachment bijections
// with permutation signs, collapse the image of the tree, filter by polygons
// then leftover edges. Zero when some A vertex has even valence (dihedral
// cancellation through the sign sum).
Chain phi(const ABGraph& x);
Chain phi(const ABGraph& x, const PhiChoices& choices);

// 2n - 2 + a + 2b - V_B.
int phiDegree(const ABGraph& x);

// Certified connecting chain w with d(w) = phi(choices) - phi(choicesB),
// built from the elementary-move chains (tree edge swaps, adjacent
// transpositions of either ordering). Best effort: UNRESOLVED when a move
// sequence cannot be assembled within budget.
struct ChoiceInvariance {
  bool resolved = false;
  Chain witness;
};
ChoiceInvariance phiChoiceInvariance(const ABGraph& x, const PhiChoices& a, const PhiChoices& b);

}  // namespace fgc
