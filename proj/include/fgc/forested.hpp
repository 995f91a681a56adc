#pragma once

#include <vector>

#include "fgc/canonical.hpp"
#include "fgc/chain.hpp"
#include "fgc/graph.hpp"

namespace fgc {

// A forested graph (G, F): trivalent G, acyclic F containing all vertices,
// oriented by the order of forestOrder.
struct ForestedGraph {
  Graph g;
  std::vector<int> forestOrder;

  Decoration decoration() const {
    Decoration d;
    d.hasForest = true;
    d.forest = forestOrder;
    return d;
  }
};

ForestedGraph decodeForested(const std::string& key);

// Image in the quotient fG': 0 for separating edges, bivalent vertices or a
// disconnected graph, otherwise sign * key. Throws on valence > 3.
Chain normalizeForested(const ForestedGraph& fg);

// Sum of (G, F+e) over non-forest edges e keeping F+e a forest; e is
// appended last in the forest order.
Chain boundaryOf(const ForestedGraph& fg);
Chain boundary(const Chain& c);

// IHX relator at a forest edge e: the contraction of e has three expansions
// I, H, X; the relator I + H + X vanishes in fG'. The new edge inherits e's
// position in the forest order.
Chain ihxRelator(const ForestedGraph& fg, int forestEdge);

// All IHX relators of a set of generators (one per forest edge of each).
std::vector<Chain> ihxSpanOf(const std::vector<std::string>& generatorKeys);

// Chord-diagram normal form: rewrite (G, T) by IHX moves until the tree is a
// line closed by a chord. Terms with a non-tree edge parallel to a tree edge
// drop out. `fixedChord`, when >= 0, forces the reduction to grow that
// chord's geodesic (used for sliding relations); otherwise the longest
// geodesic is grown.
Chain toChordDiagrams(const ForestedGraph& fg, int fixedChord = -1);
Chain reduceChain(const Chain& c);

// All trivalent connected multigraphs without separating edges of the given
// rank, as canonical forestless keys. Exponential; ranks <= 4 intended.
std::vector<std::string> enumerateTrivalentGraphs(int rank);

// All nonzero fG' generators of the given rank whose forest has `trees`
// components.
std::vector<std::string> enumerateForestedGenerators(int rank, int trees);

}  // namespace fgc
