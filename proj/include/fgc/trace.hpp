#pragma once

#include <vector>

#include "fgc/chain.hpp"
#include "fgc/forested.hpp"

namespace fgc {

// Connected graph with odd valences, oriented by half-edge orders at A
// vertices. All-A (or untyped) graphs are cG' generators; with B vertices
// (trivalent, unordered) they generate cG''.
struct OddGraph {
  Graph g;
  std::vector<char> vertexType;               // empty = all A
  std::vector<std::vector<int>> halfOrders;   // per vertex; empty at B vertices

  Decoration decoration() const {
    Decoration d;
    d.vertexType = vertexType;
    d.hasHalfOrders = true;
    d.halfOrders = halfOrders;
    return d;
  }
};

OddGraph decodeOdd(const std::string& key);

// Image in cG' (or cG''): 0 for separating edges or disconnected graphs,
// otherwise sign * key. Throws on even valences or non-trivalent B vertices.
Chain normalizeOdd(const OddGraph& og);

// The graphical trace. Nonzero only when every forest component is an even
// linear tree closed by an edge of G-F (collapsed to a vertex with the
// walk-order half-edge ordering, each contributing a factor -2). With
// `abVariant`, single-vertex components become type B vertices instead and
// only collapsed components contribute to the coefficient.
Chain graphicalTrace(const ForestedGraph& fg, bool abVariant = false);
Chain graphicalTraceChain(const Chain& c, bool abVariant = false);

// Coefficient of theta in the trace of c, adjusted by theta's canonical
// sign. Throws if theta is the zero generator.
Rat mu(const Chain& c, const OddGraph& theta);

// Blow each vertex up into a circle, distributing incident edges in
// half-order around it; the forest is the maximal subtree of each circle.
// Satisfies mu(trace(blowup(theta)), theta) = (-2)^{vertices}.
ForestedGraph blowup(const OddGraph& theta);

// Homological degree 2r - 2 + a - b of the projection class.
int classDegree(const OddGraph& theta);

}  // namespace fgc
