#pragma once

#include <string>
#include <utility>

#include "fgc/graph.hpp"

namespace fgc {

// Canonical form of a decorated graph. `key` depends only on the
// decoration-preserving isomorphism class; `sign` is the parity relating the
// input orientation data (forest order, half-edge orders at A vertices,
// global edge order) to the canonical representative's, and 0 when some
// automorphism reverses orientation.
struct CanonResult {
  std::string key;
  int sign = 0;
};

CanonResult canonicalize(const Graph& g, const Decoration& d);

// Rebuild the canonical representative from its key. Orientation data of the
// representative: forest in ascending canonical edge order, half-edge orders
// ascending at each A vertex, edge order ascending.
std::pair<Graph, Decoration> decodeKey(const std::string& key);

int permutationParity(const std::vector<int>& ranks);

}  // namespace fgc
