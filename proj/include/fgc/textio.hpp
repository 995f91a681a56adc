#pragma once

#include <iosfwd>
#include <string>

#include "fgc/bordification.hpp"
#include "fgc/chain.hpp"
#include "fgc/graph.hpp"
#include "fgc/linalg.hpp"
#include "fgc/trace.hpp"

namespace fgc {

// Common graph text format. One record per line, '#' comments:
//   vertex <id> [type A|B]
//   edge <id> <u> <v>
//   forest <edge-id list in order>
//   filtration <edge-ids> ; <edge-ids> ; ...
//   halforder <vertex-id> <half-edge list>    (half token: edge-id[:0|:1])
// Edge record order doubles as the edge order of filtered graphs.
struct ParsedGraph {
  Graph g;
  Decoration d;
};
ParsedGraph parseGraphText(const std::string& text);
std::string graphText(const Graph& g, const Decoration& d);

std::string chainText(const Chain& c, const std::string& header = "");
Chain parseChainText(const std::string& text);

std::string matrixText(const SparseMatrix& m);
SparseMatrix parseMatrixText(const std::string& text);

std::string hexEncode(const std::string& bytes);
std::string hexDecode(const std::string& hex);

}  // namespace fgc
