#pragma once

#include <utility>
#include <vector>

#include "fgc/forested.hpp"

namespace fgc {

// A chord diagram of rank r: a line with 2r-2 positions (1-based), a closing
// edge joining the ends, and a perfect matching of the positions by chords.
struct ChordDiagram {
  int rank = 0;
  std::vector<std::pair<int, int>> chords;
};

// Concrete forested graph: line edges in path order as the forest, then the
// closing edge, then the chords.
ForestedGraph toForested(const ChordDiagram& d);
Chain normalizeDiagram(const ChordDiagram& d);

bool hasIsolatedChord(const ChordDiagram& d);

// All nonzero diagrams without isolated chords, canonical and deduplicated
// (reflection-equal diagrams coincide). `rawCount` receives the number of
// underlying matchings before identification.
std::vector<std::string> enumerateChordDiagrams(int rank, int* rawCount = nullptr);

// The operator rho: the left endpoint of the first chord rotated around to
// be the last endpoint of the chain. Signed via re-rooting the tree.
Chain rotateDiagram(const ChordDiagram& d);
ChordDiagram rotatedPresentation(const ChordDiagram& d);

// The operator Y_sigma: re-glue chord feet by a permutation of positions.
Chain permuteFeet(const ChordDiagram& d, const std::vector<int>& sigma);

// For every diagram and chord, the relator equating the diagram with its
// re-reduction growing that chord into the closing position.
std::vector<Chain> slidingRelations(int rank);

// Presentation of a canonical diagram key (line walked from one end).
ChordDiagram presentationOf(const std::string& key);

}  // namespace fgc
