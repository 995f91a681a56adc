#pragma once

#include <random>

#include "fgc/bordification.hpp"
#include "fgc/forested.hpp"

namespace fgc {

using Rng = std::mt19937_64;

// Random nonzero fG' generator of the given rank with a random forest
// (uniformly sized), by stub matching with rejection.
ForestedGraph randomForestedGraph(int rank, Rng& rng);

// Random valid filtered graph of rank <= maxRank with a random core
// filtration and shuffled edge order.
FilteredGraph randomFilteredGraph(int maxRank, Rng& rng);

}  // namespace fgc
