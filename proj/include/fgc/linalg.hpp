#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgc/chain.hpp"

namespace fgc {

// Sparse matrix over Q with labeled columns. Rows are sparse maps; all
// arithmetic is exact.
struct SparseMatrix {
  std::vector<std::map<int, Rat>> rows;
  std::vector<std::string> columnLabels;

  int cols() const { return static_cast<int>(columnLabels.size()); }
  void addRow(const std::map<int, Rat>& r) { rows.push_back(r); }
};

// Column registry mapping canonical keys to indices, growing on demand.
struct ColumnIndex {
  std::map<std::string, int> index;
  std::vector<std::string> labels;

  int of(const std::string& key) {
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(labels.size());
    index.emplace(key, id);
    labels.push_back(key);
    return id;
  }
  std::optional<int> lookup(const std::string& key) const {
    auto it = index.find(key);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

SparseMatrix matrixFromChains(const std::vector<Chain>& chains, ColumnIndex& cols);

struct EliminationResult {
  int rank = 0;
  std::vector<int> pivotColumns;
};

// Fraction-free elimination: rows scaled to integers, content removed,
// pivots chosen in the sparsest column, smallest magnitude first.
EliminationResult eliminate(const SparseMatrix& m);
int rank(const SparseMatrix& m);

// |ambient| - rank(relators); throws if a relator leaves the ambient span.
int quotientDim(const std::vector<std::string>& ambient, const std::vector<Chain>& relators);

// Exact solution of sum_i c_i span_i = target, or nullopt.
std::optional<std::vector<Rat>> solveMembership(const std::vector<Chain>& span,
                                                const Chain& target);

}  // namespace fgc
