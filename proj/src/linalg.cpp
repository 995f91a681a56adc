#include "fgc/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fgc {

SparseMatrix matrixFromChains(const std::vector<Chain>& chains, ColumnIndex& cols) {
  SparseMatrix m;
  for (const Chain& c : chains) {
    std::map<int, Rat> row;
    for (const auto& [key, coeff] : c.terms) row[cols.of(key)] = coeff;
    m.rows.push_back(std::move(row));
  }
  m.columnLabels = cols.labels;
  return m;
}

namespace {

using ZRow = std::map<int, mpz_class>;

ZRow toIntegerRow(const std::map<int, Rat>& row) {
  mpz_class lcm = 1;
  for (const auto& [c, v] : row) {
    mpz_class den = v.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  ZRow out;
  for (const auto& [c, v] : row) {
    mpz_class num = v.get_num() * (lcm / v.get_den());
    if (num != 0) out[c] = num;
  }
  return out;
}

void removeContent(ZRow& row) {
  mpz_class g = 0;
  for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

}  // namespace

EliminationResult eliminate(const SparseMatrix& m) {
  std::vector<ZRow> rows;
  rows.reserve(m.rows.size());
  for (const auto& r : m.rows) {
    ZRow z = toIntegerRow(r);
    if (!z.empty()) rows.push_back(std::move(z));
  }
  EliminationResult res;
  std::vector<char> used(rows.size(), 0);
  while (true) {
    // Column occupancy among the unused rows.
    std::map<int, int> occupancy;
    for (size_t i = 0; i < rows.size(); ++i)
      if (!used[i])
        for (const auto& [c, v] : rows[i]) occupancy[c]++;
    if (occupancy.empty()) break;
    int pivotCol = -1, best = -1;
    for (const auto& [c, count] : occupancy)
      if (best < 0 || count < best) {
        best = count;
        pivotCol = c;
      }
    // Smallest magnitude entry in that column.
    int pivotRow = -1;
    mpz_class bestAbs;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      auto it = rows[i].find(pivotCol);
      if (it == rows[i].end()) continue;
      mpz_class a = abs(it->second);
      if (pivotRow < 0 || a < bestAbs) {
        pivotRow = static_cast<int>(i);
        bestAbs = a;
      }
    }
    used[pivotRow] = 1;
    res.rank++;
    res.pivotColumns.push_back(pivotCol);
    const ZRow pivot = rows[pivotRow];
    const mpz_class& p = pivot.at(pivotCol);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      auto it = rows[i].find(pivotCol);
      if (it == rows[i].end()) continue;
      mpz_class factor = it->second;
      ZRow next;
      // next = row * p - pivot * factor
      auto a = rows[i].begin();
      auto b = pivot.begin();
      while (a != rows[i].end() || b != pivot.end()) {
        if (b == pivot.end() || (a != rows[i].end() && a->first < b->first)) {
          next[a->first] = a->second * p;
          ++a;
        } else if (a == rows[i].end() || b->first < a->first) {
          next[b->first] = -b->second * factor;
          ++b;
        } else {
          mpz_class v = a->second * p - b->second * factor;
          if (v != 0) next[a->first] = v;
          ++a;
          ++b;
        }
      }
      removeContent(next);
      rows[i] = std::move(next);
    }
  }
  std::sort(res.pivotColumns.begin(), res.pivotColumns.end());
  return res;
}

int rank(const SparseMatrix& m) { return eliminate(m).rank; }

int quotientDim(const std::vector<std::string>& ambient, const std::vector<Chain>& relators) {
  std::set<std::string> allowed(ambient.begin(), ambient.end());
  ColumnIndex cols;
  for (const auto& key : ambient) cols.of(key);
  for (const Chain& r : relators)
    for (const auto& [key, coeff] : r.terms)
      if (!allowed.count(key)) throw std::invalid_argument("relator outside ambient span");
  SparseMatrix m = matrixFromChains(relators, cols);
  return static_cast<int>(ambient.size()) - rank(m);
}

std::optional<std::vector<Rat>> solveMembership(const std::vector<Chain>& span,
                                                const Chain& target) {
  // Gauss-Jordan over Q on [span | I], tracking the combination.
  ColumnIndex cols;
  int n = static_cast<int>(span.size());
  std::vector<std::map<int, Rat>> rows(n);
  std::vector<std::vector<Rat>> combo(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (const auto& [key, coeff] : span[i].terms) rows[i][cols.of(key)] = coeff;
    combo[i][i] = 1;
  }
  std::map<int, Rat> t;
  for (const auto& [key, coeff] : target.terms) t[cols.of(key)] = coeff;
  std::vector<Rat> tcombo(n, 0);

  std::vector<char> used(n, 0);
  // Straightforward elimination by columns present.
  for (int c = 0; c < static_cast<int>(cols.labels.size()); ++c) {
    int pivot = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      auto it = rows[i].find(c);
      if (it != rows[i].end() && it->second != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    used[pivot] = 1;
    Rat p = rows[pivot][c];
    for (int i = 0; i < n; ++i) {
      if (i == pivot) continue;
      auto it = rows[i].find(c);
      if (it == rows[i].end() || it->second == 0) continue;
      Rat f = it->second / p;
      for (const auto& [cc, v] : rows[pivot]) {
        rows[i][cc] -= f * v;
        if (rows[i][cc] == 0) rows[i].erase(cc);
      }
      for (int j = 0; j < n; ++j) combo[i][j] -= f * combo[pivot][j];
    }
    auto it = t.find(c);
    if (it != t.end() && it->second != 0) {
      Rat f = it->second / p;
      for (const auto& [cc, v] : rows[pivot]) {
        t[cc] -= f * v;
        if (t[cc] == 0) t.erase(cc);
      }
      for (int j = 0; j < n; ++j) tcombo[j] += f * combo[pivot][j];
    }
  }
  for (const auto& [c, v] : t)
    if (v != 0) return std::nullopt;
  // Verify by exact re-substitution.
  Chain check;
  for (int i = 0; i < n; ++i) {
    Chain s = span[i];
    s *= tcombo[i];
    check += s;
  }
  if (!(check == target)) throw std::logic_error("membership certificate failed verification");
  return tcombo;
}

}  // namespace fgc
