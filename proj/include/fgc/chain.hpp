#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace fgc {

using Rat = mpq_class;

// Formal linear combination of canonical generator keys with exact rational
// coefficients. Zero coefficients are never stored.
struct Chain {
  std::map<std::string, Rat> terms;

  void add(const std::string& key, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Chain& operator+=(const Chain& o) {
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
  }
  Chain& operator-=(const Chain& o) {
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
  }
  Chain& operator*=(const Rat& r) {
    if (r == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [k, c] : terms) c *= r;
    return *this;
  }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Rat& r, Chain a) { return a *= r; }

  bool isZero() const { return terms.empty(); }
  bool operator==(const Chain& o) const { return terms == o.terms; }

  Rat coeff(const std::string& key) const {
    auto it = terms.find(key);
    return it == terms.end() ? Rat(0) : it->second;
  }

  static Chain single(const std::string& key, const Rat& c = 1) {
    Chain ch;
    ch.add(key, c);
    return ch;
  }
};

}  // namespace fgc
