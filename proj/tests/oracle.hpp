#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "spinideal/multivector.hpp"
#include "spinideal/ratlinalg.hpp"

// Brute-force reference implementations, deliberately independent of the
// bitmask sign rules in the library: products are computed by explicit
// generator-word rewriting (adjacent transpositions plus metric
// contraction). Slow but transparent; used as the ground truth for every
// derived value.
namespace oracle {

using spinideal::Blade;
using spinideal::Multivector;
using spinideal::Rational;
using spinideal::RationalMatrix;
using spinideal::Signature;

inline std::pair<int, std::vector<int>> naive_blade_mul(const Signature& sig,
                                                        const std::vector<int>& a,
                                                        const std::vector<int>& b) {
  std::vector<int> word = a;
  word.insert(word.end(), b.begin(), b.end());
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
      }
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < word.size();) {
    if (i + 1 < word.size() && word[i] == word[i + 1]) {
      if (word[i] > sig.p) sign = -sign;
      i += 2;
    } else {
      out.push_back(word[i]);
      ++i;
    }
  }
  return {sign, out};
}

// Exterior product on index words: zero when an index repeats, otherwise the
// inversion parity of the concatenation.
inline std::pair<int, std::vector<int>> naive_blade_wedge(const std::vector<int>& a,
                                                          const std::vector<int>& b) {
  std::vector<int> word = a;
  word.insert(word.end(), b.begin(), b.end());
  int sign = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[i] == word[j]) return {0, {}};
      if (word[i] > word[j]) sign = -sign;
    }
  }
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  return {sign, sorted};
}

inline Multivector naive_mv_mul(const Multivector& x, const Multivector& y) {
  Multivector out(x.sig());
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      auto [sign, indices] = naive_blade_mul(x.sig(), bx.indices(), by.indices());
      Rational c = cx * cy;
      out.add_term(Blade::from_indices(indices), sign > 0 ? c : Rational(-c));
    }
  }
  return out;
}

inline Multivector naive_mv_wedge(const Multivector& x, const Multivector& y) {
  Multivector out(x.sig());
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      auto [sign, indices] = naive_blade_wedge(bx.indices(), by.indices());
      if (sign == 0) continue;
      Rational c = cx * cy;
      out.add_term(Blade::from_indices(indices), sign > 0 ? c : Rational(-c));
    }
  }
  return out;
}

// Dense left-regular representation on the canonical blade basis, built with
// the naive product: column j holds the coordinates of x * basis_j.
inline RationalMatrix left_regular_matrix(const Multivector& x) {
  std::vector<Blade> basis = spinideal::all_blades(x.sig());
  std::map<std::uint32_t, int> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i].mask()] = static_cast<int>(i);

  int n = static_cast<int>(basis.size());
  RationalMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    Multivector image = naive_mv_mul(x, Multivector::from_blade(x.sig(), basis[j]));
    for (const auto& [b, c] : image.terms()) {
      m.at(column.at(b.mask()), j) = c;
    }
  }
  return m;
}

inline Multivector random_multivector(const Signature& sig, std::mt19937& rng, int max_terms = 6) {
  std::uniform_int_distribution<std::uint32_t> mask_dist(0, (1u << sig.dim()) - 1);
  std::uniform_int_distribution<int> num_dist(-9, 9);
  std::uniform_int_distribution<int> den_pick(0, 2);
  std::uniform_int_distribution<int> count_dist(0, max_terms);
  static const int dens[3] = {1, 2, 4};

  Multivector out(sig);
  int terms = count_dist(rng);
  for (int t = 0; t < terms; ++t) {
    out.add_term(Blade::from_mask(mask_dist(rng)), Rational(num_dist(rng), dens[den_pick(rng)]));
  }
  return out;
}

}  // namespace oracle
