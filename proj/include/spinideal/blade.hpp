#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "spinideal/errors.hpp"

namespace spinideal {

// Hard cap on the number of generators: keeps every full-basis enumeration
// (2^{p+q} blades) comfortably in range and lets a blade live in one word.
inline constexpr int kMaxGenerators = 16;

// Signature (p,q) of a real Clifford algebra: generators e_1..e_p square to
// +1, generators e_{p+1}..e_{p+q} square to -1.
struct Signature {
  int p = 0;
  int q = 0;

  Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || p + q < 1 || p + q > kMaxGenerators) {
      throw UnsupportedSignature("signature (" + std::to_string(p) + "," +
                                 std::to_string(q) + ") out of range: need p,q >= 0 and 1 <= p+q <= " +
                                 std::to_string(kMaxGenerators));
    }
  }

  int dim() const { return p + q; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Canonical basis monomial e_{i1}...e_{ik} with strictly increasing indices,
// stored as a bitmask (bit i-1 set iff generator i occurs). The empty mask is
// the scalar blade 1.
class Blade {
 public:
  Blade() = default;

  static Blade scalar() { return Blade(); }

  static Blade from_mask(std::uint32_t mask) {
    if (mask >= (1u << kMaxGenerators)) {
      throw Error("blade mask out of range");
    }
    return Blade(mask);
  }

  // Indices must be strictly increasing and within [1, kMaxGenerators].
  static Blade from_indices(const std::vector<int>& indices) {
    std::uint32_t mask = 0;
    int prev = 0;
    for (int i : indices) {
      if (i < 1 || i > kMaxGenerators) {
        throw Error("blade index " + std::to_string(i) + " out of range");
      }
      if (i <= prev) {
        throw Error("blade indices must be strictly increasing");
      }
      mask |= 1u << (i - 1);
      prev = i;
    }
    return Blade(mask);
  }

  std::uint32_t mask() const { return mask_; }
  int grade() const { return std::popcount(mask_); }
  bool is_scalar() const { return mask_ == 0; }
  bool contains(int index) const { return (mask_ >> (index - 1)) & 1u; }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(grade()));
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m) + 1);
    }
    return out;
  }

  friend bool operator==(const Blade&, const Blade&) = default;

 private:
  explicit Blade(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

// Canonical blade order: by grade, then lexicographically on the ascending
// index sequence. For equal grades the lexicographically smaller blade is the
// one containing the smallest index in the symmetric difference.
inline bool canonical_less(Blade a, Blade b) {
  int ga = a.grade();
  int gb = b.grade();
  if (ga != gb) return ga < gb;
  std::uint32_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  std::uint32_t low = diff & (~diff + 1u);
  return (a.mask() & low) != 0;
}

struct CanonicalBladeLess {
  bool operator()(Blade a, Blade b) const { return canonical_less(a, b); }
};

struct SignedBlade {
  int sign = 0;  // +1 or -1; 0 only for a vanishing wedge
  Blade blade;
};

inline bool blade_valid_for(const Signature& sig, Blade b) {
  return (b.mask() >> sig.dim()) == 0;
}

// Parity of the transpositions needed to merge the (already sorted) index
// sequences of a and b: counts pairs i in a, j in b with i > j.
inline int merge_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t t = a >> 1; t != 0; t >>= 1) {
    swaps += std::popcount(t & b);
  }
  return (swaps & 1) ? -1 : 1;
}

// Geometric product of two canonical blades. The resulting index set is the
// symmetric difference; the sign combines transposition parity with the
// square of every shared generator (+1 for index <= p, -1 above).
inline SignedBlade mul_blades(const Signature& sig, Blade a, Blade b) {
  int sign = merge_sign(a.mask(), b.mask());
  std::uint32_t shared = a.mask() & b.mask();
  std::uint32_t negative_shared = shared >> sig.p;
  if (std::popcount(negative_shared) & 1) sign = -sign;
  return {sign, Blade::from_mask(a.mask() ^ b.mask())};
}

// Exterior product of two canonical blades: zero on overlapping supports,
// otherwise the signed disjoint union (no metric contribution).
inline SignedBlade wedge_blades(Blade a, Blade b) {
  if ((a.mask() & b.mask()) != 0) return {0, Blade::scalar()};
  return {merge_sign(a.mask(), b.mask()), Blade::from_mask(a.mask() | b.mask())};
}

inline bool blades_commute(const Signature& sig, Blade a, Blade b) {
  return mul_blades(sig, a, b).sign == mul_blades(sig, b, a).sign;
}

// All 2^{p+q} canonical blades in canonical order.
std::vector<Blade> all_blades(const Signature& sig);

// Sign of the permutation sorting `indices` ascending; 0 if any index repeats.
int permutation_sign(const std::vector<int>& indices);

}  // namespace spinideal
