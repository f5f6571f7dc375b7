#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinideal/maps.hpp"
#include "spinideal/multivector.hpp"

namespace spinideal {

// Radon-Hurwitz number r_i, defined for every integer by
//   r_0=0, r_1=1, r_2=2, r_3=2, r_j=3 for 4<=j<=7, r_{i+8}=r_i+4 (i>=0),
//   r_{-1}=-1, r_{-i}=1-i+r_{i-2} for i>=2.
int radon_hurwitz(int i);

// k = q - r_{q-p}: the number of commuting involutions generating a
// primitive idempotent of R_{p,q}.
int involution_count(const Signature& sig);

enum class MatrixBase { R, C, H, RplusR, HplusH };

struct MatrixType {
  MatrixBase base = MatrixBase::R;
  int size = 1;  // N for K(N) (per summand when base is a sum)

  // Real dimension of the underlying division ring (1, 2, or 4).
  int division_dim() const;
  // Real dimension of a minimal left ideal; for sum types, of one simple
  // summand.
  int minimal_ideal_dim() const { return size * division_dim(); }
  // Real dimension of the whole matrix algebra.
  int real_dim() const;
  std::string str() const;  // e.g. "C(8)", "R(8)+R(8)"

  friend bool operator==(const MatrixType&, const MatrixType&) = default;
};

// Matrix-algebra type of R_{p,q}, determined by (q-p) mod 8.
MatrixType classify(const Signature& sig);

enum class DivisionType { Real, Complex, Quaternion };

std::string division_type_str(DivisionType t);

struct IdempotentReport {
  Multivector f;
  std::vector<Blade> generators;  // construction route, if known
  int k = 0;
  bool is_idempotent = false;
  bool is_primitive = false;
  int ideal_dim = 0;
  std::optional<DivisionType> division_type;
  std::vector<Blade> ideal_basis_labels;  // blade b for each basis element b*f
  std::vector<Multivector> ideal_basis;
};

// Expanded product of (1+B_i)/2 over the generator blades. Each generator
// must square to +1 and they must commute pairwise; a set whose generated
// subgroup contains -1 is accepted and yields the zero element.
Multivector build_idempotent(const Signature& sig, const std::vector<Blade>& generators);

// Full verification report: idempotency, ideal dimension (rank of the left
// ideal spanned by all blade multiples), primitivity against the minimal
// ideal dimension of classify(sig), division type of f R f, and the greedy
// ideal basis in canonical blade order.
IdempotentReport verify_idempotent(const Signature& sig, const Multivector& f);
IdempotentReport verify_idempotent(const Signature& sig, const Multivector& f,
                                   const std::vector<Blade>& generators);

// Basis of the subspace {f b f : b canonical blade}, f first.
std::vector<Multivector> division_ring_basis(const Signature& sig, const Multivector& f);

// True iff i,j,k satisfy the quaternion table over the idempotent f:
// i^2 = j^2 = k^2 = -f, ij = k, jk = i, ki = j, ji = -k, kj = -i, ik = -j.
bool quaternion_relations_check(const Signature& sig, const Multivector& f,
                                const Multivector& qi, const Multivector& qj,
                                const Multivector& qk);

// Extends `seed` to exactly k = involution_count(sig) blades by backtracking
// over canonical blades supported in `support` (grade, then lexicographic
// order; first valid extension wins). Every chosen blade squares to +1,
// commutes with all others, and the masks stay XOR-independent, which is
// equivalent to the generated subgroup having order 2^k and avoiding -1.
std::vector<Blade> find_generators(const Signature& sig, const std::vector<Blade>& seed,
                                   const GeneratorSubset& support);

}  // namespace spinideal
