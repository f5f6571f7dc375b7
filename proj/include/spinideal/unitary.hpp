#pragma once

#include <utility>
#include <vector>

#include "spinideal/ideals.hpp"
#include "spinideal/maps.hpp"
#include "spinideal/multivector.hpp"
#include "spinideal/ratlinalg.hpp"

namespace spinideal {

// The data (J, omega) of a U(n)-structure on R^{2n} with the standard inner
// product. Forms over R^{2n} are carried with signature (n,n) so that a form
// recovered from a Clifford element and a freshly constructed one compare
// equal.
struct UnitaryStructure {
  int n;
  RationalMatrix J;    // 2n x 2n, J^2 = -I, J^T J = I
  Multivector omega;   // grade-2 form, Gram(omega) = J^T
};

// The standard structure: J e_k = e_{k+n}, J e_{k+n} = -e_k,
// omega_0 = sum_j e^j ^ e^{n+j}.
UnitaryStructure standard_structure(int n);

Multivector standard_kahler_form(int n);

// omega^m divided exactly by m!; omega^0 is 1. Requires 0 <= m <= n.
Multivector kahler_power(const Multivector& omega, int n, int m);

// P(omega_0) = sum_{m=0}^{n} omega_0^m / m!: exactly 2^n terms, every
// coefficient +1 when the term is written in paired index order.
Multivector kahler_polynomial(int n);

// P(omega_0) / 2^n.
Multivector rational_kahler_polynomial(int n);

// Quantizes the rational Kahler polynomial into the target algebra (one of
// (n,n), (n,n+1), (n,n+2)), checks it equals the factored product of the pair
// involutions (1 + e_j e_{n+j})/2, and returns the verification report.
IdempotentReport induce_idempotent(int n, const Signature& target);

// Reads the U(p)-structure back off an idempotent of R_{p,p}, R_{p,p+1} or
// R_{p,p+2}: omega = sigma*(<2^p f>_2) restricted to the subalgebra on
// generators 1..2p, J from the Gram relation. The scaled grade-2 part must be
// a sum of p pairwise-disjoint 2-blades with coefficient +1.
UnitaryStructure recover_structure(const Signature& sig, const Multivector& f);

struct ProjectionDecomposition {
  Signature sig;
  std::vector<std::pair<int, int>> pairs;  // (j, p+j) for j = 1..min(p,q)
  Multivector f_tilde;                     // product of (1 + e_pair), unnormalized
  std::vector<Blade> extra_generators;
  Multivector e;            // product of (1 + extra)/2
  Multivector h;            // f_tilde * e / 2^m, the primitive idempotent
  Multivector omega_tilde;  // sum of pair 2-blades, an ambient 2-form
  GeneratorSubset subalgebra;
  IdempotentReport h_report;
  bool splitting_verified = false;  // sigma*(h) == P^Q(omega_tilde) ^ sigma*(e)
};

// For p != q, p,q >= 1 and q not in {p+1, p+2}: builds the factor f_tilde
// from the pair involutions e_j e_{p+j}, completes it to a primitive
// idempotent with extra generators found in the complementary support, and
// checks the exterior splitting exactly.
ProjectionDecomposition recover_by_projection(const Signature& sig);

// Gram matrix of a 2-form over R^dim: entry (i,j) is omega(e_i, e_j).
RationalMatrix omega_gram(const Multivector& omega, int dim);

// Membership test for U(n) = O(2n) and Sp(2n) simultaneously:
// M^T M = I and M^T Omega M = Omega with Omega = Gram(omega_0).
bool is_unitary_member(int n, const RationalMatrix& m);

}  // namespace spinideal
