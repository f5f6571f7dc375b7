#include "spinideal/unitary.hpp"

#include <algorithm>

#include "spinideal/errors.hpp"

namespace spinideal {

Multivector standard_kahler_form(int n) {
  if (n < 1) throw Error("complex dimension must be at least 1");
  Signature carrier(n, n);
  Multivector omega(carrier);
  for (int j = 1; j <= n; ++j) {
    omega.add_term(Blade::from_indices({j, n + j}), 1);
  }
  return omega;
}

UnitaryStructure standard_structure(int n) {
  Multivector omega = standard_kahler_form(n);
  RationalMatrix j(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    j.at(n + k, k) = 1;   // J e_k = e_{k+n}
    j.at(k, n + k) = -1;  // J e_{k+n} = -e_k
  }
  return {n, std::move(j), std::move(omega)};
}

Multivector kahler_power(const Multivector& omega, int n, int m) {
  if (m < 0 || m > n) throw Error("kahler power requires 0 <= m <= n");
  Multivector acc = Multivector::scalar(omega.sig(), 1);
  for (int i = 0; i < m; ++i) acc = mv_wedge(acc, omega);
  return acc.scaled(Rational(1) / Rational(factorial(m)));
}

Multivector kahler_polynomial(int n) {
  Multivector omega = standard_kahler_form(n);
  Multivector sum = Multivector::zero(omega.sig());
  for (int m = 0; m <= n; ++m) sum = sum + kahler_power(omega, n, m);
  return sum;
}

Multivector rational_kahler_polynomial(int n) {
  return kahler_polynomial(n).scaled(half_power(n));
}

namespace {

void require_induced_target(int n, const Signature& target) {
  if (n < 1) throw Error("complex dimension must be at least 1");
  bool ok = target.p == n && (target.q == n || target.q == n + 1 || target.q == n + 2);
  if (!ok) {
    throw UnsupportedSignature("target must be one of (" + std::to_string(n) + "," +
                               std::to_string(n) + "), (" + std::to_string(n) + "," +
                               std::to_string(n + 1) + "), (" + std::to_string(n) + "," +
                               std::to_string(n + 2) + ")");
  }
}

std::vector<Blade> pair_blades(int n) {
  std::vector<Blade> out;
  for (int j = 1; j <= n; ++j) out.push_back(Blade::from_indices({j, n + j}));
  return out;
}

}  // namespace

IdempotentReport induce_idempotent(int n, const Signature& target) {
  require_induced_target(n, target);
  Multivector f = embed(rational_kahler_polynomial(n), target, identity_placement(2 * n));
  std::vector<Blade> generators = pair_blades(n);
  Multivector factored = build_idempotent(target, generators);
  if (!(f == factored)) {
    throw Error("quantized Kahler polynomial does not match its factored form");
  }
  return verify_idempotent(target, f, generators);
}

UnitaryStructure recover_structure(const Signature& sig, const Multivector& f) {
  int p = sig.p;
  if (!(sig.q == p || sig.q == p + 1 || sig.q == p + 2) || p < 1) {
    throw UnsupportedSignature("recovery requires signature (p,p), (p,p+1) or (p,p+2)");
  }
  if (!(f.sig() == sig)) throw SignatureMismatch("idempotent has a different signature");

  Multivector scaled_two = grade_project(f, 2).scaled(Rational(pow2(p)));

  std::vector<int> members;
  for (int i = 1; i <= 2 * p; ++i) members.push_back(i);
  GeneratorSubset a = GeneratorSubset::make(sig, members);
  if ((support_mask(scaled_two) & ~a.mask()) != 0) {
    throw NotAKahlerIdempotent("grade-2 part has support outside the first 2p generators");
  }
  Multivector omega = restrict_symbol(scaled_two, a).form;

  if (static_cast<int>(omega.term_count()) != p) {
    throw NotAKahlerIdempotent("scaled grade-2 part must consist of exactly p blades");
  }
  std::uint32_t covered = 0;
  for (const auto& [b, c] : omega.terms()) {
    if (c != 1) throw NotAKahlerIdempotent("grade-2 coefficients must all be +1 after scaling");
    if ((covered & b.mask()) != 0) {
      throw NotAKahlerIdempotent("grade-2 blades must be pairwise disjoint");
    }
    covered |= b.mask();
  }

  // J^T = Gram(omega) under the standard metric.
  RationalMatrix j = omega_gram(omega, 2 * p).transpose();
  return {p, std::move(j), std::move(omega)};
}

ProjectionDecomposition recover_by_projection(const Signature& sig) {
  if (sig.p < 1 || sig.q < 1 || sig.p == sig.q || sig.q == sig.p + 1 || sig.q == sig.p + 2) {
    throw UnsupportedSignature(
        "projection recovery requires p != q, p,q >= 1 and q not in {p+1, p+2}");
  }

  int m = std::min(sig.p, sig.q);
  std::vector<std::pair<int, int>> pairs;
  std::vector<Blade> seed;
  Multivector f_tilde = Multivector::scalar(sig, 1);
  Multivector omega_tilde(sig);
  std::uint32_t paired_mask = 0;
  for (int j = 1; j <= m; ++j) {
    pairs.emplace_back(j, sig.p + j);
    Blade pair = Blade::from_indices({j, sig.p + j});
    seed.push_back(pair);
    paired_mask |= pair.mask();
    omega_tilde.add_term(pair, 1);
    Multivector factor = Multivector::scalar(sig, 1);
    factor.add_term(pair, 1);
    f_tilde = mv_mul(f_tilde, factor);
  }

  std::vector<int> complement;
  for (int i = 1; i <= sig.dim(); ++i) {
    if ((paired_mask & (1u << (i - 1))) == 0) complement.push_back(i);
  }
  GeneratorSubset support = GeneratorSubset::make(sig, complement);

  std::vector<Blade> full = find_generators(sig, seed, support);
  std::vector<Blade> extras(full.begin() + static_cast<std::ptrdiff_t>(seed.size()), full.end());

  Multivector e = build_idempotent(sig, extras);
  Multivector h = mv_mul(f_tilde, e).scaled(half_power(m));

  IdempotentReport report = verify_idempotent(sig, h, full);

  // sigma*(h) must split as P^Q(omega_tilde) ^ sigma*(e): the supports of the
  // two factors are disjoint, so the symbol map preserves this product.
  Multivector kahler_sum = Multivector::zero(sig);
  for (int k = 0; k <= m; ++k) kahler_sum = kahler_sum + kahler_power(omega_tilde, m, k);
  Multivector rational_kahler = kahler_sum.scaled(half_power(m));
  bool splitting = (symbolize(h) == mv_wedge(rational_kahler, symbolize(e)));

  std::vector<int> paired_members;
  for (int i = 1; i <= sig.dim(); ++i) {
    if (paired_mask & (1u << (i - 1))) paired_members.push_back(i);
  }
  GeneratorSubset subalgebra = GeneratorSubset::make(sig, paired_members);

  return {sig,
          std::move(pairs),
          std::move(f_tilde),
          std::move(extras),
          std::move(e),
          std::move(h),
          std::move(omega_tilde),
          std::move(subalgebra),
          std::move(report),
          splitting};
}

RationalMatrix omega_gram(const Multivector& omega, int dim) {
  RationalMatrix gram(dim, dim);
  for (const auto& [b, c] : omega.terms()) {
    if (b.grade() != 2) throw Error("omega_gram expects a pure 2-form");
    std::vector<int> idx = b.indices();
    gram.at(idx[0] - 1, idx[1] - 1) = c;
    gram.at(idx[1] - 1, idx[0] - 1) = -c;
  }
  return gram;
}

bool is_unitary_member(int n, const RationalMatrix& m) {
  if (m.rows() != 2 * n || m.cols() != 2 * n) {
    throw DimensionMismatch("expected a " + std::to_string(2 * n) + "x" + std::to_string(2 * n) +
                            " matrix");
  }
  RationalMatrix mt = m.transpose();
  if (!(mt * m == RationalMatrix::identity(2 * n))) return false;
  RationalMatrix gram = omega_gram(standard_kahler_form(n), 2 * n);
  return mt * gram * m == gram;
}

}  // namespace spinideal
