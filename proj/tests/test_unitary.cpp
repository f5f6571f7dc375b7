#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "fixtures_u3.hpp"
#include "spinideal/errors.hpp"
#include "spinideal/unitary.hpp"

using namespace spinideal;

namespace {

Blade bl(std::initializer_list<int> indices) { return Blade::from_indices(indices); }

// Independent construction of omega^m/m!: the sum over ascending m-subsets
// {i_1 < ... < i_m} of the canonical image of e^{i_1} ^ e^{i_1+n} ^ ...,
// with the sign computed from the sorting permutation of the paired sequence.
Multivector paired_subset_sum(int n, int m) {
  Signature carrier(n, n);
  Multivector out(carrier);
  std::vector<int> subset(m);
  auto emit = [&](const std::vector<int>& chosen) {
    std::vector<int> sequence;
    for (int i : chosen) {
      sequence.push_back(i);
      sequence.push_back(i + n);
    }
    int sign = permutation_sign(sequence);
    std::sort(sequence.begin(), sequence.end());
    out.add_term(Blade::from_indices(sequence), sign);
  };
  // iterate ascending subsets
  std::vector<int> stack;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(stack.size()) == m) {
      emit(stack);
      return;
    }
    for (int i = next; i <= n; ++i) {
      stack.push_back(i);
      rec(i + 1);
      stack.pop_back();
    }
  };
  rec(1);
  (void)subset;
  return out;
}

}  // namespace

TEST_CASE("standard structure") {
  UnitaryStructure s3 = standard_structure(3);
  Multivector expected(Signature(3, 3));
  expected.add_term(bl({1, 4}), 1);
  expected.add_term(bl({2, 5}), 1);
  expected.add_term(bl({3, 6}), 1);
  CHECK(s3.omega == expected);

  UnitaryStructure s1 = standard_structure(1);
  CHECK(s1.omega == Multivector::from_blade(Signature(1, 1), bl({1, 2})));
  CHECK(s1.J.at(0, 1) == -1);
  CHECK(s1.J.at(1, 0) == 1);

  for (int n = 1; n <= 4; ++n) {
    UnitaryStructure s = standard_structure(n);
    RationalMatrix identity = RationalMatrix::identity(2 * n);
    RationalMatrix minus_identity(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i) minus_identity.at(i, i) = -1;
    CHECK(s.J * s.J == minus_identity);
    CHECK(s.J.transpose() * s.J == identity);
    CHECK(omega_gram(s.omega, 2 * n) == s.J.transpose());
  }
}

TEST_CASE("kahler powers") {
  Multivector omega3 = standard_kahler_form(3);
  Multivector sq = kahler_power(omega3, 3, 2);
  Multivector expected(Signature(3, 3));
  expected.add_term(bl({1, 2, 4, 5}), -1);
  expected.add_term(bl({1, 3, 4, 6}), -1);
  expected.add_term(bl({2, 3, 5, 6}), -1);
  CHECK(sq == expected);

  CHECK(kahler_power(omega3, 3, 0) == Multivector::scalar(Signature(3, 3), 1));

  Multivector omega2 = standard_kahler_form(2);
  Multivector top = kahler_power(omega2, 2, 2);
  CHECK(top.term_count() == 1);
  CHECK(top.coeff(bl({1, 2, 3, 4})) == -1);  // +1 in paired order (1,3,2,4)

  CHECK_THROWS(kahler_power(omega2, 2, 3));
}

TEST_CASE("kahler powers match the paired-subset construction") {
  for (int n = 1; n <= 6; ++n) {
    Multivector omega = standard_kahler_form(n);
    for (int m = 0; m <= n; ++m) {
      CHECK(kahler_power(omega, n, m) == paired_subset_sum(n, m));
    }
  }
}

TEST_CASE("kahler polynomial is all-one in paired order") {
  for (int n = 1; n <= 6; ++n) {
    Multivector poly = kahler_polynomial(n);
    CHECK(poly.term_count() == (1u << n));
    for (const auto& [b, c] : poly.terms()) {
      // decompose the blade into pairs {i, i+n} and compute the paired-order sign
      std::vector<int> firsts;
      for (int i : b.indices()) {
        if (i <= n) firsts.push_back(i);
      }
      CHECK(static_cast<int>(2 * firsts.size()) == b.grade());
      std::vector<int> sequence;
      for (int i : firsts) {
        CHECK(b.contains(i + n));
        sequence.push_back(i);
        sequence.push_back(i + n);
      }
      int sign = permutation_sign(sequence);
      CHECK(c == Rational(sign));  // +1 coefficient in paired index order
    }
  }
}

TEST_CASE("rational kahler polynomial") {
  CHECK(rational_kahler_polynomial(3) == kahler_polynomial(3).scaled(Rational(1, 8)));

  Multivector p1 = rational_kahler_polynomial(1);
  Multivector expected1(Signature(1, 1));
  expected1.add_term(Blade::scalar(), Rational(1, 2));
  expected1.add_term(bl({1, 2}), Rational(1, 2));
  CHECK(p1 == expected1);

  Multivector p2 = rational_kahler_polynomial(2);
  Multivector expected2(Signature(2, 2));
  expected2.add_term(Blade::scalar(), Rational(1, 4));
  expected2.add_term(bl({1, 3}), Rational(1, 4));
  expected2.add_term(bl({2, 4}), Rational(1, 4));
  expected2.add_term(bl({1, 2, 3, 4}), Rational(-1, 4));
  CHECK(p2 == expected2);
}

TEST_CASE("induced idempotents reproduce the reference bases") {
  struct Case {
    Signature sig;
    const std::vector<fixtures::BasisLine>& lines;
    int dim;
    DivisionType type;
  };
  std::vector<Case> cases{{Signature(3, 3), fixtures::u3_r33(), 8, DivisionType::Real},
                          {Signature(3, 4), fixtures::u3_r34(), 16, DivisionType::Complex},
                          {Signature(3, 5), fixtures::u3_r35(), 32, DivisionType::Quaternion}};
  for (const Case& c : cases) {
    IdempotentReport report = induce_idempotent(3, c.sig);
    CHECK(report.is_idempotent);
    CHECK(report.is_primitive);
    CHECK(report.ideal_dim == c.dim);
    CHECK(report.division_type == c.type);
    REQUIRE(report.ideal_basis.size() == c.lines.size());

    // same label set, and every labeled vector matches term-for-term
    std::map<std::uint32_t, Multivector> expected;
    for (const auto& line : c.lines) {
      expected.emplace(fixtures::load_label(line).mask(), fixtures::load_line(line, c.sig));
    }
    for (std::size_t i = 0; i < report.ideal_basis.size(); ++i) {
      auto it = expected.find(report.ideal_basis_labels[i].mask());
      REQUIRE(it != expected.end());
      CHECK(report.ideal_basis[i] == it->second);
    }
  }
}

TEST_CASE("induce_idempotent rejects other targets") {
  CHECK_THROWS_AS(induce_idempotent(3, Signature(3, 6)), UnsupportedSignature);
  CHECK_THROWS_AS(induce_idempotent(3, Signature(4, 4)), UnsupportedSignature);
  CHECK_THROWS_AS(induce_idempotent(0, Signature(1, 1)), Error);
}

TEST_CASE("quantized polynomial equals the factored pair product up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int extra = 0; extra <= 2; ++extra) {
      Signature sig(n, n + extra);
      Multivector f = embed(rational_kahler_polynomial(n), sig, identity_placement(2 * n));
      std::vector<Blade> pairs;
      for (int j = 1; j <= n; ++j) pairs.push_back(bl({j, n + j}));
      CHECK(f == build_idempotent(sig, pairs));
    }
  }
}

TEST_CASE("the SU structure induces the same idempotent") {
  // same Kahler form, same rational polynomial, same quantized image
  IdempotentReport u = induce_idempotent(2, Signature(2, 2));
  Multivector su = embed(rational_kahler_polynomial(2), Signature(2, 2), identity_placement(4));
  CHECK(u.f == su);
}

TEST_CASE("recover_structure round trips") {
  for (int n = 1; n <= 4; ++n) {
    for (int extra = 0; extra <= 2; ++extra) {
      Signature sig(n, n + extra);
      IdempotentReport report = induce_idempotent(n, sig);
      UnitaryStructure got = recover_structure(sig, report.f);
      UnitaryStructure expected = standard_structure(n);
      CHECK(got.omega == expected.omega);
      CHECK(got.J == expected.J);
    }
  }
}

TEST_CASE("recover_structure rejections") {
  Signature s33(3, 3);
  CHECK_THROWS_AS(recover_structure(s33, Multivector::zero(s33)), NotAKahlerIdempotent);
  CHECK_THROWS_AS(recover_structure(s33, Multivector::scalar(s33, 1)), NotAKahlerIdempotent);
  CHECK_THROWS_AS(recover_structure(Signature(2, 5), Multivector::zero(Signature(2, 5))),
                  UnsupportedSignature);

  // wrong coefficient
  Multivector bad(s33);
  bad.add_term(bl({1, 4}), Rational(1, 4));
  bad.add_term(bl({2, 5}), Rational(1, 8));
  bad.add_term(bl({3, 6}), Rational(1, 8));
  CHECK_THROWS_AS(recover_structure(s33, bad), NotAKahlerIdempotent);

  // grade-2 support beyond the first 2p generators
  Signature s34(3, 4);
  Multivector outside = induce_idempotent(3, s34).f;
  outside.add_term(bl({1, 7}), Rational(1, 8));
  CHECK_THROWS_AS(recover_structure(s34, outside), NotAKahlerIdempotent);
}

TEST_CASE("recovery by projection, worked cases") {
  ProjectionDecomposition d52 = recover_by_projection(Signature(5, 2));
  CHECK(d52.pairs == std::vector<std::pair<int, int>>{{1, 6}, {2, 7}});
  REQUIRE(d52.extra_generators.size() == 1);
  CHECK(d52.extra_generators[0] == bl({3}));
  CHECK(d52.h_report.k == 3);
  CHECK(d52.h_report.is_idempotent);
  CHECK(d52.h_report.is_primitive);
  CHECK(d52.h_report.ideal_dim == 16);
  CHECK(d52.splitting_verified);
  Multivector expected_h = build_idempotent(Signature(5, 2), {bl({1, 6}), bl({2, 7}), bl({3})});
  CHECK(d52.h == expected_h);
  CHECK(d52.subalgebra.members == std::vector<int>{1, 2, 6, 7});

  ProjectionDecomposition d25 = recover_by_projection(Signature(2, 5));
  CHECK(d25.pairs == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  REQUIRE(d25.extra_generators.size() == 1);
  CHECK(d25.extra_generators[0] == bl({5, 6, 7}));
  CHECK(d25.splitting_verified);
  CHECK(d25.h_report.is_primitive);

  ProjectionDecomposition d14 = recover_by_projection(Signature(1, 4));
  CHECK(d14.pairs == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(d14.h_report.k == 2);
  REQUIRE(d14.extra_generators.size() == 1);
  CHECK(d14.extra_generators[0] == bl({3, 4, 5}));
  CHECK(d14.splitting_verified);
  CHECK(d14.h_report.is_primitive);
}

TEST_CASE("projection restricted to the paired subalgebra is the Kahler polynomial") {
  for (Signature sig : {Signature(5, 2), Signature(2, 5), Signature(1, 4), Signature(4, 3)}) {
    ProjectionDecomposition d = recover_by_projection(sig);
    int m = static_cast<int>(d.pairs.size());
    RestrictedForm r = restrict_symbol(symbolize(d.f_tilde), d.subalgebra);
    CHECK(r.form == kahler_polynomial(m));
  }
}

TEST_CASE("recover_by_projection rejects excluded signatures") {
  CHECK_THROWS_AS(recover_by_projection(Signature(3, 3)), UnsupportedSignature);
  CHECK_THROWS_AS(recover_by_projection(Signature(3, 4)), UnsupportedSignature);
  CHECK_THROWS_AS(recover_by_projection(Signature(3, 5)), UnsupportedSignature);
  CHECK_THROWS_AS(recover_by_projection(Signature(0, 3)), UnsupportedSignature);
  CHECK_THROWS_AS(recover_by_projection(Signature(3, 0)), UnsupportedSignature);
}

TEST_CASE("unitary membership") {
  CHECK(is_unitary_member(3, RationalMatrix::identity(6)));
  UnitaryStructure s3 = standard_structure(3);
  CHECK(is_unitary_member(3, s3.J));

  RationalMatrix reflect = RationalMatrix::identity(6);
  reflect.at(5, 5) = -1;
  CHECK_FALSE(is_unitary_member(3, reflect));

  CHECK_THROWS_AS(is_unitary_member(3, RationalMatrix::identity(4)), DimensionMismatch);
}
