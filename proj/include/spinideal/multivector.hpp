#pragma once

#include <map>
#include <vector>

#include "spinideal/blade.hpp"
#include "spinideal/rational.hpp"

namespace spinideal {

// Finite mapping from canonical blades to exact rational coefficients. The
// same carrier serves elements of R_{p,q} and exterior forms on (R^{p+q})*;
// which algebra is meant is a convention of the operation applied. Terms with
// coefficient zero are never stored, and the map is kept in canonical blade
// order so iteration and serialization are deterministic.
class Multivector {
 public:
  using TermMap = std::map<Blade, Rational, CanonicalBladeLess>;

  explicit Multivector(const Signature& sig) : sig_(sig) {}

  static Multivector zero(const Signature& sig) { return Multivector(sig); }

  static Multivector scalar(const Signature& sig, const Rational& value) {
    Multivector out(sig);
    out.add_term(Blade::scalar(), value);
    return out;
  }

  static Multivector from_blade(const Signature& sig, Blade b, const Rational& coeff = 1) {
    Multivector out(sig);
    out.add_term(b, coeff);
    return out;
  }

  const Signature& sig() const { return sig_; }
  const TermMap& terms() const { return terms_; }

  Rational coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Accumulates into the given blade's coefficient, dropping it when the sum
  // is zero.
  void add_term(Blade b, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Multivector operator+(const Multivector& rhs) const;
  Multivector operator-(const Multivector& rhs) const;
  Multivector operator-() const;
  Multivector operator*(const Multivector& rhs) const;  // geometric product
  Multivector scaled(const Rational& c) const;

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  Signature sig_;
  TermMap terms_;
};

// Bilinear extension of the blade geometric product.
Multivector mv_mul(const Multivector& x, const Multivector& y);

// Bilinear extension of the exterior blade product.
Multivector mv_wedge(const Multivector& x, const Multivector& y);

// Keeps exactly the terms whose blade grade equals k.
Multivector grade_project(const Multivector& x, int k);

// The top blade e_1...e_{p+q} with coefficient 1.
Multivector pseudoscalar(const Signature& sig);

// Union of the index supports of all terms.
std::uint32_t support_mask(const Multivector& x);

}  // namespace spinideal
