#include "spinideal/multivector.hpp"

#include "spinideal/errors.hpp"

namespace spinideal {

namespace {

void require_same_signature(const Multivector& x, const Multivector& y) {
  if (!(x.sig() == y.sig())) {
    throw SignatureMismatch("operands have signatures (" + std::to_string(x.sig().p) + "," +
                            std::to_string(x.sig().q) + ") and (" + std::to_string(y.sig().p) +
                            "," + std::to_string(y.sig().q) + ")");
  }
}

}  // namespace

void Multivector::add_term(Blade b, const Rational& c) {
  if (!blade_valid_for(sig_, b)) {
    throw Error("blade index exceeds signature dimension " + std::to_string(sig_.dim()));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Multivector Multivector::operator+(const Multivector& rhs) const {
  require_same_signature(*this, rhs);
  Multivector out = *this;
  for (const auto& [b, c] : rhs.terms_) out.add_term(b, c);
  return out;
}

Multivector Multivector::operator-(const Multivector& rhs) const {
  require_same_signature(*this, rhs);
  Multivector out = *this;
  for (const auto& [b, c] : rhs.terms_) out.add_term(b, -c);
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out(sig_);
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
  return out;
}

Multivector Multivector::scaled(const Rational& c) const {
  Multivector out(sig_);
  if (c == 0) return out;
  for (const auto& [b, coeff] : terms_) out.terms_.emplace(b, coeff * c);
  return out;
}

Multivector Multivector::operator*(const Multivector& rhs) const { return mv_mul(*this, rhs); }

Multivector mv_mul(const Multivector& x, const Multivector& y) {
  require_same_signature(x, y);
  Multivector out(x.sig());
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      SignedBlade prod = mul_blades(x.sig(), bx, by);
      Rational c = cx * cy;
      out.add_term(prod.blade, prod.sign > 0 ? c : Rational(-c));
    }
  }
  return out;
}

Multivector mv_wedge(const Multivector& x, const Multivector& y) {
  require_same_signature(x, y);
  Multivector out(x.sig());
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      SignedBlade prod = wedge_blades(bx, by);
      if (prod.sign == 0) continue;
      Rational c = cx * cy;
      out.add_term(prod.blade, prod.sign > 0 ? c : Rational(-c));
    }
  }
  return out;
}

Multivector grade_project(const Multivector& x, int k) {
  Multivector out(x.sig());
  for (const auto& [b, c] : x.terms()) {
    if (b.grade() == k) out.add_term(b, c);
  }
  return out;
}

Multivector pseudoscalar(const Signature& sig) {
  return Multivector::from_blade(sig, Blade::from_mask((1u << sig.dim()) - 1u));
}

std::uint32_t support_mask(const Multivector& x) {
  std::uint32_t m = 0;
  for (const auto& [b, c] : x.terms()) m |= b.mask();
  return m;
}

}  // namespace spinideal
