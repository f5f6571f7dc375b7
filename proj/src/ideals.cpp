#include "spinideal/ideals.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "spinideal/errors.hpp"
#include "spinideal/ratlinalg.hpp"

namespace spinideal {

int radon_hurwitz(int i) {
  static std::map<int, int> table;
  auto it = table.find(i);
  if (it != table.end()) return it->second;

  int value;
  if (i >= 0 && i <= 7) {
    static constexpr int base[8] = {0, 1, 2, 2, 3, 3, 3, 3};
    value = base[i];
  } else if (i >= 8) {
    value = radon_hurwitz(i - 8) + 4;
  } else if (i == -1) {
    value = -1;
  } else {  // i <= -2
    value = 1 + i + radon_hurwitz(-i - 2);
  }
  table[i] = value;
  return value;
}

int involution_count(const Signature& sig) { return sig.q - radon_hurwitz(sig.q - sig.p); }

int MatrixType::division_dim() const {
  switch (base) {
    case MatrixBase::R:
    case MatrixBase::RplusR:
      return 1;
    case MatrixBase::C:
      return 2;
    case MatrixBase::H:
    case MatrixBase::HplusH:
      return 4;
  }
  return 1;
}

int MatrixType::real_dim() const {
  int simple = size * size * division_dim();
  return (base == MatrixBase::RplusR || base == MatrixBase::HplusH) ? 2 * simple : simple;
}

std::string MatrixType::str() const {
  std::string n = std::to_string(size);
  switch (base) {
    case MatrixBase::R:
      return "R(" + n + ")";
    case MatrixBase::C:
      return "C(" + n + ")";
    case MatrixBase::H:
      return "H(" + n + ")";
    case MatrixBase::RplusR:
      return "R(" + n + ")+R(" + n + ")";
    case MatrixBase::HplusH:
      return "H(" + n + ")+H(" + n + ")";
  }
  return {};
}

MatrixType classify(const Signature& sig) {
  int n = sig.dim();
  int d = ((sig.q - sig.p) % 8 + 8) % 8;
  switch (d) {
    case 0:
    case 6:
      return {MatrixBase::R, 1 << (n / 2)};
    case 1:
    case 5:
      return {MatrixBase::C, 1 << ((n - 1) / 2)};
    case 2:
    case 4:
      return {MatrixBase::H, 1 << ((n - 2) / 2)};
    case 3:
      return {MatrixBase::HplusH, 1 << ((n - 3) / 2)};
    case 7:
      return {MatrixBase::RplusR, 1 << ((n - 1) / 2)};
  }
  throw Error("unreachable");
}

std::string division_type_str(DivisionType t) {
  switch (t) {
    case DivisionType::Real:
      return "R";
    case DivisionType::Complex:
      return "C";
    case DivisionType::Quaternion:
      return "H";
  }
  return {};
}

namespace {

std::string blade_str(Blade b) {
  if (b.is_scalar()) return "1";
  std::string out = "e{";
  bool first = true;
  for (int i : b.indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

void validate_generator_set(const Signature& sig, const std::vector<Blade>& generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!blade_valid_for(sig, generators[i])) {
      throw InvalidGeneratorSet("generator " + blade_str(generators[i]) +
                                " not a blade of the algebra");
    }
    SignedBlade sq = mul_blades(sig, generators[i], generators[i]);
    if (!sq.blade.is_scalar() || sq.sign != 1) {
      throw InvalidGeneratorSet("generator " + blade_str(generators[i]) +
                                " does not square to +1");
    }
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!blades_commute(sig, generators[i], generators[j])) {
        throw InvalidGeneratorSet("generators " + blade_str(generators[i]) + " and " +
                                  blade_str(generators[j]) + " do not commute");
      }
    }
  }
}

}  // namespace

Multivector build_idempotent(const Signature& sig, const std::vector<Blade>& generators) {
  validate_generator_set(sig, generators);
  Multivector f = Multivector::scalar(sig, 1);
  Rational half(1, 2);
  for (Blade g : generators) {
    Multivector factor = Multivector::scalar(sig, half);
    factor.add_term(g, half);
    f = mv_mul(f, factor);
  }
  return f;
}

std::vector<Multivector> division_ring_basis(const Signature& sig, const Multivector& f) {
  std::vector<Multivector> products;
  for (Blade b : all_blades(sig)) {
    Multivector fbf = mv_mul(mv_mul(f, Multivector::from_blade(sig, b)), f);
    if (!fbf.is_zero()) products.push_back(std::move(fbf));
  }
  return extract_basis(products);
}

IdempotentReport verify_idempotent(const Signature& sig, const Multivector& f) {
  return verify_idempotent(sig, f, {});
}

IdempotentReport verify_idempotent(const Signature& sig, const Multivector& f,
                                   const std::vector<Blade>& generators) {
  if (!(f.sig() == sig)) throw SignatureMismatch("idempotent has a different signature");

  IdempotentReport report{f,
                          generators,
                          generators.empty() ? involution_count(sig)
                                             : static_cast<int>(generators.size()),
                          false,
                          false,
                          0,
                          std::nullopt,
                          {},
                          {}};

  report.is_idempotent = (mv_mul(f, f) == f);

  std::vector<Blade> labels = all_blades(sig);
  std::vector<Multivector> products;
  products.reserve(labels.size());
  for (Blade b : labels) {
    products.push_back(mv_mul(Multivector::from_blade(sig, b), f));
  }
  std::vector<std::size_t> kept = extract_basis_indices(products);
  report.ideal_dim = static_cast<int>(kept.size());
  for (std::size_t i : kept) {
    report.ideal_basis_labels.push_back(labels[i]);
    report.ideal_basis.push_back(products[i]);
  }

  report.is_primitive = report.is_idempotent && !f.is_zero() &&
                        report.ideal_dim == classify(sig).minimal_ideal_dim();

  if (report.is_primitive) {
    std::vector<Multivector> dbasis = division_ring_basis(sig, f);
    switch (dbasis.size()) {
      case 1:
        report.division_type = DivisionType::Real;
        break;
      case 2:
      case 4: {
        // A non-scalar element of f R f must square to -f for the complex
        // and quaternionic cases.
        Multivector sq = mv_mul(dbasis[1], dbasis[1]);
        bool negative = false;
        if (!sq.is_zero()) {
          // sq is a rational multiple of f here; compare against c*f, c < 0.
          Blade lead = sq.terms().begin()->first;
          Rational ratio = sq.coeff(lead) / f.coeff(lead);
          negative = (ratio < 0) && (sq == f.scaled(ratio));
        }
        if (negative) {
          report.division_type =
              dbasis.size() == 2 ? DivisionType::Complex : DivisionType::Quaternion;
        }
        break;
      }
      default:
        break;
    }
  }
  return report;
}

bool quaternion_relations_check(const Signature& sig, const Multivector& f,
                                const Multivector& qi, const Multivector& qj,
                                const Multivector& qk) {
  Multivector minus_f = -f;
  if (!(f.sig() == sig)) throw SignatureMismatch("idempotent has a different signature");
  return mv_mul(qi, qi) == minus_f && mv_mul(qj, qj) == minus_f && mv_mul(qk, qk) == minus_f &&
         mv_mul(qi, qj) == qk && mv_mul(qj, qk) == qi && mv_mul(qk, qi) == qj &&
         mv_mul(qj, qi) == -qk && mv_mul(qk, qj) == -qi && mv_mul(qi, qk) == -qj;
}

namespace {

bool mask_in_span(std::uint32_t mask, const std::vector<std::uint32_t>& span_basis) {
  // Reduce against an already-triangular XOR basis (each entry keyed by its
  // highest set bit).
  std::uint32_t m = mask;
  for (std::uint32_t b : span_basis) {
    std::uint32_t high = std::bit_floor(b);
    if (m & high) m ^= b;
  }
  return m == 0;
}

void span_insert(std::vector<std::uint32_t>& span_basis, std::uint32_t mask) {
  std::uint32_t m = mask;
  for (std::uint32_t b : span_basis) {
    std::uint32_t high = std::bit_floor(b);
    if (m & high) m ^= b;
  }
  if (m != 0) {
    span_basis.push_back(m);
    std::sort(span_basis.begin(), span_basis.end(), std::greater<>());
  }
}

struct GeneratorSearch {
  const Signature& sig;
  const std::vector<Blade>& candidates;
  int target;
  std::vector<Blade> chosen;
  std::vector<Blade> best;

  bool valid_extension(Blade cand, const std::vector<std::uint32_t>& span_basis) const {
    SignedBlade sq = mul_blades(sig, cand, cand);
    if (!sq.blade.is_scalar() || sq.sign != 1) return false;
    for (Blade g : chosen) {
      if (!blades_commute(sig, g, cand)) return false;
    }
    return !mask_in_span(cand.mask(), span_basis);
  }

  bool run(std::size_t from, std::vector<std::uint32_t>& span_basis) {
    if (static_cast<int>(chosen.size()) == target) return true;
    if (chosen.size() > best.size()) best = chosen;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      Blade cand = candidates[i];
      if (!valid_extension(cand, span_basis)) continue;
      std::vector<std::uint32_t> next_span = span_basis;
      span_insert(next_span, cand.mask());
      chosen.push_back(cand);
      if (run(i + 1, next_span)) return true;
      chosen.pop_back();
    }
    if (chosen.size() > best.size()) best = chosen;
    return false;
  }
};

}  // namespace

std::vector<Blade> find_generators(const Signature& sig, const std::vector<Blade>& seed,
                                   const GeneratorSubset& support) {
  validate_generator_set(sig, seed);
  std::vector<std::uint32_t> span_basis;
  for (Blade g : seed) {
    if (mask_in_span(g.mask(), span_basis)) {
      throw InvalidGeneratorSet("seed subgroup is degenerate (contains a redundant blade)");
    }
    span_insert(span_basis, g.mask());
  }

  int k = involution_count(sig);
  if (static_cast<int>(seed.size()) == k) return seed;
  if (static_cast<int>(seed.size()) > k) {
    throw SearchExhausted("seed already has more than k = " + std::to_string(k) + " blades");
  }

  std::uint32_t support_mask = support.mask();
  std::vector<Blade> candidates;
  for (Blade b : all_blades(sig)) {
    if (b.is_scalar()) continue;
    if ((b.mask() & ~support_mask) != 0) continue;
    candidates.push_back(b);
  }

  GeneratorSearch search{sig, candidates, k, seed, seed};
  if (search.run(0, span_basis)) return search.chosen;

  std::ostringstream msg;
  msg << "no extension to " << k << " commuting involutions exists; maximal set found:";
  for (Blade b : search.best) msg << " " << blade_str(b);
  throw SearchExhausted(msg.str());
}

}  // namespace spinideal
