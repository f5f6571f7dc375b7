#include "spinideal/textio.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "spinideal/errors.hpp"

namespace spinideal {

std::string render_blade(Blade b) {
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

namespace {

std::string render_term(const Rational& abs_coeff, Blade b) {
  if (b.is_scalar()) return rational_str(abs_coeff);
  if (abs_coeff == 1) return render_blade(b);
  return rational_str(abs_coeff) + "*" + render_blade(b);
}

std::string render_sum(const Multivector& x, const Rational& scale) {
  std::string out;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    Rational v = c * scale;
    bool negative = v < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    out += render_term(negative ? Rational(-v) : v, b);
  }
  return out;
}

}  // namespace

std::string render_multivector(const Multivector& x) {
  if (x.is_zero()) return "0";
  return render_sum(x, 1);
}

std::string render_multivector_factored(const Multivector& x) {
  if (x.is_zero()) return "0";
  Rational common = 0;
  bool uniform = true;
  for (const auto& [b, c] : x.terms()) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (common == 0) {
      common = a;
    } else if (a != common) {
      uniform = false;
      break;
    }
  }
  if (!uniform || common == 1 || x.term_count() < 2) return render_multivector(x);
  return rational_str(common) + "*(" + render_sum(x, Rational(1) / common) + ")";
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  char advance() {
    char c = text_[pos_++];
    ++col_;
    return c;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, col_);
  }

  std::string digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += advance();
    }
    if (out.empty()) fail("expected digits");
    return out;
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

Blade parse_blade(Scanner& s, const Signature* sig) {
  // caller consumed the leading 'e'
  std::vector<int> indices;
  auto push_index = [&](int idx) {
    if (idx < 1) s.fail("blade index must be at least 1");
    if (!indices.empty()) {
      if (idx == indices.back()) s.fail("repeated blade index");
      if (idx < indices.back()) s.fail("blade indices must be strictly increasing");
    }
    if (idx > kMaxGenerators) s.fail("blade index exceeds the supported maximum");
    if (sig != nullptr && idx > sig->dim()) s.fail("blade index exceeds signature dimension");
    indices.push_back(idx);
  };

  if (s.accept('{')) {
    while (true) {
      s.skip_ws();
      push_index(std::stoi(s.digits()));
      s.skip_ws();
      if (s.accept('}')) break;
      if (!s.accept(',')) s.fail("expected ',' or '}' in blade");
    }
  } else {
    if (!std::isdigit(static_cast<unsigned char>(s.peek()))) s.fail("expected blade indices");
    while (std::isdigit(static_cast<unsigned char>(s.peek()))) {
      push_index(s.advance() - '0');
    }
  }
  if (indices.empty()) s.fail("blade needs at least one index");
  return Blade::from_indices(indices);
}

Rational parse_rational(Scanner& s) {
  bool negative = false;
  if (s.accept('-')) negative = true;
  s.skip_ws();
  Integer num(s.digits());
  Integer den = 1;
  if (s.accept('/')) {
    s.skip_ws();
    den = Integer(s.digits());
    if (den == 0) s.fail("zero denominator");
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

}  // namespace

Multivector parse_multivector(std::string_view text, const Signature& sig) {
  Scanner s(text);
  Multivector out(sig);
  if (s.at_end()) s.fail("empty multivector");

  bool first = true;
  while (true) {
    s.skip_ws();
    int sign = 1;
    if (s.accept('-')) {
      sign = -1;
    } else if (s.accept('+')) {
      // explicit plus
    } else if (!first) {
      s.fail("expected '+' or '-' between terms");
    }
    s.skip_ws();

    Rational coeff = 1;
    Blade b = Blade::scalar();
    char c = s.peek();
    if (c == 'e') {
      s.advance();
      b = parse_blade(s, &sig);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      coeff = parse_rational(s);
      if (s.accept('*')) {
        s.skip_ws();
        if (s.peek() != 'e') s.fail("expected blade after '*'");
        s.advance();
        b = parse_blade(s, &sig);
      }
    } else {
      s.fail("expected term");
    }
    out.add_term(b, sign < 0 ? Rational(-coeff) : coeff);
    first = false;
    if (s.at_end()) break;
    char next = s.peek();
    if (next != '+' && next != '-') s.fail("expected '+' or '-' between terms");
  }
  return out;
}

Blade parse_blade_token(std::string_view token) {
  Scanner s(token);
  s.skip_ws();
  if (s.peek() != 'e') s.fail("expected blade");
  s.advance();
  Blade b = parse_blade(s, nullptr);
  if (!s.at_end()) s.fail("trailing characters after blade");
  return b;
}

std::vector<Blade> parse_blade_list(std::string_view text) {
  std::vector<Blade> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '{') ++depth;
    if (i < text.size() && text[i] == '}') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view token = text.substr(start, i - start);
      if (!token.empty()) out.push_back(parse_blade_token(token));
      start = i + 1;
    }
  }
  if (out.empty()) throw ParseError("empty blade list", 1, 1);
  return out;
}

namespace {

nlohmann::json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

nlohmann::json blade_to_json(Blade b) { return nlohmann::json(b.indices()); }

Blade blade_from_json(const nlohmann::json& j) {
  return Blade::from_indices(j.get<std::vector<int>>());
}

}  // namespace

nlohmann::json multivector_to_json(const Multivector& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [b, c] : x.terms()) {
    terms.push_back({{"indices", blade_to_json(b)},
                     {"num", integer_to_json(rational_num(c))},
                     {"den", integer_to_json(rational_den(c))}});
  }
  return {{"signature", {x.sig().p, x.sig().q}}, {"terms", std::move(terms)}};
}

Multivector multivector_from_json(const nlohmann::json& j) {
  const auto& sig_pair = j.at("signature");
  Signature sig(sig_pair.at(0).get<int>(), sig_pair.at(1).get<int>());
  Multivector out(sig);
  for (const auto& term : j.at("terms")) {
    Rational coeff(integer_from_json(term.at("num")), integer_from_json(term.at("den")));
    out.add_term(blade_from_json(term.at("indices")), coeff);
  }
  return out;
}

nlohmann::json matrix_type_to_json(const MatrixType& t) {
  std::string base;
  switch (t.base) {
    case MatrixBase::R:
      base = "R";
      break;
    case MatrixBase::C:
      base = "C";
      break;
    case MatrixBase::H:
      base = "H";
      break;
    case MatrixBase::RplusR:
      base = "R+R";
      break;
    case MatrixBase::HplusH:
      base = "H+H";
      break;
  }
  return {{"base", base},
          {"size", t.size},
          {"minimal_ideal_dim", t.minimal_ideal_dim()},
          {"real_dim", t.real_dim()}};
}

nlohmann::json idempotent_report_to_json(const IdempotentReport& r) {
  nlohmann::json generators = nlohmann::json::array();
  for (Blade g : r.generators) generators.push_back(blade_to_json(g));
  nlohmann::json basis = nlohmann::json::array();
  for (std::size_t i = 0; i < r.ideal_basis.size(); ++i) {
    basis.push_back({{"label", blade_to_json(r.ideal_basis_labels[i])},
                     {"vector", multivector_to_json(r.ideal_basis[i])}});
  }
  nlohmann::json division =
      r.division_type ? nlohmann::json(division_type_str(*r.division_type)) : nlohmann::json();
  return {{"f", multivector_to_json(r.f)},
          {"generators", std::move(generators)},
          {"k", r.k},
          {"is_idempotent", r.is_idempotent},
          {"is_primitive", r.is_primitive},
          {"ideal_dim", r.ideal_dim},
          {"division_type", std::move(division)},
          {"basis", std::move(basis)}};
}

IdempotentReport idempotent_report_from_json(const nlohmann::json& j) {
  Multivector f = multivector_from_json(j.at("f"));
  IdempotentReport r{f, {}, j.at("k").get<int>(),       j.at("is_idempotent").get<bool>(),
                     j.at("is_primitive").get<bool>(),  j.at("ideal_dim").get<int>(),
                     std::nullopt,               {},    {}};
  for (const auto& g : j.at("generators")) r.generators.push_back(blade_from_json(g));
  const auto& division = j.at("division_type");
  if (!division.is_null()) {
    std::string d = division.get<std::string>();
    if (d == "R") r.division_type = DivisionType::Real;
    if (d == "C") r.division_type = DivisionType::Complex;
    if (d == "H") r.division_type = DivisionType::Quaternion;
  }
  for (const auto& entry : j.at("basis")) {
    r.ideal_basis_labels.push_back(blade_from_json(entry.at("label")));
    r.ideal_basis.push_back(multivector_from_json(entry.at("vector")));
  }
  return r;
}

nlohmann::json projection_to_json(const ProjectionDecomposition& d) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : d.pairs) pairs.push_back({a, b});
  nlohmann::json extras = nlohmann::json::array();
  for (Blade g : d.extra_generators) extras.push_back(blade_to_json(g));
  return {{"signature", {d.sig.p, d.sig.q}},
          {"pairs", std::move(pairs)},
          {"f_tilde", multivector_to_json(d.f_tilde)},
          {"extra_generators", std::move(extras)},
          {"e", multivector_to_json(d.e)},
          {"h", multivector_to_json(d.h)},
          {"omega_tilde", multivector_to_json(d.omega_tilde)},
          {"subalgebra", d.subalgebra.members},
          {"is_idempotent", d.h_report.is_idempotent},
          {"is_primitive", d.h_report.is_primitive},
          {"ideal_dim", d.h_report.ideal_dim},
          {"splitting_verified", d.splitting_verified}};
}

}  // namespace spinideal
