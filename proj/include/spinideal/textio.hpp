#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spinideal/ideals.hpp"
#include "spinideal/multivector.hpp"
#include "spinideal/unitary.hpp"

namespace spinideal {

// Text grammar:
//   mv       := ['+'|'-'] term (('+'|'-') term)*
//   term     := rational ['*' blade] | blade
//   rational := integer ['/' positive-integer]
//   blade    := 'e{' index (',' index)* '}' | 'e' digit+
// The compact form 'e14' is valid only when every index is a single digit.
// Whitespace between tokens is insignificant. Canonical output always uses
// the bracketed form, terms ordered by grade then lexicographic indices,
// scalar term first.
std::string render_blade(Blade b);  // "1" for the scalar blade
std::string render_multivector(const Multivector& x);

// Listing-style rendering: when every coefficient has the same absolute
// value c != 1 the common factor is pulled out, e.g. "1/8*(1 + e{1,4} - ...)".
// Otherwise identical to render_multivector.
std::string render_multivector_factored(const Multivector& x);

Multivector parse_multivector(std::string_view text, const Signature& sig);

// A single blade token in either grammar form, e.g. "e13" or "e{1,3}".
Blade parse_blade_token(std::string_view token);

// Comma-separated blade tokens; commas inside braces do not split.
std::vector<Blade> parse_blade_list(std::string_view text);

nlohmann::json multivector_to_json(const Multivector& x);
Multivector multivector_from_json(const nlohmann::json& j);

nlohmann::json matrix_type_to_json(const MatrixType& t);
nlohmann::json idempotent_report_to_json(const IdempotentReport& r);
IdempotentReport idempotent_report_from_json(const nlohmann::json& j);
nlohmann::json projection_to_json(const ProjectionDecomposition& d);

}  // namespace spinideal
