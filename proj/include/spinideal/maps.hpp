#pragma once

#include <map>
#include <vector>

#include "spinideal/multivector.hpp"

namespace spinideal {

// A subset of the ambient generators. The span of blades supported on the
// members is closed under the geometric product, so it carries a Clifford
// subalgebra whose signature counts the members on each side of p.
struct GeneratorSubset {
  Signature ambient;
  std::vector<int> members;  // strictly increasing, nonempty

  static GeneratorSubset make(const Signature& ambient, std::vector<int> members);

  Signature induced_signature() const;
  std::uint32_t mask() const;
  friend bool operator==(const GeneratorSubset&, const GeneratorSubset&) = default;
};

// Carrier change from exterior form to Clifford element: the two algebras
// share the canonical blade basis, so coefficients are untouched.
Multivector quantize(const Multivector& form);

// Inverse carrier change, Clifford element to exterior form.
Multivector symbolize(const Multivector& x);

struct RestrictedForm {
  Multivector form;              // exterior form over R^{|members|}
  std::map<int, int> reindex;    // ambient index -> subalgebra index
};

// Symbol map restricted to the subalgebra on `a`: every blade of x must be
// supported inside a.members; indices are renamed to 1..|a| preserving order.
RestrictedForm restrict_symbol(const Multivector& x, const GeneratorSubset& a);

// Extends a form over R^n into the target algebra by renaming index i to
// placement[i]. The placement must be injective; a non-monotone placement
// contributes the reordering sign of each renamed blade.
Multivector embed(const Multivector& form, const Signature& target,
                  const std::map<int, int>& placement);

std::map<int, int> identity_placement(int n);

}  // namespace spinideal
