#include "spinideal/maps.hpp"

#include <algorithm>
#include <set>

#include "spinideal/errors.hpp"

namespace spinideal {

GeneratorSubset GeneratorSubset::make(const Signature& ambient, std::vector<int> members) {
  if (members.empty()) throw Error("generator subset must be nonempty");
  int prev = 0;
  for (int m : members) {
    if (m < 1 || m > ambient.dim()) {
      throw Error("subset member " + std::to_string(m) + " outside [1," +
                  std::to_string(ambient.dim()) + "]");
    }
    if (m <= prev) throw Error("subset members must be strictly increasing");
    prev = m;
  }
  return GeneratorSubset{ambient, std::move(members)};
}

Signature GeneratorSubset::induced_signature() const {
  int pos = 0;
  for (int m : members) {
    if (m <= ambient.p) ++pos;
  }
  return Signature(pos, static_cast<int>(members.size()) - pos);
}

std::uint32_t GeneratorSubset::mask() const {
  std::uint32_t out = 0;
  for (int m : members) out |= 1u << (m - 1);
  return out;
}

Multivector quantize(const Multivector& form) { return form; }

Multivector symbolize(const Multivector& x) { return x; }

RestrictedForm restrict_symbol(const Multivector& x, const GeneratorSubset& a) {
  if (!(x.sig() == a.ambient)) {
    throw SignatureMismatch("element and subset live in different ambient algebras");
  }
  std::uint32_t allowed = a.mask();
  std::map<int, int> reindex;
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    reindex[a.members[i]] = static_cast<int>(i) + 1;
  }

  Multivector out(a.induced_signature());
  for (const auto& [b, c] : x.terms()) {
    if ((b.mask() & ~allowed) != 0) {
      throw NotInSubalgebra("blade has support outside the subalgebra generators");
    }
    std::vector<int> renamed;
    for (int idx : b.indices()) renamed.push_back(reindex.at(idx));
    // order-preserving rename: the sequence stays ascending
    out.add_term(Blade::from_indices(renamed), c);
  }
  return {out, reindex};
}

Multivector embed(const Multivector& form, const Signature& target,
                  const std::map<int, int>& placement) {
  std::set<int> images;
  for (const auto& [from, to] : placement) {
    if (from < 1) throw InvalidPlacement("placement domain must be positive indices");
    if (to < 1 || to > target.dim()) {
      throw InvalidPlacement("placement image " + std::to_string(to) + " outside target");
    }
    if (!images.insert(to).second) throw InvalidPlacement("placement is not injective");
  }

  Multivector out(target);
  for (const auto& [b, c] : form.terms()) {
    std::vector<int> renamed;
    for (int idx : b.indices()) {
      auto it = placement.find(idx);
      if (it == placement.end()) {
        throw InvalidPlacement("no placement for index " + std::to_string(idx));
      }
      renamed.push_back(it->second);
    }
    int sign = permutation_sign(renamed);
    std::sort(renamed.begin(), renamed.end());
    out.add_term(Blade::from_indices(renamed), sign > 0 ? c : -c);
  }
  return out;
}

std::map<int, int> identity_placement(int n) {
  std::map<int, int> out;
  for (int i = 1; i <= n; ++i) out[i] = i;
  return out;
}

}  // namespace spinideal
