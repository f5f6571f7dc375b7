#include "spinideal/blade.hpp"

#include <algorithm>

namespace spinideal {

std::vector<Blade> all_blades(const Signature& sig) {
  std::uint32_t count = 1u << sig.dim();
  std::vector<Blade> out;
  out.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    out.push_back(Blade::from_mask(mask));
  }
  std::sort(out.begin(), out.end(), CanonicalBladeLess{});
  return out;
}

int permutation_sign(const std::vector<int>& indices) {
  int sign = 1;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      if (indices[i] == indices[j]) return 0;
      if (indices[i] > indices[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace spinideal
