#include "lefsec/homology.hpp"

#include <stdexcept>

namespace lefsec {

IntersectionForm::IntersectionForm(unsigned genus) : genus_(genus), J_(2 * genus, 2 * genus) {
  for (std::size_t i = 0; i < genus; ++i) {
    J_(2 * i, 2 * i + 1) = 1;
    J_(2 * i + 1, 2 * i) = -1;
  }
}

Integer intersection(const IntersectionForm& J, const H1Vector& x, const H1Vector& v) {
  if (x.size() != J.dimension() || v.size() != J.dimension())
    throw std::invalid_argument("intersection: vector length must be 2g");
  Integer s = 0;
  for (std::size_t i = 0; i < J.genus(); ++i)
    s += x[2 * i] * v[2 * i + 1] - x[2 * i + 1] * v[2 * i];
  return s;
}

TwistMatrix transvection(const IntersectionForm& J, const H1Vector& v, int sign) {
  if (v.size() != J.dimension()) throw std::invalid_argument("transvection: cycle length must be 2g");
  if (sign != 1 && sign != -1) throw std::invalid_argument("transvection: sign must be +1 or -1");
  const std::size_t n = J.dimension();
  TwistMatrix t{IntMatrix::identity(n), v, sign};
  for (std::size_t j = 0; j < n; ++j) {
    // <e_j, v> = v[j+1] for an a-slot, -v[j-1] for a b-slot.
    Integer c = (j % 2 == 0) ? v[j + 1] : Integer(-v[j - 1]);
    if (c == 0) continue;
    c *= sign;
    for (std::size_t i = 0; i < n; ++i) t.matrix(i, j) += c * v[i];
  }
  return t;
}

IntMatrix total_monodromy(std::span<const TwistMatrix> twists, std::size_t dimension) {
  IntMatrix m = IntMatrix::identity(dimension);
  for (const auto& t : twists) {
    if (t.matrix.rows() != dimension || t.matrix.cols() != dimension)
      throw std::invalid_argument("total_monodromy: mixed dimensions");
    m = t.matrix * m;
  }
  return m;
}

IntMatrix total_monodromy(std::span<const TwistMatrix> twists) {
  if (twists.empty()) throw std::invalid_argument("total_monodromy: empty sequence needs a dimension");
  return total_monodromy(twists, twists.front().matrix.rows());
}

const TwistMatrix& TwistCache::get(const H1Vector& v, int sign) {
  auto key = std::make_pair(v, sign);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(std::move(key), transvection(form_, v, sign)).first;
  return it->second;
}

}  // namespace lefsec
