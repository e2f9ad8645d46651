// First homology of a closed genus-g surface and the Picard-Lefschetz action
// of Dehn twists on it.
//
// Convention: <x, v> = x^T J v with J = diag([[0,1],[-1,0]], ...), and the
// positive twist along v acts by x -> x + <x,v> v. Replacing v by -v gives
// the same transvection.

#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "lefsec/intlinalg.hpp"

namespace lefsec {

using H1Vector = IntVector;

class IntersectionForm {
 public:
  explicit IntersectionForm(unsigned genus);

  unsigned genus() const { return genus_; }
  std::size_t dimension() const { return 2 * genus_; }
  const IntMatrix& matrix() const { return J_; }

 private:
  unsigned genus_;
  IntMatrix J_;
};

Integer intersection(const IntersectionForm& J, const H1Vector& x, const H1Vector& v);

struct TwistMatrix {
  IntMatrix matrix;
  H1Vector cycle;
  int sign = 1;
};

/// Throws std::invalid_argument on a length mismatch or a sign other than +-1.
TwistMatrix transvection(const IntersectionForm& J, const H1Vector& v, int sign);

/// T_k * ... * T_1 for twists listed in factorization order (first twist
/// acts first). An empty sequence needs the dimension to build the identity.
IntMatrix total_monodromy(std::span<const TwistMatrix> twists, std::size_t dimension);
IntMatrix total_monodromy(std::span<const TwistMatrix> twists);

/// Per-fibration cache of transvections keyed on (cycle, sign). Not
/// thread-safe; give each worker its own.
class TwistCache {
 public:
  explicit TwistCache(unsigned genus) : form_(genus) {}

  const IntersectionForm& form() const { return form_; }
  const TwistMatrix& get(const H1Vector& v, int sign);

 private:
  IntersectionForm form_;
  std::map<std::pair<H1Vector, int>, TwistMatrix> cache_;
};

}  // namespace lefsec
