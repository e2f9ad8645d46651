// Automorphisms of surface (or free) groups given as generator-image tables.
//
// Tables are user input: the engine never derives a twist from curve data,
// it verifies the table it is handed. A table is accepted when both it and
// its claimed inverse send the relator to a trivial word and the two
// composites fix every generator.

#pragma once

#include <string>
#include <vector>

#include "lefsec/homology.hpp"
#include "lefsec/word.hpp"

namespace lefsec {

/// Outcome of a verification with a reason when it fails.
struct Check {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
  static Check pass() { return {}; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
};

class Automorphism {
 public:
  Automorphism(GroupCtx ctx, std::vector<Word> images, std::vector<Word> inverse_images);
  static Automorphism identity(const GroupCtx& ctx);

  const GroupCtx& ctx() const { return ctx_; }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }

  /// Image of a single letter (inverse letters map to inverted images).
  Word image(const Generator& g) const;
  Word inverse_image(const Generator& g) const;

  friend bool operator==(const Automorphism& l, const Automorphism& r) {
    return l.ctx_ == r.ctx_ && l.images_ == r.images_ && l.inverse_images_ == r.inverse_images_;
  }

 private:
  GroupCtx ctx_;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

Check verify(const Automorphism& f);
Word apply(const Automorphism& f, const Word& w);
/// Applies f^n: f n times for n > 0, the inverse table |n| times for n < 0.
Word apply_power(const Automorphism& f, const Word& w, long long n);
/// f o g, i.e. g acts first. Throws std::invalid_argument on a context mismatch.
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism inverse(const Automorphism& f);
/// Columns are the abelianized images of a_1, b_1, ..., a_g, b_g.
IntMatrix h1_shadow(const Automorphism& f);

/// Table equality up to equality in the group (tables themselves may differ
/// as words).
bool same_action(const Automorphism& f, const Automorphism& g);

/// Shipped tables: the positive Dehn twist along the standard curve a_i or
/// b_i of the closed genus-g surface, matching transvection(J, e, +1) on
/// homology. Sign -1 returns the inverse twist.
Automorphism standard_twist(const GroupCtx& ctx, GenKind curve, std::uint32_t index, int sign = 1);

}  // namespace lefsec
