#include "lefsec/mapping_class.hpp"

#include <stdexcept>

namespace lefsec {

Automorphism::Automorphism(GroupCtx ctx, std::vector<Word> images, std::vector<Word> inverse_images)
    : ctx_(std::move(ctx)), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {}

Automorphism Automorphism::identity(const GroupCtx& ctx) {
  std::vector<Word> gens;
  for (std::size_t i = 0; i < ctx.num_generators(); ++i) gens.push_back(Word{ctx.generator(i)});
  return Automorphism(ctx, gens, gens);
}

Word Automorphism::image(const Generator& g) const {
  const Word& w = images_.at(ctx_.flat_index(g));
  return g.sign > 0 ? w : invert(w);
}

Word Automorphism::inverse_image(const Generator& g) const {
  const Word& w = inverse_images_.at(ctx_.flat_index(g));
  return g.sign > 0 ? w : invert(w);
}

namespace {

Word substitute(const GroupCtx& ctx, const std::vector<Word>& table, const Word& w) {
  std::vector<Generator> out;
  for (const auto& g : w.letters()) {
    const Word& img = table.at(ctx.flat_index(g));
    if (g.sign > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(it->inverse());
    }
  }
  return Word(std::move(out));
}

}  // namespace

Check verify(const Automorphism& f) {
  const GroupCtx& ctx = f.ctx();
  const std::size_t n = ctx.num_generators();
  if (f.images().size() != n || f.inverse_images().size() != n)
    return Check::fail("table length must equal the number of generators (" + std::to_string(n) + ")");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string name = format_generator(ctx.generator(i));
    if (!ctx.valid(f.images()[i])) return Check::fail("image of " + name + " uses an out-of-range generator");
    if (!ctx.valid(f.inverse_images()[i]))
      return Check::fail("inverse image of " + name + " uses an out-of-range generator");
  }
  if (ctx.is_surface()) {
    if (!is_trivial(ctx, substitute(ctx, f.images(), ctx.relator())))
      return Check::fail("relator is not preserved by the images");
    if (!is_trivial(ctx, substitute(ctx, f.inverse_images(), ctx.relator())))
      return Check::fail("relator is not preserved by the inverse images");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Word gen{ctx.generator(i)};
    const std::string name = format_generator(ctx.generator(i));
    if (!equal(ctx, substitute(ctx, f.inverse_images(), f.images()[i]), gen))
      return Check::fail("inverse table does not undo the image of " + name);
    if (!equal(ctx, substitute(ctx, f.images(), f.inverse_images()[i]), gen))
      return Check::fail("table does not undo the inverse image of " + name);
  }
  return Check::pass();
}

Word apply(const Automorphism& f, const Word& w) { return substitute(f.ctx(), f.images(), w); }

Word apply_power(const Automorphism& f, const Word& w, long long n) {
  Word out = w;
  const auto& table = n >= 0 ? f.images() : f.inverse_images();
  for (long long i = 0; i < (n >= 0 ? n : -n); ++i) out = substitute(f.ctx(), table, out);
  return out;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (!(f.ctx() == g.ctx())) throw std::invalid_argument("compose: automorphisms live on different groups");
  std::vector<Word> images, inverse_images;
  for (const Word& w : g.images()) images.push_back(substitute(f.ctx(), f.images(), w));
  for (const Word& w : f.inverse_images()) inverse_images.push_back(substitute(f.ctx(), g.inverse_images(), w));
  return Automorphism(f.ctx(), std::move(images), std::move(inverse_images));
}

Automorphism inverse(const Automorphism& f) {
  return Automorphism(f.ctx(), f.inverse_images(), f.images());
}

IntMatrix h1_shadow(const Automorphism& f) {
  std::vector<IntVector> cols;
  for (const Word& w : f.images()) cols.push_back(abelianize(f.ctx(), w));
  return IntMatrix::from_columns(f.ctx().num_generators(), cols);
}

bool same_action(const Automorphism& f, const Automorphism& g) {
  if (!(f.ctx() == g.ctx())) return false;
  for (std::size_t i = 0; i < f.images().size(); ++i)
    if (!equal(f.ctx(), f.images()[i], g.images()[i])) return false;
  return true;
}

Automorphism standard_twist(const GroupCtx& ctx, GenKind curve, std::uint32_t index, int sign) {
  if (!ctx.is_surface() || index >= ctx.genus() || curve == GenKind::x)
    throw std::invalid_argument("standard_twist: no such curve on this surface");
  if (sign != 1 && sign != -1) throw std::invalid_argument("standard_twist: sign must be +1 or -1");
  Automorphism id = Automorphism::identity(ctx);
  std::vector<Word> images = id.images();
  std::vector<Word> inverse_images = id.images();
  const std::size_t ai = 2 * index, bi = 2 * index + 1;
  if (curve == GenKind::a) {
    // b_i -> b_i a_i^{-1}
    images[bi] = Word{gen_b(index), gen_a(index, -1)};
    inverse_images[bi] = Word{gen_b(index), gen_a(index)};
  } else {
    // a_i -> a_i b_i
    images[ai] = Word{gen_a(index), gen_b(index)};
    inverse_images[ai] = Word{gen_a(index), gen_b(index, -1)};
  }
  Automorphism t(ctx, std::move(images), std::move(inverse_images));
  return sign > 0 ? t : inverse(t);
}

}  // namespace lefsec
