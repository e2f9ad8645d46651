#include "lefsec/section_engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace lefsec {

const char* to_string(Tier t) {
  switch (t) {
    case Tier::pi1_certified: return "pi1-certified";
    case Tier::h1_necessary: return "h1-necessary";
    case Tier::h1_refuted: return "h1-refuted";
  }
  return "?";
}

namespace {

void require_pi1(const FibrationSpec& spec) {
  for (std::size_t i = 0; i < spec.cycles.size(); ++i)
    if (!spec.cycles[i].has_pi1_data())
      throw std::invalid_argument("cycle " + std::to_string(i + 1) +
                                  " lacks pi_1 data (based_word and twist_table are required)");
  if (spec.cycles.empty()) throw std::invalid_argument("fibration has no vanishing cycles");
}

void require_arity(const FibrationSpec& spec, const SectionCertificate& cert) {
  if (cert.m.size() != spec.cycles.size() || cert.zetas.size() != spec.cycles.size())
    throw std::invalid_argument("certificate arity does not match the number of vanishing cycles (" +
                                std::to_string(spec.cycles.size()) + ")");
}

Word part(const GroupCtx& ctx, const VanishingCycle& c, const Word& zeta, long long m) {
  return concat(concat(zeta, power(ctx, *c.based_word, m)), apply_power(*c.twist_table, invert(zeta), -1));
}

bool smooth_exponents(const std::vector<long long>& m) {
  return std::all_of(m.begin(), m.end(), [](long long x) { return x == 0 || x == 1; });
}

// Columns of the abelianized system: per cycle, B_i (Id - T_i^{-1}) then the
// k columns B_i v_i.
struct H1System {
  std::vector<IntMatrix> conj;  // B_i (Id - T_i^{-1})
  std::vector<H1Vector> cycle;  // B_i v_i
  IntMatrix zeta_block;         // [conj_1 | ... | conj_k]
  IntMatrix full;               // [zeta_block | cycle columns]
};

H1System build_h1_system(const FibrationSpec& spec) {
  const IntersectionForm form(spec.genus);
  const std::size_t n = spec.dimension();
  H1System sys;
  sys.zeta_block = IntMatrix(n, 0);
  IntMatrix prefix_inv = IntMatrix::identity(n);
  for (const auto& c : spec.cycles) {
    const IntMatrix tinv = transvection(form, c.h1, -c.sign).matrix;
    sys.conj.push_back(prefix_inv * (IntMatrix::identity(n) - tinv));
    sys.cycle.push_back(prefix_inv * c.h1);
    sys.zeta_block = hconcat(sys.zeta_block, sys.conj.back());
    prefix_inv = prefix_inv * tinv;
  }
  sys.full = hconcat(sys.zeta_block, IntMatrix::from_columns(n, sys.cycle));
  return sys;
}

}  // namespace

std::vector<Word> certificate_parts(const FibrationSpec& spec, const SectionCertificate& cert) {
  require_pi1(spec);
  require_arity(spec, cert);
  const GroupCtx ctx = spec.surface();
  std::vector<Word> parts;
  for (std::size_t i = 0; i < spec.cycles.size(); ++i) {
    ctx.require_valid(cert.zetas[i]);
    parts.push_back(part(ctx, spec.cycles[i], cert.zetas[i], cert.m[i]));
  }
  return parts;
}

Verdict verify_certificate(const FibrationSpec& spec, const SectionCertificate& cert) {
  const std::vector<Word> parts = certificate_parts(spec, cert);
  const GroupCtx ctx = spec.surface();
  ctx.require_valid(cert.alpha);
  const std::vector<Automorphism> twists = twist_tables(spec);
  if (concat_decompose_check(twists, cert.alpha, parts)) {
    Verdict v;
    v.extendable = true;
    v.smoothable = smooth_exponents(cert.m);
    v.tier = Tier::pi1_certified;
    v.certificate = cert;
    return v;
  }
  return h1_extendable(spec, abelianize(ctx, cert.alpha));
}

Verdict h1_extendable(const FibrationSpec& spec, const H1Vector& alphaH) {
  if (alphaH.size() != spec.dimension())
    throw std::invalid_argument("alpha vector must have length " + std::to_string(spec.dimension()));
  for (const auto& c : spec.cycles)
    if (c.h1.size() != spec.dimension()) throw std::invalid_argument("cycle vector must have length 2g");
  const H1System sys = build_h1_system(spec);
  Verdict v;
  auto sol = in_image(sys.full, alphaH);
  if (!sol) {
    v.tier = Tier::h1_refuted;
    return v;
  }
  const std::size_t n = spec.dimension(), k = spec.cycles.size();
  H1Witness w;
  for (std::size_t i = 0; i < k; ++i)
    w.zetas.emplace_back(sol->begin() + static_cast<std::ptrdiff_t>(i * n),
                         sol->begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  w.m.assign(sol->begin() + static_cast<std::ptrdiff_t>(k * n), sol->end());
  v.tier = Tier::h1_necessary;
  v.h1_witness = std::move(w);
  return v;
}

namespace {

// Reduced words of exact length `len` in lexicographic order of the letter
// sequence a1, a1^-1, b1, b1^-1, a2, ...
std::vector<Word> words_of_length(const GroupCtx& ctx, unsigned len) {
  std::vector<Generator> alphabet;
  for (std::size_t i = 0; i < ctx.num_generators(); ++i) {
    alphabet.push_back(ctx.generator(i));
    alphabet.push_back(ctx.generator(i).inverse());
  }
  std::vector<Word> out;
  std::vector<Generator> cur;
  std::function<void()> rec = [&]() {
    if (cur.size() == len) {
      out.emplace_back(cur);
      return;
    }
    for (const auto& g : alphabet) {
      if (!cur.empty() && cur.back().is_inverse_of(g)) continue;
      cur.push_back(g);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

void compositions(unsigned total, std::size_t parts, unsigned cap, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == parts) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (unsigned l = 0; l <= std::min(total, cap); ++l) {
    cur.push_back(l);
    compositions(total - l, parts, cap, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<SectionCertificate> search_certificate(const FibrationSpec& spec, const Word& alpha,
                                                     SearchBounds bounds) {
  require_pi1(spec);
  const GroupCtx ctx = spec.surface();
  ctx.require_valid(alpha);
  const H1Vector alphaH = abelianize(ctx, alpha);
  if (h1_extendable(spec, alphaH).tier == Tier::h1_refuted) return std::nullopt;

  const std::size_t k = spec.cycles.size();
  const std::vector<Automorphism> twists = twist_tables(spec);
  const H1System sys = build_h1_system(spec);
  const SmithDecomposition zeta_snf = smith_normal_form(sys.zeta_block);

  // Exponent vectors grouped by sum |m_i|, keeping only those whose residual
  // is reachable by some choice of zetas.
  std::map<long long, std::vector<std::pair<std::vector<long long>, H1Vector>>> m_groups;
  {
    std::vector<long long> m(k, -bounds.m_bound);
    for (;;) {
      H1Vector contrib = zero_vector(spec.dimension());
      long long weight = 0;
      for (std::size_t i = 0; i < k; ++i) {
        contrib = contrib + Integer(m[i]) * sys.cycle[i];
        weight += m[i] < 0 ? -m[i] : m[i];
      }
      if (in_image(zeta_snf, alphaH - contrib)) m_groups[weight].emplace_back(m, contrib);
      std::size_t p = k;
      while (p > 0 && m[p - 1] == bounds.m_bound) m[--p] = -bounds.m_bound;
      if (p == 0) break;
      ++m[p - 1];
    }
  }
  if (m_groups.empty()) return std::nullopt;

  std::vector<std::vector<Word>> words_by_len;
  std::vector<std::vector<H1Vector>> ab_by_len;
  for (unsigned l = 0; l <= bounds.len_bound; ++l) {
    words_by_len.push_back(words_of_length(ctx, l));
    std::vector<H1Vector> ab;
    for (const auto& w : words_by_len.back()) ab.push_back(abelianize(ctx, w));
    ab_by_len.push_back(std::move(ab));
  }

  SectionCertificate cand;
  cand.alpha = alpha;
  cand.zetas.assign(k, Word{});
  std::optional<SectionCertificate> found;

  auto try_m = [&](const H1Vector& zeta_part, const std::vector<std::pair<std::vector<long long>, H1Vector>>& group) {
    for (const auto& [m, contrib] : group) {
      if (zeta_part + contrib != alphaH) continue;
      cand.m = m;
      std::vector<Word> parts;
      for (std::size_t i = 0; i < k; ++i) parts.push_back(part(ctx, spec.cycles[i], cand.zetas[i], m[i]));
      if (concat_decompose_check(twists, alpha, parts)) {
        found = cand;
        return true;
      }
    }
    return false;
  };

  for (unsigned total = 0; total <= bounds.len_bound * k; ++total) {
    std::vector<std::vector<unsigned>> comps;
    std::vector<unsigned> cur;
    compositions(total, k, bounds.len_bound, cur, comps);
    for (const auto& [weight, group] : m_groups) {
      (void)weight;
      for (const auto& lens : comps) {
        std::function<bool(std::size_t, const H1Vector&)> rec = [&](std::size_t i, const H1Vector& acc) {
          if (i == k) return try_m(acc, group);
          const auto& ws = words_by_len[lens[i]];
          const auto& abs_ = ab_by_len[lens[i]];
          for (std::size_t w = 0; w < ws.size(); ++w) {
            cand.zetas[i] = ws[w];
            if (rec(i + 1, acc + sys.conj[i] * abs_[w])) return true;
          }
          return false;
        };
        if (rec(0, zero_vector(spec.dimension()))) return found;
      }
    }
  }
  return std::nullopt;
}

SectionCertificate transport_certificate(const FibrationSpec& spec, const SectionCertificate& cert,
                                         std::size_t i, HurwitzDirection dir) {
  require_pi1(spec);
  require_arity(spec, cert);
  if (i + 1 >= spec.cycles.size()) throw std::out_of_range("Hurwitz move position out of range");
  const GroupCtx ctx = spec.surface();
  SectionCertificate out = cert;
  std::swap(out.m[i], out.m[i + 1]);
  if (dir == HurwitzDirection::left) {
    // zeta'_i = zeta_{i+1}, zeta'_{i+1} = tau_{i+1}(alpha_{i+1}^{-1} zeta_i)
    const VanishingCycle& second = spec.cycles[i + 1];
    const Word alpha_next = part(ctx, second, cert.zetas[i + 1], cert.m[i + 1]);
    out.zetas[i] = cert.zetas[i + 1];
    out.zetas[i + 1] = apply(*second.twist_table, concat(invert(alpha_next), cert.zetas[i]));
  } else {
    // zeta'_{i+1} = zeta_i, zeta'_i = alpha_i . tau_i^{-1}(zeta_{i+1})
    const VanishingCycle& first = spec.cycles[i];
    const Word alpha_here = part(ctx, first, cert.zetas[i], cert.m[i]);
    out.zetas[i + 1] = cert.zetas[i];
    out.zetas[i] = concat(alpha_here, apply_power(*first.twist_table, cert.zetas[i + 1], -1));
  }
  return out;
}

Check verify_splitting(std::size_t k, std::span<const Automorphism> twists,
                       std::span<const BouquetElement> images, std::span<const Word> attach_words) {
  if (twists.size() != k || images.size() != k)
    throw std::invalid_argument("verify_splitting: need exactly k twists and k images");
  const GroupCtx base = GroupCtx::free(static_cast<unsigned>(k));
  for (std::size_t i = 0; i < k; ++i)
    if (Check c = verify(twists[i]); !c) return Check::fail("twist " + std::to_string(i + 1) + ": " + c.diagnostic);
  for (std::size_t i = 0; i < k; ++i) {
    if (images[i].base != Word{gen_x(static_cast<std::uint32_t>(i))})
      return Check::fail("image of loop " + std::to_string(i + 1) + " does not project to gamma_" +
                         std::to_string(i + 1));
    if (!twists[i].ctx().valid(images[i].fiber))
      return Check::fail("image of loop " + std::to_string(i + 1) + " has an out-of-range fiber word");
  }
  for (std::size_t c = 0; c < attach_words.size(); ++c) {
    const Word& w = attach_words[c];
    const std::string cell = "2-cell " + std::to_string(c + 1);
    if (!base.valid(w)) return Check::fail(cell + ": attaching word uses a letter beyond gamma_" + std::to_string(k));
    if (k == 0) continue;
    const GroupCtx& fiber_ctx = twists.front().ctx();
    for (std::size_t g = 0; g < fiber_ctx.num_generators(); ++g) {
      const Word gen{fiber_ctx.generator(g)};
      if (!equal(fiber_ctx, rho_apply(twists, w, gen), gen))
        return Check::fail(cell + ": monodromy along the attaching word is not trivial");
    }
    BouquetElement product{Word{}, Word{}};
    for (const auto& letter : w.letters()) {
      const BouquetElement& img = images[letter.index];
      product = bouquet_mul(twists, product, letter.sign > 0 ? img : bouquet_inverse(twists, img));
    }
    if (!is_trivial(fiber_ctx, product.fiber))
      return Check::fail(cell + ": image of the boundary has nontrivial fiber component " +
                         format_word(product.fiber));
    if (product.base != w) return Check::fail(cell + ": image of the boundary does not project to the relation");
  }
  return Check::pass();
}

}  // namespace lefsec
