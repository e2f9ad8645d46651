#include "lefsec/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace lefsec {

Word::Word(std::vector<Generator> letters) {
  letters_.reserve(letters.size());
  for (const Generator& g : letters) {
    if (!letters_.empty() && letters_.back().is_inverse_of(g)) {
      letters_.pop_back();
    } else {
      letters_.push_back(g);
    }
  }
}

Word free_reduce(std::span<const Generator> letters) {
  return Word(std::vector<Generator>(letters.begin(), letters.end()));
}

Word invert(const Word& w) {
  std::vector<Generator> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Generator> out(u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(out));
}

Word cyclically_reduce(const Word& w) {
  auto l = w.letters();
  std::size_t i = 0, j = l.size();
  while (j - i >= 2 && l[i].is_inverse_of(l[j - 1])) {
    ++i;
    --j;
  }
  return free_reduce(l.subspan(i, j - i));
}

std::string format_generator(const Generator& g) {
  std::string s;
  s += g.kind == GenKind::a ? 'a' : g.kind == GenKind::b ? 'b' : 'x';
  s += std::to_string(g.index + 1);
  if (g.sign < 0) s += "^-1";
  return s;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += format_generator(w[i]);
  }
  return s;
}

namespace {

Generator parse_token(std::string_view tok) {
  auto fail = [&]() -> Generator {
    throw ParseError("malformed word token '" + std::string(tok) + "'");
  };
  if (tok.size() < 2) return fail();
  Generator g;
  switch (tok[0]) {
    case 'a': g.kind = GenKind::a; break;
    case 'b': g.kind = GenKind::b; break;
    case 'x': g.kind = GenKind::x; break;
    default: return fail();
  }
  std::size_t caret = tok.find('^');
  std::string_view digits = tok.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
  if (digits.empty() || digits.front() == '0' ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return fail();
  unsigned long idx = 0;
  auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
  if (ec != std::errc{} || p != digits.data() + digits.size() || idx == 0 || idx > (1ul << 20))
    return fail();
  g.index = static_cast<std::uint32_t>(idx - 1);
  g.sign = 1;
  if (caret != std::string_view::npos) {
    std::string_view exp = tok.substr(caret + 1);
    if (exp == "-1") g.sign = -1;
    else if (exp != "1") return fail();
  }
  return g;
}

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<Generator> letters;
  std::size_t i = 0;
  std::vector<std::string_view> tokens;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.size() == 1 && tokens[0] == "e") return {};
  for (auto tok : tokens) letters.push_back(parse_token(tok));
  return Word(std::move(letters));
}

// ---------------------------------------------------------------------------
// GroupCtx

struct GroupCtx::Data {
  Word relator;
  // Letter codes: +(flat+1) / -(flat+1). All cyclic rotations of r and r^-1.
  std::vector<std::vector<int>> rotations;
};

namespace {

std::shared_ptr<const GroupCtx::Data> make_surface_data(unsigned g) {
  auto d = std::make_shared<GroupCtx::Data>();
  std::vector<Generator> r;
  for (std::uint32_t i = 0; i < g; ++i) {
    r.push_back(gen_a(i));
    r.push_back(gen_b(i));
    r.push_back(gen_a(i, -1));
    r.push_back(gen_b(i, -1));
  }
  d->relator = Word(std::move(r));
  return d;
}

}  // namespace

GroupCtx::GroupCtx(Kind kind, unsigned arity) : kind_(kind), arity_(arity) {}

GroupCtx GroupCtx::surface(unsigned genus) {
  if (genus < 1) throw std::invalid_argument("surface genus must be >= 1");
  GroupCtx ctx(Kind::surface_closed, genus);
  auto data = std::const_pointer_cast<Data>(make_surface_data(genus));
  auto encode = [&](const Word& w) {
    std::vector<int> out;
    for (const auto& l : w.letters()) {
      int code = static_cast<int>(ctx.flat_index(l)) + 1;
      out.push_back(l.sign > 0 ? code : -code);
    }
    return out;
  };
  for (const Word& base : {data->relator, invert(data->relator)}) {
    std::vector<int> codes = encode(base);
    for (std::size_t s = 0; s < codes.size(); ++s) {
      data->rotations.push_back(codes);
      std::rotate(codes.begin(), codes.begin() + 1, codes.end());
    }
  }
  ctx.data_ = std::move(data);
  return ctx;
}

GroupCtx GroupCtx::free(unsigned rank) {
  GroupCtx ctx(Kind::free, rank);
  ctx.data_ = std::make_shared<Data>();
  return ctx;
}

const Word& GroupCtx::relator() const { return data_->relator; }

bool GroupCtx::valid(const Generator& g) const {
  if (g.sign != 1 && g.sign != -1) return false;
  if (is_surface()) return (g.kind == GenKind::a || g.kind == GenKind::b) && g.index < arity_;
  return g.kind == GenKind::x && g.index < arity_;
}

bool GroupCtx::valid(const Word& w) const {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [this](const Generator& g) { return valid(g); });
}

void GroupCtx::require_valid(const Word& w) const {
  for (const auto& g : w.letters())
    if (!valid(g)) {
      std::ostringstream os;
      os << "generator " << format_generator(g) << " is out of range for "
         << (is_surface() ? "surface group of genus " : "free group of rank ") << arity_;
      throw std::out_of_range(os.str());
    }
}

Generator GroupCtx::generator(std::size_t flat) const {
  if (flat >= num_generators()) throw std::out_of_range("generator index out of range");
  auto i = static_cast<std::uint32_t>(is_surface() ? flat / 2 : flat);
  if (!is_surface()) return gen_x(i);
  return flat % 2 == 0 ? gen_a(i) : gen_b(i);
}

std::size_t GroupCtx::flat_index(const Generator& g) const {
  if (!valid(g)) throw std::out_of_range("generator " + format_generator(g) + " out of range");
  if (!is_surface()) return g.index;
  return 2 * g.index + (g.kind == GenKind::b ? 1 : 0);
}

std::size_t GroupCtx::max_piece_length() const {
  const auto& rots = data_->rotations;
  std::size_t best = 0;
  for (std::size_t i = 0; i < rots.size(); ++i)
    for (std::size_t j = 0; j < rots.size(); ++j) {
      if (i == j || rots[i] == rots[j]) continue;
      std::size_t p = 0;
      while (p < rots[i].size() && rots[i][p] == rots[j][p]) ++p;
      best = std::max(best, p);
    }
  return best;
}

bool GroupCtx::small_cancellation_c16() const {
  if (!is_surface()) return true;
  return 6 * max_piece_length() < relator().size();
}

// ---------------------------------------------------------------------------
// Arithmetic

Word multiply(const GroupCtx& ctx, const Word& u, const Word& v) {
  ctx.require_valid(u);
  ctx.require_valid(v);
  return concat(u, v);
}

Word power(const GroupCtx& ctx, const Word& w, long long m) {
  ctx.require_valid(w);
  const Word base = m < 0 ? invert(w) : w;
  const unsigned long long n = m < 0 ? 0ull - static_cast<unsigned long long>(m) : static_cast<unsigned long long>(m);
  std::vector<Generator> out;
  out.reserve(base.size() * n);
  for (unsigned long long i = 0; i < n; ++i)
    out.insert(out.end(), base.letters().begin(), base.letters().end());
  return Word(std::move(out));
}

IntVector abelianize(const GroupCtx& ctx, const Word& w) {
  if (!ctx.is_surface()) throw std::invalid_argument("abelianize requires a surface group context");
  IntVector v = zero_vector(ctx.num_generators());
  for (const auto& g : w.letters()) v[ctx.flat_index(g)] += g.sign;
  return v;
}

namespace {

std::vector<int> encode(const GroupCtx& ctx, const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& g : w.letters()) {
    int code = static_cast<int>(ctx.flat_index(g)) + 1;
    out.push_back(g.sign > 0 ? code : -code);
  }
  return out;
}

Word decode(const GroupCtx& ctx, const std::vector<int>& codes) {
  std::vector<Generator> out;
  out.reserve(codes.size());
  for (int c : codes) {
    Generator g = ctx.generator(static_cast<std::size_t>(std::abs(c) - 1));
    if (c < 0) g = g.inverse();
    out.push_back(g);
  }
  return Word(std::move(out));
}

void reduce_codes(std::vector<int>& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int c : w) {
    if (!out.empty() && out.back() == -c) out.pop_back();
    else out.push_back(c);
  }
  std::size_t i = 0, j = out.size();
  while (j - i >= 2 && out[i] == -out[j - 1]) {
    ++i;
    --j;
  }
  w.assign(out.begin() + static_cast<std::ptrdiff_t>(i), out.begin() + static_cast<std::ptrdiff_t>(j));
}

// One Dehn step: leftmost start position, longest match beyond half the
// relator length. Returns false when no such match exists.
bool dehn_step(const std::vector<std::vector<int>>& rotations, std::vector<int>& w) {
  if (rotations.empty()) return false;
  const std::size_t rlen = rotations.front().size();
  const std::size_t half = rlen / 2;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    std::size_t best_len = 0;
    const std::vector<int>* best_rot = nullptr;
    for (const auto& rot : rotations) {
      std::size_t len = 0;
      while (len < rlen && pos + len < w.size() && w[pos + len] == rot[len]) ++len;
      if (len > half && len > best_len) {
        best_len = len;
        best_rot = &rot;
      }
    }
    if (best_rot) {
      // rot = u c with u the matched prefix, so u = c^{-1}.
      std::vector<int> repl;
      for (std::size_t k = rlen; k > best_len; --k) repl.push_back(-(*best_rot)[k - 1]);
      std::vector<int> next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), repl.begin(), repl.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + best_len), w.end());
      w = std::move(next);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Word> dehn_trace(const GroupCtx& ctx, const Word& w) {
  ctx.require_valid(w);
  std::vector<int> codes = encode(ctx, w);
  reduce_codes(codes);
  std::vector<Word> trace{decode(ctx, codes)};
  while (dehn_step(ctx.data_->rotations, codes)) {
    reduce_codes(codes);
    trace.push_back(decode(ctx, codes));
  }
  return trace;
}

bool is_trivial(const GroupCtx& ctx, const Word& w) {
  ctx.require_valid(w);
  if (!ctx.is_surface()) return w.empty();
  if (ctx.genus() == 1) return is_zero(abelianize(ctx, w));
  std::vector<int> codes = encode(ctx, w);
  reduce_codes(codes);
  while (dehn_step(ctx.data_->rotations, codes)) reduce_codes(codes);
  return codes.empty();
}

bool equal(const GroupCtx& ctx, const Word& u, const Word& v) {
  return is_trivial(ctx, multiply(ctx, u, invert(v)));
}

}  // namespace lefsec
