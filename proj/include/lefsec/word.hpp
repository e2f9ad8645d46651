// Word arithmetic in closed surface groups and free groups.
//
// Surface generators are a_1, b_1, ..., a_g, b_g with the single relator
// [a_1,b_1]...[a_g,b_g]; free generators are x_1, ..., x_k. Indices are
// 0-based in the API and 1-based in the textual form ("a1 b1^-1 x3").

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lefsec/intlinalg.hpp"

namespace lefsec {

enum class GenKind : std::uint8_t { a, b, x };

struct Generator {
  GenKind kind = GenKind::a;
  std::uint32_t index = 0;
  int sign = 1;

  Generator inverse() const { return {kind, index, -sign}; }
  bool is_inverse_of(const Generator& o) const {
    return kind == o.kind && index == o.index && sign == -o.sign;
  }
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator gen_a(std::uint32_t i, int sign = 1) { return {GenKind::a, i, sign}; }
inline Generator gen_b(std::uint32_t i, int sign = 1) { return {GenKind::b, i, sign}; }
inline Generator gen_x(std::uint32_t i, int sign = 1) { return {GenKind::x, i, sign}; }

/// A freely reduced word. Construction always reduces, so every Word value
/// satisfies the reducedness invariant.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Generator> letters);
  Word(std::initializer_list<Generator> letters)
      : Word(std::vector<Generator>(letters)) {}

  std::span<const Generator> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Generator> letters_;
};

Word free_reduce(std::span<const Generator> letters);
Word invert(const Word& w);
/// Concatenation with free reduction, no context checks.
Word concat(const Word& u, const Word& v);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "a1 b1^-1 a2". The empty string and "e" denote the identity.
Word parse_word(std::string_view text);
/// Identity prints as "e".
std::string format_word(const Word& w);
std::string format_generator(const Generator& g);

/// Presentation context: closed orientable surface group of genus g >= 1, or
/// free group of rank k >= 0.
class GroupCtx {
 public:
  enum class Kind { surface_closed, free };

  static GroupCtx surface(unsigned genus);
  static GroupCtx free(unsigned rank);

  Kind kind() const { return kind_; }
  bool is_surface() const { return kind_ == Kind::surface_closed; }
  unsigned genus() const { return is_surface() ? arity_ : 0; }
  unsigned rank() const { return is_surface() ? 0 : arity_; }
  /// 2g for surfaces, k for free groups.
  std::size_t num_generators() const { return is_surface() ? 2 * arity_ : arity_; }
  const Word& relator() const;

  bool valid(const Generator& g) const;
  bool valid(const Word& w) const;
  /// Throws std::out_of_range naming the offending generator.
  void require_valid(const Word& w) const;

  /// Generator with flat index 0 <= i < num_generators(): a_1,b_1,a_2,... or x_1,...
  Generator generator(std::size_t flat) const;
  std::size_t flat_index(const Generator& g) const;

  /// Maximum piece length of the symmetrized relator set (0 for free groups).
  std::size_t max_piece_length() const;
  /// Pieces all strictly shorter than |r|/6.
  bool small_cancellation_c16() const;

  friend bool operator==(const GroupCtx& l, const GroupCtx& r) {
    return l.kind_ == r.kind_ && l.arity_ == r.arity_;
  }

  struct Data;

 private:
  GroupCtx(Kind kind, unsigned arity);
  Kind kind_;
  unsigned arity_;
  std::shared_ptr<const Data> data_;
  friend std::vector<Word> dehn_trace(const GroupCtx&, const Word&);
  friend bool is_trivial(const GroupCtx&, const Word&);
};

Word multiply(const GroupCtx& ctx, const Word& u, const Word& v);
Word power(const GroupCtx& ctx, const Word& w, long long m);
bool is_trivial(const GroupCtx& ctx, const Word& w);
bool equal(const GroupCtx& ctx, const Word& u, const Word& v);
/// Exponent-sum vector in the basis (a_1,b_1,...,a_g,b_g); surfaces only.
IntVector abelianize(const GroupCtx& ctx, const Word& w);

Word cyclically_reduce(const Word& w);

/// Dehn reduction run with its intermediate words recorded; the last entry is
/// the terminal (irreducible) word. Only meaningful for genus >= 2.
std::vector<Word> dehn_trace(const GroupCtx& ctx, const Word& w);

}  // namespace lefsec
