#pragma once

// Finite words over the two-letter alphabet {a, b}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qmarkoff {

/// a < b. Rendered as 'a'/'b' or '0'/'1'.
enum class Letter : std::uint8_t { a = 0, b = 1 };

constexpr Letter other(Letter x) { return x == Letter::a ? Letter::b : Letter::a; }

enum class Glyphs { ab, binary };

char glyph(Letter x, Glyphs glyphs = Glyphs::ab);

class BinaryWord {
 public:
  BinaryWord() = default;
  BinaryWord(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit BinaryWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Accepts letters from {a, b, 0, 1}; 0 is read as a and 1 as b.
  /// Throws PreconditionError on any other character.
  static BinaryWord parse(std::string_view text);

  std::string str(Glyphs glyphs = Glyphs::ab) const;

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  std::size_t count(Letter x) const;

  /// Letters [pos, pos + len), clipped to the word.
  BinaryWord substr(std::size_t pos, std::size_t len) const;
  BinaryWord prefix(std::size_t len) const { return substr(0, len); }
  bool starts_with(const BinaryWord& p) const;

  void push_back(Letter x) { letters_.push_back(x); }
  BinaryWord& operator+=(const BinaryWord& rhs);
  BinaryWord& operator+=(Letter x) {
    letters_.push_back(x);
    return *this;
  }

  /// Lexicographic with a < b; a proper prefix compares smaller.
  friend std::strong_ordering operator<=>(const BinaryWord&, const BinaryWord&) = default;
  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<Letter> letters_;
};

BinaryWord operator+(BinaryWord lhs, const BinaryWord& rhs);
BinaryWord operator+(BinaryWord lhs, Letter rhs);
BinaryWord operator+(Letter lhs, const BinaryWord& rhs);

/// Shorthand for BinaryWord::parse.
inline BinaryWord word(std::string_view text) { return BinaryWord::parse(text); }

/// u^k
BinaryWord power(const BinaryWord& u, std::size_t k);

BinaryWord reversal(const BinaryWord& w);

std::strong_ordering lex_cmp(const BinaryWord& u, const BinaryWord& v);

/// Shorter words first, then lexicographic. A total order.
std::strong_ordering radix_cmp(const BinaryWord& u, const BinaryWord& v);

struct RadixLess {
  bool operator()(const BinaryWord& u, const BinaryWord& v) const { return radix_cmp(u, v) < 0; }
};

/// Distinct length-n factors of w, sorted lexicographically. {ε} for n = 0.
std::vector<BinaryWord> factors(const BinaryWord& w, std::size_t n);

/// Length-n factors of the periodic sequence ...www..., sorted lexicographically.
std::vector<BinaryWord> cyclic_factors(const BinaryWord& w, std::size_t n);

/// True iff the counts of `x` over the family differ by at most one.
/// Throws PreconditionError when the words do not share a common length.
bool is_balanced_family(const std::vector<BinaryWord>& family, Letter x);

/// Balance of the biinfinite periodic sequence ^∞w^∞, checked on factor
/// lengths 1..|w|. Throws PreconditionError on the empty word.
bool is_balanced_periodic(const BinaryWord& w);

/// Markoff property of ^∞w^∞: around every xy with x != y, the mirrored
/// letters outward from the pair first disagree as (y on the left, x on the
/// right), or never disagree. Checked on a window of 4|w| letters, which is
/// exact for a |w|-periodic sequence. Throws PreconditionError on ε.
bool has_markoff_property_periodic(const BinaryWord& w);

/// Lower Christoffel word test: w = a, w = b, or w is the discretized
/// segment of slope |w|_b / |w|_a with coprime letter counts.
bool is_christoffel(const BinaryWord& w);

}  // namespace qmarkoff
