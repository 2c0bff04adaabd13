#include "qmarkoff/words.hpp"

#include <algorithm>
#include <numeric>

#include "qmarkoff/errors.hpp"

namespace qmarkoff {

char glyph(Letter x, Glyphs glyphs) {
  if (glyphs == Glyphs::binary) return x == Letter::a ? '0' : '1';
  return x == Letter::a ? 'a' : 'b';
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a':
      case '0':
        letters.push_back(Letter::a);
        break;
      case 'b':
      case '1':
        letters.push_back(Letter::b);
        break;
      default:
        throw PreconditionError("malformed word '" + std::string(text) +
                                "': letters must be in {a,b} or {0,1}");
    }
  }
  return BinaryWord(std::move(letters));
}

std::string BinaryWord::str(Glyphs glyphs) const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(glyph(x, glyphs));
  return out;
}

std::size_t BinaryWord::count(Letter x) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
}

BinaryWord BinaryWord::substr(std::size_t pos, std::size_t len) const {
  if (pos >= letters_.size()) return {};
  len = std::min(len, letters_.size() - pos);
  return BinaryWord(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                        letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool BinaryWord::starts_with(const BinaryWord& p) const {
  return p.size() <= size() && std::equal(p.begin(), p.end(), letters_.begin());
}

BinaryWord& BinaryWord::operator+=(const BinaryWord& rhs) {
  letters_.insert(letters_.end(), rhs.begin(), rhs.end());
  return *this;
}

BinaryWord operator+(BinaryWord lhs, const BinaryWord& rhs) { return lhs += rhs; }
BinaryWord operator+(BinaryWord lhs, Letter rhs) { return lhs += rhs; }
BinaryWord operator+(Letter lhs, const BinaryWord& rhs) { return BinaryWord{lhs} + rhs; }

BinaryWord power(const BinaryWord& u, std::size_t k) {
  BinaryWord out;
  for (std::size_t i = 0; i < k; ++i) out += u;
  return out;
}

BinaryWord reversal(const BinaryWord& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return BinaryWord(std::move(letters));
}

std::strong_ordering lex_cmp(const BinaryWord& u, const BinaryWord& v) { return u <=> v; }

std::strong_ordering radix_cmp(const BinaryWord& u, const BinaryWord& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  return lex_cmp(u, v);
}

namespace {

std::vector<BinaryWord> sorted_unique(std::vector<BinaryWord> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

}  // namespace

std::vector<BinaryWord> factors(const BinaryWord& w, std::size_t n) {
  if (n == 0) return {BinaryWord{}};
  if (n > w.size()) return {};
  std::vector<BinaryWord> out;
  out.reserve(w.size() - n + 1);
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.push_back(w.substr(i, n));
  return sorted_unique(std::move(out));
}

std::vector<BinaryWord> cyclic_factors(const BinaryWord& w, std::size_t n) {
  if (w.empty()) throw PreconditionError("cyclic factors of the empty word");
  if (n == 0) return {BinaryWord{}};
  std::vector<BinaryWord> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    BinaryWord f;
    for (std::size_t k = 0; k < n; ++k) f += w[(i + k) % w.size()];
    out.push_back(std::move(f));
  }
  return sorted_unique(std::move(out));
}

bool is_balanced_family(const std::vector<BinaryWord>& family, Letter x) {
  if (family.empty()) return true;
  const std::size_t len = family.front().size();
  std::size_t lo = len;
  std::size_t hi = 0;
  for (const auto& u : family) {
    if (u.size() != len) throw PreconditionError("heterogeneous lengths");
    std::size_t c = u.count(x);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  return hi - lo <= 1;
}

bool is_balanced_periodic(const BinaryWord& w) {
  if (w.empty()) throw PreconditionError("is_balanced_periodic: empty word");
  for (std::size_t n = 1; n <= w.size(); ++n) {
    auto fs = cyclic_factors(w, n);
    // For a binary alphabet, balance in a is balance in b.
    if (!is_balanced_family(fs, Letter::a) || !is_balanced_family(fs, Letter::b)) return false;
  }
  return true;
}

bool has_markoff_property_periodic(const BinaryWord& w) {
  if (w.empty()) throw PreconditionError("has_markoff_property_periodic: empty word");
  const auto p = static_cast<std::ptrdiff_t>(w.size());
  auto at = [&](std::ptrdiff_t i) { return w[static_cast<std::size_t>(((i % p) + p) % p)]; };
  // Window of 4p letters: 2p mirrored pairs beyond the central xy.
  const std::ptrdiff_t reach = 2 * p;
  for (std::ptrdiff_t i = 0; i < p; ++i) {
    const Letter x = at(i);
    const Letter y = at(i + 1);
    if (x == y) continue;
    for (std::ptrdiff_t k = 1; k <= reach; ++k) {
      const Letter left = at(i - k);
      const Letter right = at(i + 1 + k);
      if (left == right) continue;
      if (left != y || right != x) return false;
      break;
    }
  }
  return true;
}

bool is_christoffel(const BinaryWord& w) {
  if (w.size() == 1) return true;
  if (w.empty()) return false;
  const std::size_t n = w.size();
  const std::size_t k = w.count(Letter::b);
  if (k == 0 || k == n || std::gcd(n, k) != 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t step = ((i + 1) * k) / n - (i * k) / n;
    if (w[i] != (step == 1 ? Letter::b : Letter::a)) return false;
  }
  return true;
}

}  // namespace qmarkoff
