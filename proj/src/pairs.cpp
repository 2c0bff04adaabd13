#include "qmarkoff/pairs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qmarkoff/errors.hpp"
#include "qmarkoff/parallel.hpp"

namespace qmarkoff {

Pattern Pattern::make(std::vector<std::pair<std::int64_t, Letter>> cells) {
  std::sort(cells.begin(), cells.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  Pattern p;
  for (const auto& [pos, letter] : cells) {
    if (!p.support.empty() && p.support.back() == pos) {
      throw PreconditionError("pattern support repeats position " + std::to_string(pos));
    }
    p.support.push_back(pos);
    p.letters.push_back(letter);
  }
  return p;
}

Pattern Pattern::contiguous(std::int64_t first, const BinaryWord& w) {
  Pattern p;
  for (std::size_t k = 0; k < w.size(); ++k) {
    p.support.push_back(first + static_cast<std::int64_t>(k));
    p.letters.push_back(w[k]);
  }
  return p;
}

Pattern Pattern::shifted(std::int64_t by) const {
  Pattern p = *this;
  for (auto& pos : p.support) pos += by;
  return p;
}

AsymptoticPair::AsymptoticPair(WindowFn s, std::vector<std::int64_t> difference_set)
    : s_(std::move(s)), diff_(std::move(difference_set)) {
  std::sort(diff_.begin(), diff_.end());
  diff_.erase(std::unique(diff_.begin(), diff_.end()), diff_.end());
}

BinaryWord AsymptoticPair::s_window(std::int64_t first, std::size_t count) const {
  return s_(first, count);
}

BinaryWord AsymptoticPair::t_window(std::int64_t first, std::size_t count) const {
  BinaryWord w = s_(first, count);
  std::vector<Letter> letters(w.begin(), w.end());
  const std::int64_t last = first + static_cast<std::int64_t>(count);
  for (auto d : diff_) {
    if (d >= first && d < last) {
      auto& l = letters[static_cast<std::size_t>(d - first)];
      l = other(l);
    }
  }
  return BinaryWord(std::move(letters));
}

AsymptoticPair AsymptoticPair::swapped() const {
  AsymptoticPair flipped = *this;
  flipped.s_ = [self = *this](std::int64_t first, std::size_t count) { return self.t_window(first, count); };
  return flipped;
}

AsymptoticPair AsymptoticPair::shifted(std::int64_t by) const {
  std::vector<std::int64_t> diff;
  for (auto d : diff_) diff.push_back(d - by);
  return AsymptoticPair([s = s_, by](std::int64_t first, std::size_t count) { return s(first + by, count); },
                        std::move(diff));
}

std::pair<std::size_t, std::size_t> occ_diff(const AsymptoticPair& pair, const Pattern& p) {
  if (p.support.empty() || pair.difference_set().empty()) return {0, 0};
  std::set<std::int64_t> shifts;
  for (auto d : pair.difference_set()) {
    for (auto pos : p.support) shifts.insert(d - pos);
  }
  const std::int64_t first = *shifts.begin() + p.support.front();
  const std::int64_t last = *shifts.rbegin() + p.support.back();
  const auto count = static_cast<std::size_t>(last - first + 1);
  const BinaryWord s = pair.s_window(first, count);
  const BinaryWord t = pair.t_window(first, count);

  auto matches = [&](const BinaryWord& w, std::int64_t n) {
    for (std::size_t k = 0; k < p.support.size(); ++k) {
      if (w[static_cast<std::size_t>(n + p.support[k] - first)] != p.letters[k]) return false;
    }
    return true;
  };
  std::pair<std::size_t, std::size_t> out{0, 0};
  for (auto n : shifts) {
    const bool in_s = matches(s, n);
    const bool in_t = matches(t, n);
    if (in_s && !in_t) ++out.first;
    if (in_t && !in_s) ++out.second;
  }
  return out;
}

namespace {

// Patterns on `support` read off s and t at every shift touching the
// difference set; anything else occurs at the same shifts in both.
std::vector<Pattern> touching_patterns(const AsymptoticPair& pair, const std::vector<std::int64_t>& support) {
  std::set<std::vector<Letter>> seen;
  for (auto d : pair.difference_set()) {
    for (auto pos : support) {
      const std::int64_t n = d - pos;
      const std::int64_t first = n + support.front();
      const auto count = static_cast<std::size_t>(support.back() - support.front() + 1);
      for (const BinaryWord& w : {pair.s_window(first, count), pair.t_window(first, count)}) {
        std::vector<Letter> letters;
        for (auto q : support) letters.push_back(w[static_cast<std::size_t>(q - support.front())]);
        seen.insert(std::move(letters));
      }
    }
  }
  std::vector<Pattern> out;
  for (const auto& letters : seen) out.push_back({support, letters});
  return out;
}

IndistinguishabilityReport check_supports(const AsymptoticPair& pair, std::size_t radius,
                                          const std::vector<std::vector<std::int64_t>>& supports) {
  struct Outcome {
    std::size_t patterns = 0;
    std::optional<Pattern> witness;
    std::pair<std::size_t, std::size_t> counts{0, 0};
  };
  const auto outcomes = parallel_map(supports.size(), [&](std::size_t i) {
    Outcome o;
    for (auto& p : touching_patterns(pair, supports[i])) {
      ++o.patterns;
      const auto counts = occ_diff(pair, p);
      if (counts.first != counts.second && !o.witness) {
        o.witness = std::move(p);
        o.counts = counts;
      }
    }
    return o;
  });
  IndistinguishabilityReport report;
  report.radius = radius;
  report.supports_checked = supports.size();
  for (const auto& o : outcomes) {
    report.patterns_checked += o.patterns;
    if (o.witness && report.holds) {
      report.holds = false;
      report.witness = o.witness;
      report.witness_counts = o.counts;
    }
  }
  return report;
}

}  // namespace

IndistinguishabilityReport is_indistinguishable_up_to(const AsymptoticPair& pair, std::size_t radius) {
  if (radius == 0) throw PreconditionError("radius must be >= 1");
  const auto r = static_cast<std::int64_t>(radius);
  std::vector<std::vector<std::int64_t>> supports;
  for (std::int64_t lo = -r; lo <= r; ++lo) {
    for (std::int64_t hi = lo; hi <= r; ++hi) {
      std::vector<std::int64_t> s;
      for (std::int64_t k = lo; k <= hi; ++k) s.push_back(k);
      supports.push_back(std::move(s));
    }
  }
  return check_supports(pair, radius, supports);
}

IndistinguishabilityReport is_indistinguishable_bruteforce(const AsymptoticPair& pair, std::size_t radius) {
  if (radius == 0) throw PreconditionError("radius must be >= 1");
  if (radius > 6) throw PreconditionError("brute-force pattern check is limited to radius <= 6");
  const auto r = static_cast<std::int64_t>(radius);
  const std::size_t width = 2 * radius + 1;
  std::vector<std::vector<std::int64_t>> supports;
  for (std::size_t mask = 1; mask < (std::size_t{1} << width); ++mask) {
    std::vector<std::int64_t> s;
    for (std::size_t k = 0; k < width; ++k) {
      if (mask >> k & 1) s.push_back(static_cast<std::int64_t>(k) - r);
    }
    supports.push_back(std::move(s));
  }
  return check_supports(pair, radius, supports);
}

AsymptoticPair build_pair(const BalancedSpec& spec, std::int64_t n0) {
  if (!has_central_factorization(spec)) {
    throw PreconditionError("no central factorization for spec " + spec.str());
  }
  return AsymptoticPair([spec, n0](std::int64_t first, std::size_t count) { return window(spec, first - n0, count); },
                        {n0 - 1, n0});
}

AsymptoticPair flip_one_position(const BalancedSpec& spec, std::int64_t pos) {
  return AsymptoticPair([spec](std::int64_t first, std::size_t count) { return window(spec, first, count); }, {pos});
}

}  // namespace qmarkoff
