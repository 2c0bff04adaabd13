#include "qmarkoff/language.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "qmarkoff/morphism.hpp"
#include "qmarkoff/parallel.hpp"

namespace qmarkoff {

// ---------------------------------------------------------------------------
// Mechanical and characteristic words

MechanicalSpec MechanicalSpec::make(Rational alpha, Rational rho, MechanicalKind kind) {
  if (alpha < 0 || alpha > 1) {
    throw PreconditionError("mechanical slope must lie in [0,1], got " + to_string(alpha));
  }
  rho -= Rational(floor(rho));
  return {std::move(alpha), std::move(rho), kind};
}

std::size_t MechanicalSpec::period() const {
  return boost::multiprecision::denominator(alpha).convert_to<std::size_t>();
}

Letter mechanical_letter(const MechanicalSpec& spec, std::int64_t pos) {
  const Rational here = spec.alpha * pos + spec.rho;
  const Rational next = here + spec.alpha;
  const BigInt step = spec.kind == MechanicalKind::lower ? BigInt(floor(next) - floor(here))
                                                         : BigInt(ceil(next) - ceil(here));
  return step == 0 ? Letter::a : Letter::b;
}

namespace {

void check_directive(std::span<const unsigned> directive) {
  if (directive.empty()) throw PreconditionError("characteristic directive is empty");
  if (std::find(directive.begin(), directive.end(), 0u) != directive.end()) {
    throw PreconditionError("characteristic directive entries must be positive");
  }
}

}  // namespace

BinaryWord characteristic_word(std::span<const unsigned> directive, std::size_t length) {
  check_directive(directive);
  if (length == 0) return {};
  BinaryWord older{Letter::b};
  BinaryWord current{Letter::a};
  for (std::size_t k = 0; current.size() < length; ++k) {
    BinaryWord next = power(current, directive[k % directive.size()]) + older;
    older = std::move(current);
    current = std::move(next);
  }
  return current.prefix(length);
}

// ---------------------------------------------------------------------------
// BalancedSpec

BalancedSpec BalancedSpec::periodic(BinaryWord w) {
  if (w.empty() || !is_balanced_periodic(w)) {
    throw PreconditionError("periodic spec needs a word whose periodic extension is balanced, got '" +
                            w.str() + "'");
  }
  return BalancedSpec(PeriodicSpec{std::move(w)});
}

BalancedSpec BalancedSpec::characteristic(std::vector<unsigned> directive) {
  check_directive(directive);
  return BalancedSpec(CharacteristicSpec{std::move(directive)});
}

BalancedSpec BalancedSpec::skew(BinaryWord m, SkewForm form, Letter x) {
  if (form == SkewForm::xxyxx && !m.empty()) {
    throw PreconditionError("skew form xxyxx takes no middle word m");
  }
  if (!is_christoffel(Letter::a + m + Letter::b)) {
    throw PreconditionError("skew spec needs a" + m.str() + "b to be a Christoffel word");
  }
  return BalancedSpec(SkewSpec{std::move(m), form, x});
}

BalancedSpec BalancedSpec::mechanical(MechanicalSpec spec) {
  return BalancedSpec(MechanicalSpec::make(spec.alpha, spec.rho, spec.kind));
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto at = text.find(sep);
    out.push_back(text.substr(0, at));
    if (at == std::string_view::npos) break;
    text.remove_prefix(at + 1);
  }
  return out;
}

std::map<std::string, std::string, std::less<>> key_values(std::string_view body,
                                                           std::string_view spec_text) {
  std::map<std::string, std::string, std::less<>> out;
  if (body.empty()) return out;
  for (auto item : split(body, ',')) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw PreconditionError("unknown spec '" + std::string(spec_text) + "': expected key=value");
    }
    out.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
  }
  return out;
}

std::string take(std::map<std::string, std::string, std::less<>>& kv, std::string_view key,
                 std::string fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  std::string value = std::move(it->second);
  kv.erase(it);
  return value;
}

void reject_leftovers(const std::map<std::string, std::string, std::less<>>& kv,
                      std::string_view spec_text) {
  if (!kv.empty()) {
    throw PreconditionError("unknown spec '" + std::string(spec_text) + "': unexpected key '" +
                            kv.begin()->first + "'");
  }
}

}  // namespace

BalancedSpec BalancedSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (head == "fibonacci" && colon == std::string_view::npos) return fibonacci();
  if (head == "periodic" && colon != std::string_view::npos) return periodic(word(body));
  if (head == "characteristic" && colon != std::string_view::npos) {
    std::vector<unsigned> directive;
    for (auto item : split(body, ',')) {
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc{} || ptr != item.data() + item.size()) {
        throw PreconditionError("unknown spec '" + std::string(text) + "': bad directive entry");
      }
      directive.push_back(value);
    }
    return characteristic(std::move(directive));
  }
  if (head == "skew") {
    auto kv = key_values(body, text);
    BinaryWord m = word(take(kv, "m", ""));
    const std::string form = take(kv, "form", "xxyxx");
    const std::string xy = take(kv, "xy", "ab");
    reject_leftovers(kv, text);
    if (form != "xxyxx" && form != "blocks") {
      throw PreconditionError("unknown spec '" + std::string(text) + "': form must be xxyxx or blocks");
    }
    if (xy != "ab" && xy != "ba") {
      throw PreconditionError("unknown spec '" + std::string(text) + "': xy must be ab or ba");
    }
    return skew(std::move(m), form == "xxyxx" ? SkewForm::xxyxx : SkewForm::blocks,
                xy == "ab" ? Letter::a : Letter::b);
  }
  if (head == "mechanical") {
    auto kv = key_values(body, text);
    const std::string alpha = take(kv, "alpha", "");
    const std::string rho = take(kv, "rho", "0");
    const std::string kind = take(kv, "kind", "lower");
    reject_leftovers(kv, text);
    if (alpha.empty()) throw PreconditionError("unknown spec '" + std::string(text) + "': alpha required");
    if (kind != "lower" && kind != "upper") {
      throw PreconditionError("unknown spec '" + std::string(text) + "': kind must be lower or upper");
    }
    return mechanical(MechanicalSpec::make(parse_rational(alpha), parse_rational(rho),
                                           kind == "lower" ? MechanicalKind::lower : MechanicalKind::upper));
  }
  throw PreconditionError("unknown spec '" + std::string(text) + "'");
}

std::string BalancedSpec::str() const {
  struct Render {
    std::string operator()(const PeriodicSpec& s) const { return "periodic:" + s.word.str(); }
    std::string operator()(const CharacteristicSpec& s) const {
      std::string out = "characteristic:";
      for (std::size_t i = 0; i < s.directive.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.directive[i]);
      }
      return out;
    }
    std::string operator()(const SkewSpec& s) const {
      return "skew:m=" + s.m.str() + ",form=" + (s.form == SkewForm::xxyxx ? "xxyxx" : "blocks") +
             ",xy=" + (s.x == Letter::a ? "ab" : "ba");
    }
    std::string operator()(const MechanicalSpec& s) const {
      return "mechanical:alpha=" + to_string(s.alpha) + ",rho=" + to_string(s.rho) +
             ",kind=" + (s.kind == MechanicalKind::lower ? "lower" : "upper");
    }
  };
  return std::visit(Render{}, v_);
}

std::size_t BalancedSpec::period() const {
  struct Period {
    std::size_t operator()(const PeriodicSpec& s) const { return s.word.size(); }
    std::size_t operator()(const CharacteristicSpec&) const { return 0; }
    std::size_t operator()(const SkewSpec& s) const { return s.form == SkewForm::xxyxx ? 1 : s.m.size() + 2; }
    std::size_t operator()(const MechanicalSpec& s) const { return s.period(); }
  };
  return std::visit(Period{}, v_);
}

// ---------------------------------------------------------------------------
// Windows and central factorizations

bool has_central_factorization(const BalancedSpec& spec) {
  return std::holds_alternative<CharacteristicSpec>(spec.variant()) ||
         std::holds_alternative<SkewSpec>(spec.variant());
}

CentralFactorization central_factorization(const BalancedSpec& spec, std::size_t length) {
  if (const auto* c = std::get_if<CharacteristicSpec>(&spec.variant())) {
    return {Letter::a, Letter::b, characteristic_word(c->directive, length)};
  }
  if (const auto* s = std::get_if<SkewSpec>(&spec.variant())) {
    const BinaryWord unit = s->form == SkewForm::xxyxx ? BinaryWord{s->x} : s->m + s->y() + s->x;
    return {s->x, s->y(), power(unit, length / unit.size() + 1).prefix(length)};
  }
  throw PreconditionError("no central factorization for spec " + spec.str());
}

BinaryWord window(const BalancedSpec& spec, std::int64_t first, std::size_t count) {
  std::vector<Letter> out;
  out.reserve(count);
  const std::int64_t last = first + static_cast<std::int64_t>(count);
  if (const auto* p = std::get_if<PeriodicSpec>(&spec.variant())) {
    const auto n = static_cast<std::int64_t>(p->word.size());
    for (std::int64_t i = first; i < last; ++i) out.push_back(p->word[static_cast<std::size_t>(((i % n) + n) % n)]);
  } else if (const auto* m = std::get_if<MechanicalSpec>(&spec.variant())) {
    for (std::int64_t i = first; i < last; ++i) out.push_back(mechanical_letter(*m, i));
  } else {
    // position i >= 1 reads p[i-1]; i <= -2 reads p[-i-2]
    const std::int64_t reach = std::max<std::int64_t>({0, last - 1, -first - 1});
    const CentralFactorization cf = central_factorization(spec, static_cast<std::size_t>(reach));
    for (std::int64_t i = first; i < last; ++i) {
      if (i == -1) {
        out.push_back(cf.x);
      } else if (i == 0) {
        out.push_back(cf.y);
      } else if (i > 0) {
        out.push_back(cf.p[static_cast<std::size_t>(i - 1)]);
      } else {
        out.push_back(cf.p[static_cast<std::size_t>(-i - 2)]);
      }
    }
  }
  return BinaryWord(std::move(out));
}

std::pair<BinaryWord, BinaryWord> compact_representations(const BinaryWord& w) {
  const BinaryWord left = reversal(w);
  return {left + word("ab") + w, left + word("ba") + w};
}

// ---------------------------------------------------------------------------
// Factor languages

FactorLanguage enumerate_factors(const BalancedSpec& spec, std::size_t n) {
  if (n == 0) return {0, {BinaryWord{}}};
  if (const auto* p = std::get_if<PeriodicSpec>(&spec.variant())) {
    return {n, cyclic_factors(p->word, n)};
  }
  if (std::holds_alternative<CharacteristicSpec>(spec.variant())) {
    const BinaryWord w = central_factorization(spec, n - 1).p;
    const auto [with_ab, with_ba] = compact_representations(w);
    auto from_ab = factors(with_ab, n);
    if (from_ab != factors(with_ba, n)) {
      throw VerificationFailure("compact representations disagree at n = " + std::to_string(n) +
                                " for " + spec.str());
    }
    return {n, std::move(from_ab)};
  }
  const auto radius = static_cast<std::int64_t>(2 * n + spec.period());
  return {n, factors(window(spec, -radius, static_cast<std::size_t>(2 * radius)), n)};
}

std::string_view to_string(ChangeKind kind) {
  switch (kind) {
    case ChangeKind::flip_ab_ba:
      return "flip_ab_ba";
    case ChangeKind::last_letter:
      return "last_letter";
    case ChangeKind::wrap_awa:
      return "bw_to_awa";
    case ChangeKind::wrap_awb:
      return "bw_to_awb";
    case ChangeKind::composite:
      return "composite";
  }
  return "composite";
}

bool Change::flip_prefix_condition() const {
  return kind == ChangeKind::flip_ab_ba && (u.starts_with(v) || v.starts_with(u));
}

Change classify_change(const BinaryWord& from, const BinaryWord& to) {
  Change c{from, to, ChangeKind::composite, {}, {}};
  if (from.size() == to.size()) {
    std::vector<std::size_t> diff;
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (from[i] != to[i]) diff.push_back(i);
    }
    if (diff.size() == 1 && diff[0] + 1 == from.size() && from.back() == Letter::a) {
      c.kind = ChangeKind::last_letter;
      c.u = from.prefix(from.size() - 1);
    } else if (diff.size() == 2 && diff[1] == diff[0] + 1 && from[diff[0]] == Letter::a &&
               from[diff[1]] == Letter::b) {
      c.kind = ChangeKind::flip_ab_ba;
      c.u = reversal(from.prefix(diff[0]));
      c.v = from.substr(diff[1] + 1, from.size());
    }
    return c;
  }
  if (to.size() == from.size() + 1 && !from.empty() && from.front() == Letter::b) {
    const BinaryWord w = from.substr(1, from.size());
    if (to == Letter::a + w + Letter::a) {
      c.kind = ChangeKind::wrap_awa;
      c.u = w;
    } else if (to == Letter::a + w + Letter::b) {
      c.kind = ChangeKind::wrap_awb;
      c.u = w;
    }
  }
  return c;
}

FlipChain flip_permutation(const BalancedSpec& spec, std::size_t n) {
  if (n == 0) throw PreconditionError("flip_permutation needs n >= 1");
  FactorLanguage lang = enumerate_factors(spec, n);
  if (lang.factors.size() != n + 1) {
    throw PreconditionError("complexity violation: " + std::to_string(lang.factors.size()) +
                            " factors of length " + std::to_string(n) + " in " + spec.str());
  }
  FlipChain chain{n, {}, std::move(lang.factors), {}};
  const bool central = has_central_factorization(spec);
  if (central) {
    chain.w = central_factorization(spec, n - 1).p;
  } else {
    chain.w = chain.factors.back().substr(1, n);
  }
  auto fail = [&](const std::string& what) {
    throw VerificationFailure("flip chain of length " + std::to_string(n) + " in " + spec.str() +
                              ": " + what);
  };
  if (chain.factors.front() != Letter::a + chain.w) fail("smallest factor is not a·w");
  if (chain.factors.back() != Letter::b + chain.w) fail("largest factor is not b·w");

  std::size_t last_letter_steps = 0;
  for (std::size_t j = 0; j + 1 < chain.factors.size(); ++j) {
    Change c = classify_change(chain.factors[j], chain.factors[j + 1]);
    if (c.kind == ChangeKind::last_letter) {
      ++last_letter_steps;
      if (c.u != reversal(chain.w)) fail("last-letter step is not ~w a -> ~w b");
    } else if (c.kind == ChangeKind::flip_ab_ba) {
      if (!chain.w.starts_with(c.u) || !chain.w.starts_with(c.v)) fail("flip around non-prefixes of w");
    } else {
      fail("step " + c.from.str() + " -> " + c.to.str() + " is not a local change");
    }
    chain.changes.push_back(std::move(c));
  }
  if (last_letter_steps != 1) fail("expected exactly one last-letter step");

  if (central) {
    // The chain is the orbit of u -> (factor of ~w ba w at u's position in ~w ab w).
    const auto [with_ab, with_ba] = compact_representations(chain.w);
    for (std::size_t i = 0; i + n <= with_ab.size(); ++i) {
      const BinaryWord u = with_ab.substr(i, n);
      const BinaryWord image = with_ba.substr(i, n);
      auto at = std::lower_bound(chain.factors.begin(), chain.factors.end(), u);
      if (at == chain.factors.end() || *at != u) fail("compact representation leaves the language");
      const std::size_t j = static_cast<std::size_t>(at - chain.factors.begin());
      if (image != chain.factors[(j + 1) % (n + 1)]) fail("chain is not the compact-representation cycle");
    }
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Radix monotonicity

ChainLink compare_radix_pair(const BinaryWord& u, const BinaryWord& v) {
  ChainLink link{classify_change(u, v), q_markoff(v) - q_markoff(u), false};
  link.increasing = poly_is_nonneg_nonzero(link.difference);
  return link;
}

MonotonicityViolation::MonotonicityViolation(ChainLink link)
    : VerificationFailure("q_markoff not increasing from '" + link.change.from.str() + "' to '" +
                          link.change.to.str() + "': difference " + link.difference.str()),
      link_(std::move(link)) {}

RadixChainReport radix_chain_check(const BalancedSpec& spec, std::size_t max_n) {
  if (max_n == 0) throw PreconditionError("radix_chain_check needs max_n >= 1");
  auto languages = parallel_map(max_n, [&](std::size_t i) { return enumerate_factors(spec, i + 1); });

  RadixChainReport report;
  report.factors.emplace_back();
  for (auto& lang : languages) {
    for (auto& f : lang.factors) report.factors.push_back(std::move(f));
  }
  const auto polys = parallel_map(report.factors.size(),
                                  [&](std::size_t i) { return q_markoff(report.factors[i]); });
  report.links.reserve(report.factors.size() - 1);
  for (std::size_t i = 0; i + 1 < report.factors.size(); ++i) {
    ChainLink link{classify_change(report.factors[i], report.factors[i + 1]), polys[i + 1] - polys[i], false};
    link.increasing = poly_is_nonneg_nonzero(link.difference);
    if (!link.increasing) throw MonotonicityViolation(std::move(link));
    report.links.push_back(std::move(link));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Classification

std::string_view to_string(BalancedClass c) {
  switch (c) {
    case BalancedClass::M1:
      return "M1";
    case BalancedClass::M2:
      return "M2";
    case BalancedClass::M3:
      return "M3";
    case BalancedClass::M4:
      return "M4";
  }
  return "M1";
}

std::optional<std::size_t> mirror_radius(const BalancedSpec& spec, std::int64_t c, std::size_t max_radius) {
  const auto reach = static_cast<std::int64_t>(max_radius);
  const BinaryWord win = window(spec, c - 1 - reach, static_cast<std::size_t>(2 * reach + 2));
  // win[reach] is s_{c-1}, win[reach + 1] is s_c
  const auto mid = static_cast<std::size_t>(reach);
  if (win[mid] == win[mid + 1]) return std::nullopt;
  std::size_t k = 0;
  while (k < max_radius && win[mid - 1 - k] == win[mid + 2 + k]) ++k;
  return k;
}

namespace {

constexpr std::size_t kConfirmReach = std::size_t{1} << 16;

}  // namespace

BalancedClass classify(const BalancedSpec& spec, std::size_t radius) {
  auto mismatch = [&](const std::string& what) -> BalancedClass {
    throw VerificationFailure("spec/class mismatch for " + spec.str() + ": " + what);
  };
  const std::size_t period = spec.period();
  const std::size_t reach = std::max(2 * radius, period);
  const bool purely_periodic = std::holds_alternative<PeriodicSpec>(spec.variant()) ||
                               std::holds_alternative<MechanicalSpec>(spec.variant());
  // A cut off the true center can stay mirrored for a long stretch (about
  // 30|c| letters for directives like {1,30}), so survivors are re-checked
  // with doubling reach before they count.
  auto mirrored = [&](std::int64_t c) {
    for (std::size_t cap = reach; cap <= std::max(reach, kConfirmReach); cap *= 2) {
      auto r = mirror_radius(spec, c, cap);
      if (!r || *r < cap) return false;
      if (purely_periodic) return true;  // a full period mirrored repeats forever
    }
    return true;
  };
  auto mirrored_centers = [&](std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t c = lo; c <= hi; ++c) {
      if (mirrored(c)) out.push_back(c);
    }
    return out;
  };
  const auto r = static_cast<std::int64_t>(std::max(radius, period + 2));

  if (std::holds_alternative<PeriodicSpec>(spec.variant()) ||
      std::holds_alternative<MechanicalSpec>(spec.variant())) {
    const auto p = static_cast<std::int64_t>(period);
    if (window(spec, 0, period) != window(spec, p, period)) {
      return mismatch("window is not periodic with period " + std::to_string(period));
    }
    if (!mirrored_centers(0, p - 1).empty()) return mismatch("periodic sequence has a central factorization");
    return BalancedClass::M1;
  }
  const auto centers = mirrored_centers(-r, r);
  if (std::holds_alternative<CharacteristicSpec>(spec.variant())) {
    if (centers != std::vector<std::int64_t>{0}) {
      return mismatch("expected exactly one central factorization, at the origin");
    }
    return BalancedClass::M3;
  }
  if (centers.size() < 2 || std::find(centers.begin(), centers.end(), 0) == centers.end()) {
    return mismatch("expected at least two central factorizations");
  }
  return BalancedClass::M4;
}

// ---------------------------------------------------------------------------
// Curves

std::vector<CurveRow> curves_export(const BalancedSpec& spec, std::size_t max_len,
                                    const std::vector<Rational>& gammas) {
  for (const auto& g : gammas) {
    if (g <= 0) throw PreconditionError("positivity domain: gamma must be > 0, got " + to_string(g));
  }
  std::vector<BinaryWord> words{BinaryWord{}};
  for (std::size_t n = 1; n <= max_len; ++n) {
    for (auto& f : enumerate_factors(spec, n).factors) words.push_back(std::move(f));
  }
  const auto polys = parallel_map(words.size(), [&](std::size_t i) { return q_markoff(words[i]); });

  std::vector<CurveRow> rows;
  rows.reserve(words.size() * gammas.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (const auto& g : gammas) rows.push_back({words[i], g, polys[i].eval(g)});
  }
  const std::size_t stride = gammas.size();
  for (std::size_t i = 0; stride && i + 1 < words.size(); ++i) {
    for (std::size_t k = 0; k < stride; ++k) {
      if (!(rows[i * stride + k].value < rows[(i + 1) * stride + k].value)) {
        throw VerificationFailure("curves not strictly increasing at gamma = " + to_string(gammas[k]) +
                                  " between '" + words[i].str() + "' and '" + words[i + 1].str() + "'");
      }
    }
  }
  return rows;
}

}  // namespace qmarkoff
