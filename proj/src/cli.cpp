#include "qmarkoff/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qmarkoff/errors.hpp"
#include "qmarkoff/language.hpp"
#include "qmarkoff/morphism.hpp"
#include "qmarkoff/pairs.hpp"
#include "qmarkoff/spectrum.hpp"

namespace qmarkoff::cli {

namespace {

using Json = nlohmann::ordered_json;

Glyphs parse_glyphs(const std::string& name) { return name == "01" ? Glyphs::binary : Glyphs::ab; }

std::string render(const BinaryWord& w, Glyphs g) { return w.str(g); }

std::string render_float(const BigFloat& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string render_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

Json poly_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  return coeffs;
}

bool has_negative(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  return std::any_of(c.begin(), c.end(), [](const BigInt& x) { return x < 0; });
}

// ---------------------------------------------------------------------------

struct TreeArgs {
  std::size_t depth = 0;
  bool triples = false;
  bool qpoly = false;
  bool json = false;
  std::string alphabet = "ab";
};

int cmd_tree(const TreeArgs& a, std::ostream& out) {
  const Glyphs g = parse_glyphs(a.alphabet);
  std::ostringstream text;
  Json nodes = Json::array();
  for (std::size_t d = 0; d <= a.depth; ++d) {
    for (const auto& path : paths_at_depth(d)) {
      const ChristoffelNode node = christoffel_node(path);
      const MarkoffTriple triple = markoff_triple(path);
      const IntPolynomial poly = q_markoff(node.word);
      if (a.json) {
        nodes.push_back(Json{{"path", path.str()},
                             {"depth", d},
                             {"u", render(node.u, g)},
                             {"v", render(node.v, g)},
                             {"word", render(node.word, g)},
                             {"triple", {triple.x.str(), triple.y.str(), triple.z.str()}},
                             {"m", mu(node.word).e12.str()},
                             {"q_markoff", poly_json(poly)}});
        continue;
      }
      text << std::string(2 * d, ' ');
      if (a.triples) {
        text << triple.str();
      } else if (a.qpoly) {
        text << render(node.u, g) << '.' << render(node.v, g) << ": " << poly.str();
      } else {
        text << render(node.u, g) << '.' << render(node.v, g);
      }
      text << '\n';
    }
  }
  if (a.json) {
    out << nodes.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_qmarkoff(const std::string& word_text, std::ostream& out) {
  const BinaryWord w = BinaryWord::parse(word_text);
  const QMatrix m = mu_q(w);
  std::ostringstream os;
  os << "word: " << w.str() << '\n'
     << "mu: " << to_string(mu(w)) << '\n'
     << "mu_q: " << to_string(m) << '\n'
     << "q_markoff: " << m.e12.str() << '\n';
  out << os.str();
  return kExitOk;
}

struct LanguageArgs {
  std::string spec;
  std::size_t n = 1;
  bool json = false;
  std::string alphabet = "ab";
};

int cmd_language(const LanguageArgs& a, std::ostream& out) {
  const BalancedSpec spec = BalancedSpec::parse(a.spec);
  const Glyphs g = parse_glyphs(a.alphabet);
  std::vector<FactorLanguage> langs;
  for (std::size_t n = 1; n <= a.n; ++n) langs.push_back(enumerate_factors(spec, n));

  std::optional<FlipChain> chain;
  try {
    chain = flip_permutation(spec, a.n);
  } catch (const PreconditionError&) {
    // periodic languages stop having n+1 factors once n reaches the period
  }
  std::optional<std::pair<BinaryWord, BinaryWord>> compact;
  if (has_central_factorization(spec)) {
    compact = compact_representations(central_factorization(spec, a.n - 1).p);
  }

  if (a.json) {
    Json j{{"spec", spec.str()}};
    Json rows = Json::array();
    for (const auto& lang : langs) {
      Json fs = Json::array();
      for (const auto& f : lang.factors) fs.push_back(render(f, g));
      rows.push_back(Json{{"n", lang.n}, {"count", lang.factors.size()}, {"factors", fs}});
    }
    j["languages"] = rows;
    if (chain) {
      Json steps = Json::array();
      for (const auto& c : chain->changes) {
        steps.push_back(Json{{"from", render(c.from, g)}, {"to", render(c.to, g)}, {"kind", to_string(c.kind)}});
      }
      j["chain"] = Json{{"n", chain->n}, {"w", render(chain->w, g)}, {"steps", steps}};
    }
    if (compact) j["compact"] = {render(compact->first, g), render(compact->second, g)};
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  std::ostringstream os;
  os << "spec: " << spec.str() << '\n';
  for (const auto& lang : langs) {
    os << "n=" << lang.n << " (" << lang.factors.size() << "):";
    for (const auto& f : lang.factors) os << ' ' << render(f, g);
    os << '\n';
  }
  if (chain) {
    os << "chain n=" << chain->n << " w=" << render(chain->w, g) << '\n';
    for (const auto& c : chain->changes) {
      os << "  " << render(c.from, g) << " -> " << render(c.to, g) << "  " << to_string(c.kind) << '\n';
    }
  } else {
    os << "chain n=" << a.n << ": language does not have n+1 factors\n";
  }
  if (compact) {
    os << "compact: " << render(compact->first, g) << ' ' << render(compact->second, g) << '\n';
  }
  out << os.str();
  return kExitOk;
}

int cmd_verify_monotone(const std::string& spec_text, std::size_t max_n, std::ostream& out) {
  const BalancedSpec spec = BalancedSpec::parse(spec_text);
  std::ostringstream os;
  os << "spec: " << spec.str() << '\n' << "max_n: " << max_n << '\n';
  try {
    const RadixChainReport report = radix_chain_check(spec, max_n);
    os << "factors: " << report.factors.size() << '\n'
       << "links: " << report.links.size() << '\n'
       << "result: PASS\n";
    out << os.str();
    return kExitOk;
  } catch (const MonotonicityViolation& v) {
    os << "result: FAIL\n"
       << "from: " << v.link().change.from.str() << '\n'
       << "to: " << v.link().change.to.str() << '\n'
       << "difference: " << v.link().difference.str() << '\n';
    out << os.str();
    return kExitVerification;
  }
}

int cmd_spectrum(const std::string& word_text, std::size_t depth, bool csv, std::ostream& out) {
  const ClosedFormReport r = closed_form_check(BinaryWord::parse(word_text), depth);
  const char* verdict = r.within_bound ? "PASS" : "FAIL";
  std::ostringstream os;
  if (csv) {
    os << "word,m,supremum,closed_form,residual,error_bound,result\n"
       << r.word.str() << ',' << r.m.str() << ',' << render_float(r.supremum.value, 30) << ','
       << render_float(r.closed_form, 30) << ',' << render_double(r.residual) << ','
       << render_double(r.supremum.error_bound) << ',' << verdict << '\n';
  } else {
    os << "word: " << r.word.str() << '\n'
       << "m: " << r.m.str() << '\n'
       << "supremum: " << render_float(r.supremum.value, 30) << '\n'
       << "closed_form: " << render_float(r.closed_form, 30) << '\n'
       << "residual: " << render_double(r.residual) << '\n'
       << "error_bound: " << render_double(r.supremum.error_bound) << '\n'
       << "result: " << verdict << '\n';
  }
  out << os.str();
  return r.within_bound ? kExitOk : kExitVerification;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) out.push_back(item);
  return out;
}

int cmd_curves(const std::string& spec_text, std::size_t max_len, const std::string& gamma_text,
               const std::string& alphabet, std::ostream& out) {
  const BalancedSpec spec = BalancedSpec::parse(spec_text);
  const auto tokens = split_list(gamma_text);
  if (tokens.empty()) throw PreconditionError("--gammas needs at least one value");
  std::vector<Rational> gammas;
  for (const auto& t : tokens) gammas.push_back(parse_rational(t));
  const auto rows = curves_export(spec, max_len, gammas);
  const Glyphs g = parse_glyphs(alphabet);
  std::ostringstream os;
  os << "word,gamma,value\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const BigFloat value = BigFloat(boost::multiprecision::numerator(row.value)) /
                           BigFloat(boost::multiprecision::denominator(row.value));
    os << render(row.word, g) << ',' << tokens[i % tokens.size()] << ',' << render_float(value, 17) << '\n';
  }
  out << os.str();
  return kExitOk;
}

void print_report(std::ostream& os, const char* label, const IndistinguishabilityReport& r) {
  os << label << ":\n"
     << "  radius: " << r.radius << '\n'
     << "  supports: " << r.supports_checked << '\n'
     << "  patterns: " << r.patterns_checked << '\n'
     << "  result: " << (r.holds ? "PASS" : "FAIL") << '\n';
  if (r.witness) {
    os << "  witness:";
    for (std::size_t k = 0; k < r.witness->support.size(); ++k) {
      os << ' ' << r.witness->support[k] << '=' << glyph(r.witness->letters[k], Glyphs::ab);
    }
    os << " counts " << r.witness_counts.first << '/' << r.witness_counts.second << '\n';
  }
}

struct PairArgs {
  std::string spec;
  std::size_t radius = 1;
  std::int64_t n0 = 0;
  bool noncontiguous = false;
  bool control = false;
};

int cmd_pair_check(const PairArgs& a, std::ostream& out) {
  const BalancedSpec spec = BalancedSpec::parse(a.spec);
  const AsymptoticPair pair = a.control ? flip_one_position(spec, a.n0) : build_pair(spec, a.n0);
  std::ostringstream os;
  os << "spec: " << spec.str() << '\n' << "difference set:";
  for (auto d : pair.difference_set()) os << ' ' << d;
  os << '\n';
  const auto contiguous = is_indistinguishable_up_to(pair, a.radius);
  print_report(os, "contiguous", contiguous);
  bool ok = contiguous.holds;
  if (a.noncontiguous) {
    const auto brute = is_indistinguishable_bruteforce(pair, a.radius);
    print_report(os, "all supports", brute);
    ok = ok && brute.holds;
    os << "agreement: " << (brute.holds == contiguous.holds ? "yes" : "no") << '\n';
  }
  out << os.str();
  return ok ? kExitOk : kExitVerification;
}

int cmd_counterexamples(std::ostream& out) {
  std::ostringstream os;
  bool all = true;
  auto verdict = [&](bool holds) {
    all = all && holds;
    return holds ? "confirmed" : "NOT CONFIRMED";
  };
  const std::pair<const char*, const char*> radix_pairs[] = {
      {"abb", "baa"}, {"abbbab", "bababb"}, {"abbb", "aaaab"}, {"abbbbbbb", "aaaaaaaaaaaab"}};
  for (const auto& [lo, hi] : radix_pairs) {
    const BinaryWord u = word(lo), v = word(hi);
    const IntPolynomial diff = q_markoff(v) - q_markoff(u);
    const bool ordered = radix_cmp(u, v) < 0;
    os << lo << " <radix " << hi << ": q_markoff(" << hi << ") - q_markoff(" << lo << ") = " << diff.str()
       << '\n'
       << "  negative coefficient: " << verdict(ordered && has_negative(diff)) << '\n';
  }
  {
    const IntPolynomial l = q_markoff(word("aaabbb"));
    const IntPolynomial r = q_markoff(word("abbaab"));
    os << "q_markoff(aaabbb) = q_markoff(abbaab) = " << l.str() << '\n'
       << "  equal: " << verdict(l == r) << '\n';
  }
  {
    const BinaryWord u = word("aabb"), v = word("abab");
    const BigInt mu_u = mu(u).e12, mu_v = mu(v).e12;
    const bool same_poly = q_markoff(u) == q_markoff(v);
    os << "mu(aabb)_12 = " << mu_u.str() << ", mu(abab)_12 = " << mu_v.str() << '\n'
       << "  equal at q=1: " << verdict(mu_u == mu_v) << '\n'
       << "  q_markoff(aabb) = " << q_markoff(u).str() << '\n'
       << "  q_markoff(abab) = " << q_markoff(v).str() << '\n'
       << "  q_markoff equal: " << (same_poly ? "yes" : "no") << '\n';
  }
  out << os.str();
  return all ? kExitOk : kExitVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-analogs of Markoff numbers over balanced languages", "qmarkoff"};
  app.require_subcommand(1);

  TreeArgs tree;
  auto* tree_cmd = app.add_subcommand("tree", "Christoffel / Markoff / q-Markoff tree");
  tree_cmd->add_option("--depth", tree.depth, "depth of the tree")->check(CLI::Range(0, 20));
  auto* triples_flag = tree_cmd->add_flag("--triples", tree.triples, "print Markoff triples");
  tree_cmd->add_flag("--qpoly", tree.qpoly, "print q-Markoff polynomials")->excludes(triples_flag);
  tree_cmd->add_flag("--json", tree.json, "emit JSON");
  tree_cmd->add_option("--alphabet", tree.alphabet)->check(CLI::IsMember({"ab", "01"}));

  std::string word_text;
  auto* qm_cmd = app.add_subcommand("qmarkoff", "mu, mu_q and the q-Markoff polynomial of a word");
  qm_cmd->add_option("WORD", word_text, "word over {a,b} or {0,1}")->required();

  LanguageArgs lang;
  auto* lang_cmd = app.add_subcommand("language", "factor table with flip tags");
  lang_cmd->add_option("--spec", lang.spec)->required();
  lang_cmd->add_option("--n", lang.n)->check(CLI::PositiveNumber);
  lang_cmd->add_flag("--json", lang.json);
  lang_cmd->add_option("--alphabet", lang.alphabet)->check(CLI::IsMember({"ab", "01"}));

  std::string mono_spec;
  std::size_t max_n = 1;
  auto* mono_cmd = app.add_subcommand("verify-monotone", "check the radix chain increases");
  mono_cmd->add_option("--spec", mono_spec)->required();
  mono_cmd->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);

  std::string spectrum_word;
  std::size_t depth = kDefaultDepth;
  bool csv = false;
  auto* spec_cmd = app.add_subcommand("spectrum", "Markoff supremum against sqrt(9 - 4/m^2)");
  spec_cmd->add_option("WORD", spectrum_word)->required();
  spec_cmd->add_option("--depth", depth)->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  spec_cmd->add_flag("--csv", csv);

  std::string curves_spec, gammas = "0.01,0.5,1,3,100", curves_alphabet = "01";
  std::size_t max_len = 1;
  auto* curves_cmd = app.add_subcommand("curves", "q_markoff evaluated at q = gamma, as CSV");
  curves_cmd->add_option("--spec", curves_spec)->required();
  curves_cmd->add_option("--max-len", max_len)->required()->check(CLI::PositiveNumber);
  curves_cmd->add_option("--gammas", gammas, "comma-separated positive values");
  curves_cmd->add_option("--alphabet", curves_alphabet)->check(CLI::IsMember({"ab", "01"}));

  PairArgs pair;
  auto* pair_cmd = app.add_subcommand("pair-check", "indistinguishability of the pair ~p a.b p / ~p b.a p");
  pair_cmd->add_option("--spec", pair.spec)->required();
  pair_cmd->add_option("--radius", pair.radius)->required()->check(CLI::PositiveNumber);
  pair_cmd->add_option("--n0", pair.n0, "shift of the difference set");
  pair_cmd->add_flag("--noncontiguous", pair.noncontiguous, "also check every support (radius <= 6)");
  pair_cmd->add_flag("--control", pair.control, "flip a single letter at n0 instead");

  auto* cex_cmd = app.add_subcommand("counterexamples", "radix pairs where q_markoff decreases");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tree_cmd) return cmd_tree(tree, out);
    if (*qm_cmd) return cmd_qmarkoff(word_text, out);
    if (*lang_cmd) return cmd_language(lang, out);
    if (*mono_cmd) return cmd_verify_monotone(mono_spec, max_n, out);
    if (*spec_cmd) return cmd_spectrum(spectrum_word, depth, csv, out);
    if (*curves_cmd) return cmd_curves(curves_spec, max_len, gammas, curves_alphabet, out);
    if (*pair_cmd) return cmd_pair_check(pair, out);
    if (*cex_cmd) return cmd_counterexamples(out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}

}  // namespace qmarkoff::cli
