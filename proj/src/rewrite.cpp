#include "ncsing/rewrite.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "ncsing/errors.hpp"

namespace ncsing {

namespace {

/// lead + tail as one jet.
NcJet rule_poly(const Rule& rule) {
  NcJet p = rule.tail;
  p.add_term(rule.lead, 1);
  return p;
}

/// Monicizes a nonzero jet into a rule. Throws when the lead would be the
/// empty word (a unit in the ideal).
Rule monicize(const NcJet& p) {
  auto [lead, c] = p.leading_term();
  if (lead.empty()) throw DomainError("ideal contains a unit (constant leading term)");
  NcJet tail = p;
  tail.add_term(lead, -c);
  tail.scale(Q(1) / c);
  return Rule{lead, std::move(tail)};
}

bool rule_less(const Rule& a, const Rule& b) { return word_precedes(a.lead, b.lead); }

struct Site {
  Word word;
  std::size_t rule;
  std::size_t pos;
};

/// Canonical rewrite site: order-least support word containing a lead, then
/// order-least applicable lead (rules are kept sorted), leftmost occurrence.
bool find_canonical_site(const NcJet& p, const std::vector<Rule>& rules, Site& out) {
  for (const auto& entry : p.terms()) {
    const Word& w = entry.first;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      std::size_t pos = find_factor(w, rules[r].lead);
      if (pos != Word::npos) {
        out = Site{w, r, pos};
        return true;
      }
    }
  }
  return false;
}

void apply_site(NcJet& p, const std::vector<Rule>& rules, const Site& site, bool& truncated) {
  const Rule& rule = rules[site.rule];
  const Word& w = site.word;
  Q c = p.coeff(w);
  Word u = w.substr(0, site.pos);
  Word v = w.substr(site.pos + rule.lead.size());
  p.add_term(w, -c);
  for (const auto& [t, ct] : rule.tail.terms()) {
    if (static_cast<int>(u.size() + t.size() + v.size()) > p.cap()) {
      truncated = true;
      continue;
    }
    p.add_term(u + t + v, -c * ct);
  }
}

ReduceOutcome reduce_impl(const NcJet& p, const std::vector<Rule>& rules) {
  ReduceOutcome out{p, false};
  Site site;
  while (find_canonical_site(out.normal_form, rules, site)) {
    apply_site(out.normal_form, rules, site, out.truncated);
  }
  return out;
}

void check_system_compat(const NcJet& p, const RewriteSystem& sys) {
  if (p.alphabet() != sys.alphabet) throw DomainError("alphabet mismatch");
  if (p.cap() != sys.cap) throw DomainError("truncation cap mismatch");
}

void append_word_key(std::string& out, const Word& w) {
  for (Letter l : w) {
    out += std::to_string(static_cast<unsigned>(l));
    out.push_back(',');
  }
  out.push_back('.');
}

}  // namespace

std::vector<Word> RewriteSystem::leads() const {
  std::vector<Word> out;
  for (const auto& r : rules) out.push_back(r.lead);
  return out;
}

NcJet reduce(const NcJet& p, const RewriteSystem& sys) {
  check_system_compat(p, sys);
  return reduce_impl(p, sys.rules).normal_form;
}

ReduceOutcome reduce_tracked(const NcJet& p, const RewriteSystem& sys) {
  check_system_compat(p, sys);
  return reduce_impl(p, sys.rules);
}

NcJet reduce_with_choice(const NcJet& p, const RewriteSystem& sys,
                         const std::function<std::size_t(std::size_t)>& pick) {
  check_system_compat(p, sys);
  NcJet cur = p;
  bool truncated = false;
  for (;;) {
    std::vector<Site> sites;
    for (const auto& entry : cur.terms()) {
      const Word& w = entry.first;
      for (std::size_t r = 0; r < sys.rules.size(); ++r) {
        std::size_t pos = find_factor(w, sys.rules[r].lead);
        while (pos != Word::npos) {
          sites.push_back(Site{w, r, pos});
          pos = w.find(sys.rules[r].lead, pos + 1);
        }
      }
    }
    if (sites.empty()) return cur;
    apply_site(cur, sys.rules, sites[pick(sites.size())], truncated);
  }
}

std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys) {
  std::vector<CriticalPair> out;
  const auto& rules = sys.rules;
  for (std::size_t j = 0; j < rules.size(); ++j) {
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const Word& lj = rules[j].lead;
      const Word& li = rules[i].lead;
      // proper borders: a suffix of lead(j) equal to a prefix of lead(i),
      // shorter than both (equal-length or containing matches are inclusion
      // ambiguities, which interreduction removes structurally)
      std::size_t omax = std::min(li.size(), lj.size()) - 1;
      for (std::size_t o = 1; o <= omax; ++o) {
        if (lj.compare(lj.size() - o, o, li, 0, o) != 0) continue;
        Word overlap = lj + li.substr(o);
        if (static_cast<int>(overlap.size()) > sys.cap) continue;
        out.push_back(CriticalPair{j, i, lj.substr(0, lj.size() - o), li.substr(o), overlap});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CriticalPair& x, const CriticalPair& y) {
    if (x.overlap != y.overlap) return word_precedes(x.overlap, y.overlap);
    return std::tie(x.prefix_rule, x.suffix_rule) < std::tie(y.prefix_rule, y.suffix_rule);
  });
  return out;
}

namespace {

/// S-element of an overlap: a . (rule_i) - (rule_j) . b; the shared leading
/// word cancels, leaving a . tail_i - tail_j . b.
NcJet s_element(const CriticalPair& pair, const std::vector<Rule>& rules,
                const Alphabet& alphabet, int cap, bool& truncated) {
  const Rule& ri = rules[pair.suffix_rule];
  const Rule& rj = rules[pair.prefix_rule];
  NcJet s(alphabet, cap);
  auto accumulate = [&](const NcJet& tail, const Word& pre, const Word& post, int sign) {
    for (const auto& [t, ct] : tail.terms()) {
      if (static_cast<int>(pre.size() + t.size() + post.size()) > cap) {
        truncated = true;
        continue;
      }
      s.add_term(pre + t + post, sign * ct);
    }
  };
  accumulate(ri.tail, pair.a, Word(), 1);
  accumulate(rj.tail, Word(), pair.b, -1);
  return s;
}

struct Completer {
  Alphabet alphabet;
  int cap;
  std::vector<Rule> rules;
  bool truncated = false;

  NcJet reduce_against(const NcJet& p, const std::vector<Rule>& against) {
    ReduceOutcome out = reduce_impl(p, against);
    truncated = truncated || out.truncated;
    return std::move(out.normal_form);
  }

  /// Fixpoint interreduction: every rule fully reduced against the others,
  /// no lead a subword of another lead.
  void interreduce_rules() {
    for (;;) {
      std::sort(rules.begin(), rules.end(), rule_less);
      bool changed = false;
      for (std::size_t i = 0; i < rules.size(); ++i) {
        std::vector<Rule> others;
        others.reserve(rules.size() - 1);
        for (std::size_t k = 0; k < rules.size(); ++k) {
          if (k != i) others.push_back(rules[k]);
        }
        NcJet nf = reduce_against(rule_poly(rules[i]), others);
        if (nf.is_zero()) {
          rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        Rule reduced = monicize(nf);
        if (reduced.lead != rules[i].lead || reduced.tail != rules[i].tail) {
          rules[i] = std::move(reduced);
          changed = true;
          break;
        }
      }
      if (!changed) return;
    }
  }

  std::string pair_key(const CriticalPair& pair) const {
    auto rule_blob = [&](const Rule& r) {
      std::string s;
      append_word_key(s, r.lead);
      for (const auto& [w, c] : r.tail.terms()) {
        append_word_key(s, w);
        s += c.get_str();
        s.push_back(';');
      }
      return s;
    };
    std::string key = rule_blob(rules[pair.prefix_rule]);
    key.push_back('!');
    key += rule_blob(rules[pair.suffix_rule]);
    key.push_back('@');
    append_word_key(key, pair.a);
    return key;
  }

  RewriteSystem system() const {
    return RewriteSystem{alphabet, cap, rules, Certificate::TruncatedAtCap};
  }

  /// Returns true if some pair produced a new rule (system then changed).
  bool resolve_pass(bool use_memo, std::set<std::string>& settled) {
    auto pairs = critical_pairs(system());
    for (const auto& pair : pairs) {
      std::string key = pair_key(pair);
      if (use_memo && settled.count(key)) continue;
      NcJet s = s_element(pair, rules, alphabet, cap, truncated);
      NcJet nf = reduce_against(s, rules);
      settled.insert(std::move(key));
      if (!nf.is_zero()) {
        rules.push_back(monicize(nf));
        interreduce_rules();
        return true;
      }
    }
    return false;
  }

  void run() {
    interreduce_rules();
    std::set<std::string> settled;
    for (;;) {
      // resolve unseen pairs (normal selection: increasing overlap order)
      while (resolve_pass(/*use_memo=*/true, settled)) {
      }
      // certification pass: every pair of the *final* system must reduce to
      // zero against exactly these rules; memoized zeros are re-checked
      if (!resolve_pass(/*use_memo=*/false, settled)) break;
    }
  }
};

}  // namespace

std::vector<Rule> interreduce(std::vector<Rule> rules, const Alphabet& alphabet, int cap) {
  Completer c{alphabet, cap, std::move(rules)};
  c.interreduce_rules();
  return std::move(c.rules);
}

RewriteSystem complete(const std::vector<NcJet>& generators, int cap) {
  if (generators.empty()) throw DomainError("no generators (all zero?)");
  const Alphabet& alphabet = generators.front().alphabet();
  Completer c{alphabet, cap, {}};
  for (const auto& g : generators) {
    if (g.alphabet() != alphabet) throw DomainError("alphabet mismatch");
    if (g.cap() < cap) throw DomainError("generator cap below completion cap");
    NcJet gc = g.cap() == cap ? g : with_cap(g, cap);
    if (gc.is_zero())
      throw DomainError("zero generator after truncation: raise the cap or drop it");
    c.rules.push_back(monicize(gc));
  }
  c.run();

  std::size_t max_lead = 0;
  for (const auto& r : c.rules) max_lead = std::max(max_lead, r.lead.size());
  bool window_ok = static_cast<int>(2 * max_lead) <= cap;

  RewriteSystem out = c.system();
  out.certificate =
      (!c.truncated && window_ok) ? Certificate::Exact : Certificate::TruncatedAtCap;
  return out;
}

RewriteSystem complete(const std::vector<NcJet>& generators) {
  if (generators.empty()) throw DomainError("no generators (all zero?)");
  return complete(generators, generators.front().cap());
}

}  // namespace ncsing
