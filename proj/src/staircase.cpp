#include "ncsing/staircase.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "ncsing/errors.hpp"

namespace ncsing {

namespace {

/// Aho-Corasick trie with failure links; states that complete a forbidden
/// word (directly or through their failure chain) are dead.
struct Builder {
  struct Node {
    std::map<Letter, int> children;
    int fail = 0;
    bool terminal = false;
  };
  std::vector<Node> nodes;

  explicit Builder(const std::vector<Word>& forbidden) {
    nodes.emplace_back();
    for (const Word& w : forbidden) {
      int cur = 0;
      for (Letter l : w) {
        auto it = nodes[cur].children.find(l);
        if (it == nodes[cur].children.end()) {
          nodes.emplace_back();
          it = nodes[cur].children.emplace(l, static_cast<int>(nodes.size() - 1)).first;
        }
        cur = it->second;
      }
      nodes[cur].terminal = true;
    }
    // BFS failure links; terminal status propagates along them
    std::deque<int> queue;
    for (auto& [l, child] : nodes[0].children) {
      nodes[child].fail = 0;
      queue.push_back(child);
    }
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      nodes[s].terminal = nodes[s].terminal || nodes[nodes[s].fail].terminal;
      for (auto& [l, child] : nodes[s].children) {
        int f = nodes[s].fail;
        while (f != 0 && !nodes[f].children.count(l)) f = nodes[f].fail;
        auto it = nodes[f].children.find(l);
        nodes[child].fail = (it != nodes[f].children.end() && it->second != child) ? it->second : 0;
        queue.push_back(child);
      }
    }
  }

  int step(int s, Letter l) const {
    for (;;) {
      auto it = nodes[s].children.find(l);
      if (it != nodes[s].children.end()) return it->second;
      if (s == 0) return 0;
      s = nodes[s].fail;
    }
  }
};

}  // namespace

Staircase staircase(const std::vector<Word>& forbidden, std::size_t alphabet_size, int cap) {
  if (alphabet_size == 0) throw DomainError("empty alphabet");
  Builder builder(forbidden);

  Staircase st;
  st.forbidden = forbidden;
  st.alphabet_size = alphabet_size;
  st.cap = cap;
  st.start = 0;
  st.next.assign(builder.nodes.size(), std::vector<int>(alphabet_size, -1));
  for (std::size_t s = 0; s < builder.nodes.size(); ++s) {
    if (builder.nodes[s].terminal) continue;  // dead states stay all -1
    for (std::size_t l = 0; l < alphabet_size; ++l) {
      int t = builder.step(static_cast<int>(s), static_cast<Letter>(l));
      st.next[s][l] = builder.nodes[t].terminal ? -1 : t;
    }
  }

  // if the empty word is forbidden the start state itself is dead; that
  // cannot happen for rule leads (degree >= 1) but keep the count honest
  bool start_dead = builder.nodes[0].terminal;
  std::vector<Count> mass(st.next.size(), 0);
  if (!start_dead) mass[0] = 1;
  st.counts.assign(static_cast<std::size_t>(cap) + 1, 0);
  for (int m = 0; m <= cap; ++m) {
    Count total = 0;
    for (const auto& v : mass) total += v;
    st.counts[static_cast<std::size_t>(m)] = total;
    if (m == cap) break;
    std::vector<Count> nxt(mass.size(), 0);
    for (std::size_t s = 0; s < mass.size(); ++s) {
      if (mass[s] == 0) continue;
      for (std::size_t l = 0; l < alphabet_size; ++l) {
        int t = st.next[s][l];
        if (t >= 0) nxt[static_cast<std::size_t>(t)] += mass[s];
      }
    }
    mass = std::move(nxt);
  }
  return st;
}

Staircase staircase(const RewriteSystem& sys) {
  return staircase(sys.leads(), sys.alphabet.size(), sys.cap);
}

namespace {

void collect_words(const Staircase& st, int state, Word& prefix, int max_degree,
                   std::vector<Word>& out) {
  out.push_back(prefix);
  if (static_cast<int>(prefix.size()) == max_degree) return;
  for (std::size_t l = 0; l < st.alphabet_size; ++l) {
    int t = st.next[static_cast<std::size_t>(state)][l];
    if (t < 0) continue;
    prefix.push_back(static_cast<Letter>(l));
    collect_words(st, t, prefix, max_degree, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> staircase_words(const Staircase& st, int max_degree) {
  std::vector<Word> out;
  Word prefix;
  collect_words(st, st.start, prefix, max_degree, out);
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

namespace {

/// Tarjan strongly connected components over the live transition graph.
struct Tarjan {
  const std::vector<std::vector<int>>& next;
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int counter = 0, comps = 0;

  explicit Tarjan(const std::vector<std::vector<int>>& n)
      : next(n), index(n.size(), -1), low(n.size(), 0), comp(n.size(), -1),
        on_stack(n.size(), false) {}

  void dfs(int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : next[static_cast<std::size_t>(v)]) {
      if (w < 0) continue;
      if (index[w] == -1) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      for (;;) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = comps;
        if (w == v) break;
      }
      ++comps;
    }
  }
};

}  // namespace

Growth analyze_growth(const Staircase& st) {
  const std::size_t n = st.next.size();

  // states reachable from the start
  std::vector<bool> reachable(n, false);
  {
    std::deque<int> queue{st.start};
    reachable[static_cast<std::size_t>(st.start)] = true;
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (int t : st.next[static_cast<std::size_t>(s)]) {
        if (t >= 0 && !reachable[static_cast<std::size_t>(t)]) {
          reachable[static_cast<std::size_t>(t)] = true;
          queue.push_back(t);
        }
      }
    }
  }

  Tarjan tarjan(st.next);
  for (std::size_t v = 0; v < n; ++v) {
    if (reachable[v] && tarjan.index[v] == -1) tarjan.dfs(static_cast<int>(v));
  }
  const int comps = tarjan.comps;

  // per-component: size, internal edge count (parallel letters count), and
  // whether the component carries a cycle
  std::vector<int> size(static_cast<std::size_t>(comps), 0);
  std::vector<int> inner_edges(static_cast<std::size_t>(comps), 0);
  std::vector<bool> cyclic(static_cast<std::size_t>(comps), false);
  for (std::size_t v = 0; v < n; ++v) {
    if (!reachable[v]) continue;
    int cv = tarjan.comp[v];
    ++size[static_cast<std::size_t>(cv)];
    for (int t : st.next[v]) {
      if (t < 0 || !reachable[static_cast<std::size_t>(t)]) continue;
      if (tarjan.comp[static_cast<std::size_t>(t)] == cv) {
        ++inner_edges[static_cast<std::size_t>(cv)];
        cyclic[static_cast<std::size_t>(cv)] = true;
      }
    }
  }

  bool any_cycle = false, exponential = false;
  for (int c = 0; c < comps; ++c) {
    if (!cyclic[static_cast<std::size_t>(c)]) continue;
    any_cycle = true;
    // a strongly connected graph is a single simple cycle iff it has exactly
    // as many internal edges as vertices
    if (inner_edges[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(c)])
      exponential = true;
  }

  Growth out;
  if (exponential) {
    out.kind = GrowthKind::Exponential;
    return out;
  }

  if (!any_cycle) {
    // finite language: the longest accepted word is bounded by the number of
    // live states, so count mass directly until it drains
    out.kind = GrowthKind::Finite;
    std::vector<Count> mass(n, 0);
    mass[static_cast<std::size_t>(st.start)] = 1;
    Count total = 0;
    int m = 0;
    for (;;) {
      Count level = 0;
      for (const auto& v : mass) level += v;
      if (level == 0) break;
      total += level;
      out.longest_word = m;
      std::vector<Count> nxt(n, 0);
      for (std::size_t s = 0; s < n; ++s) {
        if (mass[s] == 0) continue;
        for (int t : st.next[s]) {
          if (t >= 0) nxt[static_cast<std::size_t>(t)] += mass[s];
        }
      }
      mass = std::move(nxt);
      ++m;
    }
    out.total = total;
    return out;
  }

  // polynomial: longest chain of cyclic components over the condensation
  std::vector<int> best(static_cast<std::size_t>(comps), -1);
  // components in Tarjan order are reverse-topological: successors first
  std::vector<std::vector<int>> members(static_cast<std::size_t>(comps));
  for (std::size_t v = 0; v < n; ++v) {
    if (reachable[v]) members[static_cast<std::size_t>(tarjan.comp[v])].push_back(static_cast<int>(v));
  }
  for (int c = 0; c < comps; ++c) {
    int succ_best = 0;
    for (int v : members[static_cast<std::size_t>(c)]) {
      for (int t : st.next[static_cast<std::size_t>(v)]) {
        if (t < 0 || !reachable[static_cast<std::size_t>(t)]) continue;
        int ct = tarjan.comp[static_cast<std::size_t>(t)];
        if (ct != c) succ_best = std::max(succ_best, best[static_cast<std::size_t>(ct)]);
      }
    }
    best[static_cast<std::size_t>(c)] = succ_best + (cyclic[static_cast<std::size_t>(c)] ? 1 : 0);
  }
  int chain = best[static_cast<std::size_t>(tarjan.comp[static_cast<std::size_t>(st.start)])];
  out.kind = GrowthKind::Polynomial;
  out.degree = chain - 1;
  return out;
}

}  // namespace ncsing
