#include "monoquiv/legal_words.hpp"

#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "monoquiv/error.hpp"

namespace monoquiv {

std::string DegreeSeries::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) os << ',';
    os << coefficients[i];
  }
  os << ']';
  return os.str();
}

FactorAutomaton::FactorAutomaton(const MonomialPresentation& p)
    : num_letters_(p.num_letters()) {
  for (const Generator& g : p.generators()) degrees_.push_back(g.degree);

  // Trie over the forbidden words. Node 0 is the root.
  struct Node {
    std::vector<long> child;
    bool terminal = false;
    long fail = 0;
    Word word;
  };
  const std::size_t k = num_letters_;
  std::vector<Node> trie(1);
  trie[0].child.assign(k, -1);
  for (const Word& w : p.forbidden()) {
    long at = 0;
    for (Letter x : w) {
      if (trie[at].child[x] < 0) {
        trie[at].child[x] = static_cast<long>(trie.size());
        Node n;
        n.child.assign(k, -1);
        n.word = trie[at].word;
        n.word.push_back(x);
        trie.push_back(std::move(n));
      }
      at = trie[at].child[x];
    }
    trie[at].terminal = true;
  }

  // BFS: failure links, goto completion, and dead marking. A node is dead
  // when it or any proper suffix on its failure chain ends a forbidden word.
  std::vector<long> order;
  std::vector<long> go(trie.size() * k, 0);
  std::vector<char> dead_node(trie.size(), 0);
  std::queue<long> bfs;
  for (Letter x = 0; x < k; ++x) {
    long c = trie[0].child[x];
    if (c >= 0) {
      trie[c].fail = 0;
      go[x] = c;
      bfs.push(c);
    } else {
      go[x] = 0;
    }
  }
  dead_node[0] = trie[0].terminal;
  order.push_back(0);
  while (!bfs.empty()) {
    long u = bfs.front();
    bfs.pop();
    order.push_back(u);
    dead_node[u] = trie[u].terminal || dead_node[trie[u].fail];
    for (Letter x = 0; x < k; ++x) {
      long c = trie[u].child[x];
      if (c >= 0) {
        trie[c].fail = go[trie[u].fail * k + x];
        go[u * k + x] = c;
        bfs.push(c);
      } else {
        go[u * k + x] = go[trie[u].fail * k + x];
      }
    }
  }

  // Renumber live nodes in BFS order; root stays 0.
  std::vector<State> renum(trie.size(), 0);
  for (long u : order) {
    if (!dead_node[u]) {
      renum[u] = live_.size();
      live_.push_back(trie[u].word);
    }
  }
  const State dead_state = live_.size();
  for (long u : order) {
    if (dead_node[u]) renum[u] = dead_state;
  }
  delta_.assign(live_.size() * k, dead_state);
  for (long u : order) {
    if (dead_node[u]) continue;
    for (Letter x = 0; x < k; ++x) {
      delta_[renum[u] * k + x] = renum[go[u * k + x]];
    }
  }
}

FactorAutomaton::State FactorAutomaton::step(State s, Letter x) const {
  if (x >= num_letters_) throw std::invalid_argument("letter outside the alphabet");
  if (is_dead(s)) return s;
  return delta_[s * num_letters_ + x];
}

FactorAutomaton::State FactorAutomaton::run(const Word& w, State from) const {
  State s = from;
  for (Letter x : w) {
    s = step(s, x);
    if (is_dead(s)) return s;
  }
  return s;
}

bool is_legal(const FactorAutomaton& a, const Word& w) {
  return !a.is_dead(a.run(w));
}

std::vector<Word> enumerate_by_length(const FactorAutomaton& a, std::size_t n,
                                      std::size_t budget) {
  const std::size_t states = a.num_live_states();
  // extendable[r][s]: some legal continuation of exactly r letters from s.
  std::vector<std::vector<char>> extendable(n + 1, std::vector<char>(states, 0));
  for (std::size_t s = 0; s < states; ++s) extendable[0][s] = 1;
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t s = 0; s < states; ++s) {
      for (Letter x = 0; x < a.num_letters() && !extendable[r][s]; ++x) {
        auto t = a.step(s, x);
        if (!a.is_dead(t) && extendable[r - 1][t]) extendable[r][s] = 1;
      }
    }
  }
  std::vector<Word> out;
  if (!extendable[n][a.root()]) return out;
  Word current;
  auto recurse = [&](auto&& self, FactorAutomaton::State s) -> void {
    if (current.size() == n) {
      if (out.size() >= budget) {
        throw BudgetExceeded("enumeration of legal words of length " +
                             std::to_string(n) + " exceeded " +
                             std::to_string(budget) + " words");
      }
      out.push_back(current);
      return;
    }
    const std::size_t remaining = n - current.size() - 1;
    for (Letter x = 0; x < a.num_letters(); ++x) {
      auto t = a.step(s, x);
      if (a.is_dead(t) || !extendable[remaining][t]) continue;
      current.push_back(x);
      self(self, t);
      current.pop_back();
    }
  };
  recurse(recurse, a.root());
  return out;
}

namespace {

template <typename Weight>
DegreeSeries count_impl(const FactorAutomaton& a, std::size_t max, Weight weight) {
  const std::size_t states = a.num_live_states();
  std::vector<std::vector<mpz_class>> table(max + 1,
                                            std::vector<mpz_class>(states, 0));
  table[0][a.root()] = 1;
  DegreeSeries out;
  out.coefficients.assign(max + 1, 0);
  for (std::size_t d = 0; d <= max; ++d) {
    for (std::size_t s = 0; s < states; ++s) {
      const mpz_class& c = table[d][s];
      if (c == 0) continue;
      out.coefficients[d] += c;
      for (Letter x = 0; x < a.num_letters(); ++x) {
        std::size_t next = d + weight(x);
        if (next > max) continue;
        auto t = a.step(s, x);
        if (!a.is_dead(t)) table[next][t] += c;
      }
    }
  }
  return out;
}

}  // namespace

DegreeSeries count_by_degree(const FactorAutomaton& a, std::size_t max_degree) {
  return count_impl(a, max_degree, [&a](Letter x) {
    return static_cast<std::size_t>(a.letter_degree(x));
  });
}

DegreeSeries count_by_length(const FactorAutomaton& a, std::size_t max_length) {
  return count_impl(a, max_length, [](Letter) { return std::size_t{1}; });
}

}  // namespace monoquiv
