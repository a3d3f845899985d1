#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "monoquiv/presentation.hpp"

namespace monoquiv {

// Hilbert-type counts indexed by degree (or length) 0..N.
struct DegreeSeries {
  std::vector<mpz_class> coefficients;

  std::size_t size() const { return coefficients.size(); }
  const mpz_class& operator[](std::size_t d) const { return coefficients.at(d); }
  bool operator==(const DegreeSeries&) const = default;
  std::string to_string() const;  // "[1,1,2,...]"
};

inline constexpr std::size_t kDefaultEnumerationBudget = 1'000'000;

// Deterministic, total automaton recognising words with no forbidden factor.
// Live states are the prefixes of forbidden words that contain no forbidden
// factor (Aho-Corasick trie nodes); every other node is merged into a single
// absorbing DEAD state. Works with an unreduced forbidden set.
class FactorAutomaton {
 public:
  using State = std::size_t;

  explicit FactorAutomaton(const MonomialPresentation& p);

  State root() const { return 0; }
  State dead() const { return live_.size(); }
  bool is_dead(State s) const { return s == dead(); }
  std::size_t num_live_states() const { return live_.size(); }
  // Includes DEAD.
  std::size_t num_states() const { return live_.size() + 1; }
  std::size_t num_letters() const { return num_letters_; }
  int letter_degree(Letter x) const { return degrees_.at(x); }

  State step(State s, Letter x) const;
  State run(const Word& w, State from = 0) const;
  // The prefix word a live state stands for.
  const Word& state_word(State s) const { return live_.at(s); }

 private:
  std::size_t num_letters_ = 0;
  std::vector<int> degrees_;
  std::vector<Word> live_;
  std::vector<State> delta_;  // live state * num_letters + letter
};

bool is_legal(const FactorAutomaton& a, const Word& w);

// L_n in lexicographic order of generator declaration order. Throws
// BudgetExceeded when |L_n| would exceed `budget`.
std::vector<Word> enumerate_by_length(const FactorAutomaton& a, std::size_t n,
                                      std::size_t budget = kDefaultEnumerationBudget);

// Coefficient d is the number of legal words of degree d.
DegreeSeries count_by_degree(const FactorAutomaton& a, std::size_t max_degree);

// Coefficient n is |L_n|.
DegreeSeries count_by_length(const FactorAutomaton& a, std::size_t max_length);

}  // namespace monoquiv
