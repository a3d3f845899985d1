#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "monoquiv/quiver.hpp"

namespace monoquiv {

// Index of a generator in its presentation's declaration order.
using Letter = std::size_t;
using Word = std::vector<Letter>;

struct Generator {
  std::string name;
  int degree;

  bool operator==(const Generator&) const = default;
};

// A = k<G>/(F) with a positive degree on every letter. Forbidden words are a
// set: duplicates are dropped at construction, first occurrence order kept.
class MonomialPresentation {
 public:
  MonomialPresentation() = default;
  MonomialPresentation(std::vector<Generator> generators,
                       std::vector<Word> forbidden);

  std::size_t num_letters() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Word>& forbidden() const { return forbidden_; }
  int letter_degree(Letter x) const { return generators_.at(x).degree; }
  std::optional<Letter> find_letter(std::string_view name) const;

  bool all_degree_one() const;
  // True when every generator name is a single character, so words can be
  // written as plain concatenations.
  bool single_char_names() const;

  long degree(const Word& w) const;
  std::string format(const Word& w) const;
  // Accepts a concatenation of single-character names. Throws
  // ValidationError naming the unknown letter.
  Word parse_word(std::string_view text) const;
  Word parse_word(const std::vector<std::string>& names) const;

  bool operator==(const MonomialPresentation& other) const {
    return generators_ == other.generators_ && forbidden_ == other.forbidden_;
  }

 private:
  std::vector<Generator> generators_;
  std::vector<Word> forbidden_;
  std::unordered_map<std::string, Letter> index_;
};

// kQ/I with I generated by finitely many paths of length >= 1.
struct QuiverMonomialAlgebra {
  WeightedQuiver quiver;
  std::vector<Path> relations;

  QuiverMonomialAlgebra() = default;
  QuiverMonomialAlgebra(WeightedQuiver q, std::vector<Path> rels);

  bool operator==(const QuiverMonomialAlgebra&) const = default;
};

// True iff `needle` occurs as a contiguous factor of `hay`.
bool contains_factor(const Word& hay, const Word& needle);

}  // namespace monoquiv
