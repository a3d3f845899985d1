#include "monoquiv/presentation.hpp"

#include <algorithm>
#include <set>

#include "monoquiv/error.hpp"

namespace monoquiv {

MonomialPresentation::MonomialPresentation(std::vector<Generator> generators,
                                           std::vector<Word> forbidden)
    : generators_(std::move(generators)) {
  for (Letter x = 0; x < generators_.size(); ++x) {
    const std::string where = "generators[" + std::to_string(x) + "]";
    if (generators_[x].name.empty()) {
      throw ValidationError(where + ": empty generator name");
    }
    if (generators_[x].degree < 1) {
      throw ValidationError(where + ": degree must be ≥ 1");
    }
    if (!index_.emplace(generators_[x].name, x).second) {
      throw ValidationError(where + ": duplicate generator \"" +
                            generators_[x].name + "\"");
    }
  }
  std::set<Word> seen;
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    const std::string where = "forbidden[" + std::to_string(i) + "]";
    Word& w = forbidden[i];
    if (w.empty()) throw ValidationError(where + ": empty forbidden word");
    for (Letter x : w) {
      if (x >= generators_.size()) {
        throw ValidationError(where + ": unknown letter index " +
                              std::to_string(x));
      }
    }
    if (seen.insert(w).second) forbidden_.push_back(std::move(w));
  }
}

std::optional<Letter> MonomialPresentation::find_letter(
    std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool MonomialPresentation::all_degree_one() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Generator& g) { return g.degree == 1; });
}

bool MonomialPresentation::single_char_names() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Generator& g) { return g.name.size() == 1; });
}

long MonomialPresentation::degree(const Word& w) const {
  long d = 0;
  for (Letter x : w) d += letter_degree(x);
  return d;
}

std::string MonomialPresentation::format(const Word& w) const {
  if (w.empty()) return "\xCE\xB5";  // ε
  const bool plain = single_char_names();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!plain && i) out += '.';
    out += generators_.at(w[i]).name;
  }
  return out;
}

Word MonomialPresentation::parse_word(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    auto x = find_letter(std::string_view(&c, 1));
    if (!x) {
      throw ValidationError("unknown letter \"" + std::string(1, c) + "\"");
    }
    w.push_back(*x);
  }
  return w;
}

Word MonomialPresentation::parse_word(
    const std::vector<std::string>& names) const {
  Word w;
  w.reserve(names.size());
  for (const std::string& n : names) {
    auto x = find_letter(n);
    if (!x) throw ValidationError("unknown letter \"" + n + "\"");
    w.push_back(*x);
  }
  return w;
}

QuiverMonomialAlgebra::QuiverMonomialAlgebra(WeightedQuiver q,
                                             std::vector<Path> rels)
    : quiver(std::move(q)) {
  std::set<Path> seen;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const std::string where = "relations[" + std::to_string(i) + "]";
    if (rels[i].arrows.empty()) {
      throw ValidationError(where + ": relation must have length >= 1");
    }
    if (!is_valid_path(quiver, rels[i])) {
      throw ValidationError(where + ": arrows are not composable");
    }
    if (seen.insert(rels[i]).second) relations.push_back(std::move(rels[i]));
  }
}

bool contains_factor(const Word& hay, const Word& needle) {
  if (needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) !=
         hay.end();
}

}  // namespace monoquiv
