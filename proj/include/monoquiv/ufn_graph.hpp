#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "monoquiv/legal_words.hpp"
#include "monoquiv/presentation.hpp"
#include "monoquiv/quiver.hpp"
#include "monoquiv/report.hpp"

namespace monoquiv {

// ell = (max forbidden length) - 1, with ell = 0 when nothing is forbidden.
std::size_t ell(const MonomialPresentation& p);

// The weighted Ufnarovskii graph Q(A): vertices are the legal words of
// length ell, arrows the legal words of length ell+1. An arrow w runs from
// its length-ell prefix to its length-ell suffix, is labeled by its first
// letter and carries that letter's degree. Vertex and arrow ids are the
// formatted words; both lists are in lexicographic generator order.
class UfnGraph {
 public:
  UfnGraph(MonomialPresentation p, std::size_t budget = kDefaultEnumerationBudget);

  const MonomialPresentation& presentation() const { return presentation_; }
  const FactorAutomaton& automaton() const { return automaton_; }
  std::size_t ell() const { return ell_; }
  const WeightedQuiver& quiver() const { return quiver_; }

  const Word& vertex_word(VertexIndex v) const { return vertex_words_.at(v); }
  const Word& arrow_word(ArrowIndex a) const { return arrow_words_.at(a); }
  Letter label(ArrowIndex a) const { return labels_.at(a); }

  std::optional<VertexIndex> vertex_of(const Word& w) const;
  std::optional<ArrowIndex> arrow_of(const Word& w) const;

  // Arrows out of v carrying label x.
  const std::vector<ArrowIndex>& out_labeled(VertexIndex v, Letter x) const {
    return out_labeled_.at(v * presentation_.num_letters() + x);
  }

 private:
  MonomialPresentation presentation_;
  FactorAutomaton automaton_;
  std::size_t ell_;
  WeightedQuiver quiver_;
  std::vector<Word> vertex_words_;
  std::vector<Word> arrow_words_;
  std::vector<Letter> labels_;
  std::map<Word, VertexIndex> vertex_index_;
  std::map<Word, ArrowIndex> arrow_index_;
  std::vector<std::vector<ArrowIndex>> out_labeled_;
};

UfnGraph build_ufnarovskii(const MonomialPresentation& p,
                           std::size_t budget = kDefaultEnumerationBudget);

struct LabeledPath {
  Path path;
  Word label;
  long degree = 0;
  VertexIndex source = 0;
  VertexIndex target = 0;
};

Word path_label(const UfnGraph& g, const Path& p);
LabeledPath labeled(const UfnGraph& g, const Path& p);

// The unique path with the given label ending at v, rebuilt right to left
// from the word label·v; nullopt when some arrow on the way is not legal.
// Throws std::invalid_argument for letters outside the alphabet and
// std::out_of_range for an unknown vertex.
std::optional<Path> path_from_label_target(const UfnGraph& g, const Word& label,
                                           VertexIndex v);

// Finite rational combination of paths in one quiver.
class PathSum {
 public:
  PathSum() = default;

  void add(const Path& p, const mpq_class& c);
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Path, mpq_class>& terms() const { return terms_; }

  // Right multiplication by the idempotent e_v.
  PathSum times_idempotent(const WeightedQuiver& q, VertexIndex v) const;
  // Set of degrees present; homogeneous sums have at most one.
  std::vector<long> degrees(const WeightedQuiver& q) const;

  std::string format(const WeightedQuiver& q) const;
  bool operator==(const PathSum&) const = default;

  static PathSum single(const Path& p) {
    PathSum s;
    s.add(p, 1);
    return s;
  }

 private:
  std::map<Path, mpq_class> terms_;
};

PathSum multiply(const WeightedQuiver& q, const PathSum& lhs, const PathSum& rhs);

// f(w): the sum of all paths labeled w; f(ε) = sum of the e_v.
PathSum apply_f(const UfnGraph& g, const Word& w);

// (i) f(u)f(v) = f(uv) on `trials` random pairs with |u|,|v| <= max_len,
// (ii) f(w) = 0 for every forbidden w, (iii) f(w) homogeneous of degree
// deg(w).
SuiteReport check_f_is_graded_hom(const UfnGraph& g, std::size_t trials,
                                  std::size_t max_len, std::uint64_t seed);

// f(label(p))·e_{t(p)} = p for every path p of degree <= max_degree.
SuiteReport check_graded_generation(const UfnGraph& g, long max_degree);

// #paths of length r = |L_{r+ell}| for r <= max_r; the map
// p -> label(p)·t(p) is injective into L_{r+ell} and path_from_label_target
// inverts it for every path of length <= round_trip_len; arrow labels and
// degrees agree with first letters.
SuiteReport check_bijection(const UfnGraph& g, std::size_t max_r,
                            std::size_t round_trip_len);

struct Growth {
  bool exponential = false;
  std::size_t degree = 0;  // meaningful when !exponential

  std::string to_string() const;
  bool operator==(const Growth&) const = default;
};

// Exponential iff some strongly connected component has more internal arrows
// than vertices; otherwise polynomial of degree equal to the longest chain of
// cycle-bearing components in the condensation.
Growth classify_growth(const WeightedQuiver& q);

// Graphviz rendering: vertex label = word, arrow label = "word/letter:degree".
std::string to_dot(const UfnGraph& g);

}  // namespace monoquiv
