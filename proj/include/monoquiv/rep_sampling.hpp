#pragma once

#include <cstddef>
#include <random>

#include "monoquiv/graded_reps.hpp"

namespace monoquiv {

struct RandomQuiverOptions {
  std::size_t max_vertices = 3;
  std::size_t max_arrows = 4;
  int max_degree = 3;
  // Guarantee at least one arrow of degree > 1 (something to split).
  bool require_heavy_arrow = true;
};

WeightedQuiver random_weighted_quiver(std::mt19937_64& rng,
                                      const RandomQuiverOptions& opts = {});

// Random dimensions in [0, max_dim] and sparse small-integer arrow maps,
// with whole maps zeroed now and then. A path algebra has no relations, so
// every such choice is a representation.
TruncatedGradedRep sample_rep(QuiverPtr q, int lo, int hi, std::mt19937_64& rng,
                              std::size_t max_dim = 4);

// Sub-representation generated by the elements, with its inclusion.
SubRep generated_subrep(const TruncatedGradedRep& m, const std::vector<Element>& gens);

// Random homogeneous element of m at a random nonzero position; nullopt if
// m is zero.
std::optional<Element> random_element(const TruncatedGradedRep& m, std::mt19937_64& rng);

// A morphism into or out of `m` built from elements: a hom from a truncated
// projective, the inclusion of a generated sub-representation, or the
// projection onto a quotient. Sources and targets other than m respect
// max_dim.
RepMorphism sample_morphism(const TruncatedGradedRep& m, std::mt19937_64& rng,
                            std::size_t max_dim = 4);

}  // namespace monoquiv
