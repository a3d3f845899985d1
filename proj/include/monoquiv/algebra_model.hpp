#pragma once

#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "monoquiv/presentation.hpp"
#include "monoquiv/quiver.hpp"

namespace monoquiv {

using AlgebraInput =
    std::variant<WeightedQuiver, MonomialPresentation, QuiverMonomialAlgebra>;

enum class AlgebraClassLabel { PA1, WPA, MA, CMA, CMA1 };

std::string to_string(AlgebraClassLabel label);
std::optional<AlgebraClassLabel> parse_class_label(std::string_view text);

struct AlgebraClass {
  AlgebraClassLabel most_specific;
  std::set<AlgebraClassLabel> labels;

  bool has(AlgebraClassLabel l) const { return labels.count(l) != 0; }
  // "CMA (also MA)"
  std::string describe() const;
};

// Parses the JSON input schema. Shape problems throw ParseError; semantic
// problems (unknown references, degree < 1, duplicates) throw
// ValidationError. Messages carry a JSON-pointer-like location.
AlgebraInput parse_input(std::string_view text);
AlgebraInput parse_input(const nlohmann::json& doc);

nlohmann::json to_json(const WeightedQuiver& q);
nlohmann::json to_json(const MonomialPresentation& p);
nlohmann::json to_json(const QuiverMonomialAlgebra& a);
nlohmann::json to_json(const AlgebraInput& input);

AlgebraClass classify(const AlgebraInput& input);

// Presentation of k + A_{>=1} with one generator per arrow. Throws
// ValidationError for an arrowless quiver.
MonomialPresentation connectify(const QuiverMonomialAlgebra& alg);
MonomialPresentation connectify(const WeightedQuiver& q);

// Drops every forbidden word that has another forbidden word as a proper
// factor. The ideal is unchanged.
MonomialPresentation reduce_forbidden(const MonomialPresentation& p);

}  // namespace monoquiv
