#pragma once

#include <string>

#include "monoquiv/algebra_model.hpp"

namespace testing {

inline monoquiv::MonomialPresentation presentation(const std::string& json) {
  return std::get<monoquiv::MonomialPresentation>(monoquiv::parse_input(std::string_view(json)));
}

inline monoquiv::WeightedQuiver quiver(const std::string& json) {
  return std::get<monoquiv::WeightedQuiver>(monoquiv::parse_input(std::string_view(json)));
}

// {x,y,z} with x^2, yx, zy, xz, z^2, y^4 forbidden.
inline monoquiv::MonomialPresentation xyz_y4() {
  return presentation(R"({"kind":"monomial","generators":[{"name":"x","degree":1},
    {"name":"y","degree":1},{"name":"z","degree":1}],
    "forbidden":["xx","yx","zy","xz","zz","yyyy"]})");
}

// x in degree 1, y in degree 2, yx and x^3 forbidden.
inline monoquiv::MonomialPresentation xy_weighted() {
  return presentation(R"({"kind":"monomial","generators":[{"name":"x","degree":1},
    {"name":"y","degree":2}],"forbidden":["yx","xxx"]})");
}

// One vertex, loops of degree 1, 2 and 3.
inline monoquiv::WeightedQuiver loops_123() {
  return quiver(R"({"kind":"quiver","vertices":["o"],"arrows":[
    {"name":"x1","source":"o","target":"o","degree":1},
    {"name":"x2","source":"o","target":"o","degree":2},
    {"name":"x3","source":"o","target":"o","degree":3}]})");
}

}  // namespace testing
