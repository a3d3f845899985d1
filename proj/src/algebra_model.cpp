#include "monoquiv/algebra_model.hpp"

#include <algorithm>

#include "monoquiv/error.hpp"

namespace monoquiv {

using nlohmann::json;

std::string to_string(AlgebraClassLabel label) {
  switch (label) {
    case AlgebraClassLabel::PA1: return "PA1";
    case AlgebraClassLabel::WPA: return "WPA";
    case AlgebraClassLabel::MA: return "MA";
    case AlgebraClassLabel::CMA: return "CMA";
    case AlgebraClassLabel::CMA1: return "CMA1";
  }
  return "?";
}

std::optional<AlgebraClassLabel> parse_class_label(std::string_view text) {
  for (auto l : {AlgebraClassLabel::PA1, AlgebraClassLabel::WPA,
                 AlgebraClassLabel::MA, AlgebraClassLabel::CMA,
                 AlgebraClassLabel::CMA1}) {
    if (to_string(l) == text) return l;
  }
  return std::nullopt;
}

namespace {

// Position in the containment diagram: bottom row 0, MA on top.
int generality(AlgebraClassLabel l) {
  switch (l) {
    case AlgebraClassLabel::PA1:
    case AlgebraClassLabel::CMA1: return 0;
    case AlgebraClassLabel::WPA:
    case AlgebraClassLabel::CMA: return 1;
    case AlgebraClassLabel::MA: return 2;
  }
  return 3;
}

}  // namespace

std::string AlgebraClass::describe() const {
  std::vector<AlgebraClassLabel> others;
  for (auto l : labels) {
    if (l != most_specific) others.push_back(l);
  }
  std::stable_sort(others.begin(), others.end(),
                   [](auto a, auto b) { return generality(a) < generality(b); });
  std::string out = to_string(most_specific);
  if (!others.empty()) {
    out += " (also ";
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (i) out += ", ";
      out += to_string(others[i]);
    }
    out += ")";
  }
  return out;
}

namespace {

[[noreturn]] void shape_error(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) shape_error(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string()) shape_error(where, "expected a string");
  return v.get<std::string>();
}

int require_degree(const json& v, const std::string& where) {
  if (!v.is_number_integer()) shape_error(where, "expected an integer degree");
  long long d = v.get<long long>();
  if (d < 1) throw ValidationError(where + ": degree must be ≥ 1");
  if (d > 1'000'000) throw ValidationError(where + ": degree too large");
  return static_cast<int>(d);
}

const json& require_array(const json& obj, const char* key,
                          const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_array()) shape_error(where + "." + key, "expected an array");
  return v;
}

MonomialPresentation parse_presentation(const json& doc) {
  const json& gens = require_array(doc, "generators", "$");
  std::vector<Generator> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "$.generators[" + std::to_string(i) + "]";
    if (!gens[i].is_object()) shape_error(where, "expected an object");
    std::string name = require_string(require(gens[i], "name", where), where + ".name");
    int degree = require_degree(require(gens[i], "degree", where), where + ".degree");
    generators.push_back({std::move(name), degree});
  }
  // Resolve forbidden words against a forbidden-free presentation first so
  // letter errors carry the word's location.
  MonomialPresentation alphabet(generators, {});
  std::vector<Word> forbidden;
  if (doc.contains("forbidden")) {
    const json& fs = require_array(doc, "forbidden", "$");
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const std::string where = "$.forbidden[" + std::to_string(i) + "]";
      try {
        if (fs[i].is_string()) {
          forbidden.push_back(alphabet.parse_word(fs[i].get<std::string>()));
        } else if (fs[i].is_array()) {
          std::vector<std::string> names;
          for (std::size_t j = 0; j < fs[i].size(); ++j) {
            names.push_back(require_string(
                fs[i][j], where + "[" + std::to_string(j) + "]"));
          }
          forbidden.push_back(alphabet.parse_word(names));
        } else {
          shape_error(where, "expected a string or an array of letter names");
        }
      } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
      }
      if (forbidden.back().empty()) {
        throw ValidationError(where + ": empty forbidden word");
      }
    }
  }
  return MonomialPresentation(std::move(generators), std::move(forbidden));
}

AlgebraInput parse_quiver(const json& doc) {
  const json& vs = require_array(doc, "vertices", "$");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    vertices.push_back(require_string(vs[i], "$.vertices[" + std::to_string(i) + "]"));
  }
  const json& as = require_array(doc, "arrows", "$");
  std::vector<WeightedQuiver::NamedArrow> arrows;
  for (std::size_t i = 0; i < as.size(); ++i) {
    const std::string where = "$.arrows[" + std::to_string(i) + "]";
    if (!as[i].is_object()) shape_error(where, "expected an object");
    arrows.push_back({require_string(require(as[i], "name", where), where + ".name"),
                      require_string(require(as[i], "source", where), where + ".source"),
                      require_string(require(as[i], "target", where), where + ".target"),
                      require_degree(require(as[i], "degree", where), where + ".degree")});
  }
  WeightedQuiver q;
  try {
    q = WeightedQuiver::from_names(std::move(vertices), arrows);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("$.") + e.what());
  }
  std::vector<Path> relations;
  if (doc.contains("relations")) {
    const json& rs = require_array(doc, "relations", "$");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string where = "$.relations[" + std::to_string(i) + "]";
      if (!rs[i].is_array()) shape_error(where, "expected an array of arrow names");
      Path p;
      for (std::size_t j = 0; j < rs[i].size(); ++j) {
        std::string name = require_string(rs[i][j], where + "[" + std::to_string(j) + "]");
        auto a = q.find_arrow(name);
        if (!a) throw ValidationError(where + ": unknown arrow \"" + name + "\"");
        if (j == 0) p.start = q.arrow(*a).source;
        p.arrows.push_back(*a);
      }
      relations.push_back(std::move(p));
    }
  }
  if (relations.empty()) return q;
  try {
    return QuiverMonomialAlgebra(std::move(q), std::move(relations));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("$.") + e.what());
  }
}

}  // namespace

AlgebraInput parse_input(const json& doc) {
  if (!doc.is_object()) shape_error("$", "expected a JSON object");
  std::string kind = require_string(require(doc, "kind", "$"), "$.kind");
  if (kind == "monomial") return parse_presentation(doc);
  if (kind == "quiver") return parse_quiver(doc);
  shape_error("$.kind", "unknown kind \"" + kind + "\"");
}

AlgebraInput parse_input(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_input(doc);
}

json to_json(const WeightedQuiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) {
    arrows.push_back({{"name", a.name},
                      {"source", q.vertex(a.source)},
                      {"target", q.vertex(a.target)},
                      {"degree", a.degree}});
  }
  return {{"kind", "quiver"},
          {"vertices", q.vertices()},
          {"arrows", std::move(arrows)},
          {"relations", json::array()}};
}

json to_json(const MonomialPresentation& p) {
  json gens = json::array();
  for (const Generator& g : p.generators()) {
    gens.push_back({{"name", g.name}, {"degree", g.degree}});
  }
  const bool plain = p.single_char_names();
  json forbidden = json::array();
  for (const Word& w : p.forbidden()) {
    if (plain) {
      forbidden.push_back(p.format(w));
    } else {
      json names = json::array();
      for (Letter x : w) names.push_back(p.generators()[x].name);
      forbidden.push_back(std::move(names));
    }
  }
  return {{"kind", "monomial"},
          {"generators", std::move(gens)},
          {"forbidden", std::move(forbidden)}};
}

json to_json(const QuiverMonomialAlgebra& a) {
  json out = to_json(a.quiver);
  json rels = json::array();
  for (const Path& p : a.relations) {
    json names = json::array();
    for (ArrowIndex i : p.arrows) names.push_back(a.quiver.arrow(i).name);
    rels.push_back(std::move(names));
  }
  out["relations"] = std::move(rels);
  return out;
}

json to_json(const AlgebraInput& input) {
  return std::visit([](const auto& v) { return to_json(v); }, input);
}

AlgebraClass classify(const AlgebraInput& input) {
  using L = AlgebraClassLabel;
  if (auto* q = std::get_if<WeightedQuiver>(&input)) {
    if (q->all_degree_one()) return {L::PA1, {L::PA1, L::WPA, L::MA}};
    return {L::WPA, {L::WPA, L::MA}};
  }
  if (auto* p = std::get_if<MonomialPresentation>(&input)) {
    if (p->all_degree_one()) return {L::CMA1, {L::CMA1, L::CMA, L::MA}};
    return {L::CMA, {L::CMA, L::MA}};
  }
  const auto& alg = std::get<QuiverMonomialAlgebra>(input);
  if (alg.relations.empty()) return classify(AlgebraInput{alg.quiver});
  return {L::MA, {L::MA}};
}

MonomialPresentation connectify(const QuiverMonomialAlgebra& alg) {
  const WeightedQuiver& q = alg.quiver;
  if (q.num_arrows() == 0) {
    throw ValidationError(
        "connectify: quiver has no arrows; k + A_{>=1} would have no "
        "generators");
  }
  std::vector<Generator> generators;
  for (const Arrow& a : q.arrows()) generators.push_back({a.name, a.degree});
  std::vector<Word> forbidden;
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    for (ArrowIndex b = 0; b < q.num_arrows(); ++b) {
      if (q.arrow(a).target != q.arrow(b).source) forbidden.push_back({a, b});
    }
  }
  // Arrow i is letter i, so a relation path is already a word.
  for (const Path& r : alg.relations) forbidden.push_back(r.arrows);
  return MonomialPresentation(std::move(generators), std::move(forbidden));
}

MonomialPresentation connectify(const WeightedQuiver& q) {
  return connectify(QuiverMonomialAlgebra(q, {}));
}

MonomialPresentation reduce_forbidden(const MonomialPresentation& p) {
  const auto& fs = p.forbidden();
  std::vector<Word> kept;
  for (const Word& w : fs) {
    bool redundant = std::any_of(fs.begin(), fs.end(), [&](const Word& u) {
      return u.size() < w.size() && contains_factor(w, u);
    });
    if (!redundant) kept.push_back(w);
  }
  return MonomialPresentation(p.generators(), std::move(kept));
}

}  // namespace monoquiv
