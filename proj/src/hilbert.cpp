#include "monoquiv/hilbert.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "monoquiv/ufn_graph.hpp"

namespace monoquiv {

PathCountTable::PathCountTable(std::size_t num_vertices, std::size_t max_degree)
    : n_(num_vertices),
      max_(max_degree),
      counts_(num_vertices * num_vertices * (max_degree + 1), 0) {
  by_length_.coefficients.assign(max_degree + 1, 0);
}

DegreeSeries PathCountTable::by_degree() const {
  std::vector<VertexIndex> all(n_);
  for (VertexIndex v = 0; v < n_; ++v) all[v] = v;
  return by_degree(all);
}

DegreeSeries PathCountTable::by_degree(const std::vector<VertexIndex>& vertices) const {
  DegreeSeries out;
  out.coefficients.assign(max_ + 1, 0);
  for (VertexIndex u : vertices) {
    for (VertexIndex v : vertices) {
      for (std::size_t d = 0; d <= max_; ++d) out.coefficients[d] += count(u, v, d);
    }
  }
  return out;
}

PathCountTable path_counts(const WeightedQuiver& q, std::size_t max_degree) {
  const std::size_t n = q.num_vertices();
  PathCountTable table(n, max_degree);
  for (VertexIndex u = 0; u < n; ++u) {
    table.count(u, u, 0) = 1;
    for (std::size_t d = 1; d <= max_degree; ++d) {
      for (const Arrow& a : q.arrows()) {
        const auto deg = static_cast<std::size_t>(a.degree);
        if (deg > d) continue;
        const mpz_class& before = table.count(u, a.source, d - deg);
        if (before != 0) table.count(u, a.target, d) += before;
      }
    }
  }
  std::vector<mpz_class> ending(n, 1);
  for (std::size_t r = 0; r <= max_degree; ++r) {
    for (const auto& c : ending) table.by_length_.coefficients[r] += c;
    std::vector<mpz_class> next(n, 0);
    for (const Arrow& a : q.arrows()) next[a.target] += ending[a.source];
    ending = std::move(next);
  }
  return table;
}

mpz_class path_counts_by_length(const WeightedQuiver& q, std::size_t r) {
  std::vector<mpz_class> ending(q.num_vertices(), 1);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<mpz_class> next(q.num_vertices(), 0);
    for (const Arrow& a : q.arrows()) next[a.target] += ending[a.source];
    ending = std::move(next);
  }
  mpz_class total = 0;
  for (const auto& c : ending) total += c;
  return total;
}

SeriesComparison compare_series(const MonomialPresentation& p, std::size_t max_degree,
                                std::size_t max_length) {
  UfnGraph g(p);
  SeriesComparison out;
  out.algebra = count_by_degree(g.automaton(), max_degree);
  out.path_algebra = path_counts(g.quiver(), max_degree).by_degree();
  for (std::size_t d = 0; d <= max_degree; ++d) {
    out.difference.push_back(out.path_algebra[d] - out.algebra[d]);
  }
  out.bijection = SuiteReport{"length-bijection"};
  Check& c = out.bijection.add("#paths of length r in Q(A) = |L_{r+ell}|, r <= " +
                              std::to_string(max_length));
  DegreeSeries legal = count_by_length(g.automaton(), max_length + g.ell());
  for (std::size_t r = 0; r <= max_length; ++r) {
    ++c.cases;
    mpz_class paths = path_counts_by_length(g.quiver(), r);
    if (paths != legal[r + g.ell()]) {
      c.fail("r=" + std::to_string(r) + ": " + paths.get_str() + " vs " +
             legal[r + g.ell()].get_str());
    }
  }
  out.bijection.notes.push_back(
      "series difference is diagnostic: ker f and coker f are torsion but need "
      "not be finite-dimensional");
  return out;
}

nlohmann::json to_json(const DegreeSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : s.coefficients) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(c.get_str());
    }
  }
  return arr;
}

nlohmann::json SeriesComparison::to_json() const {
  DegreeSeries diff{difference};
  return {{"A", monoquiv::to_json(algebra)},
          {"kQ(A)", monoquiv::to_json(path_algebra)},
          {"difference", monoquiv::to_json(diff)},
          {"length_bijection", bijection.to_json()}};
}

std::string SeriesComparison::to_text() const {
  std::string out = format_series_table({{"A", algebra.coefficients},
                                         {"kQ(A)", path_algebra.coefficients},
                                         {"kQ(A)-A", difference}});
  out += bijection.to_text();
  return out;
}

std::string format_series_table(
    const std::vector<std::pair<std::string, std::vector<mpz_class>>>& rows) {
  std::size_t columns = 0, name_width = 6;
  for (const auto& [name, values] : rows) {
    columns = std::max(columns, values.size());
    name_width = std::max(name_width, name.size());
  }
  std::vector<std::size_t> width(columns, 1);
  for (std::size_t d = 0; d < columns; ++d) {
    width[d] = std::to_string(d).size();
    for (const auto& [name, values] : rows) {
      if (d < values.size()) width[d] = std::max(width[d], values[d].get_str().size());
    }
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_width)) << "degree";
  for (std::size_t d = 0; d < columns; ++d) {
    os << ' ' << std::right << std::setw(static_cast<int>(width[d])) << d;
  }
  os << '\n';
  for (const auto& [name, values] : rows) {
    os << std::left << std::setw(static_cast<int>(name_width)) << name;
    for (std::size_t d = 0; d < values.size(); ++d) {
      os << ' ' << std::right << std::setw(static_cast<int>(width[d])) << values[d].get_str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace monoquiv
