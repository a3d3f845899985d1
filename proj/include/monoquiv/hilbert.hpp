#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "monoquiv/legal_words.hpp"
#include "monoquiv/presentation.hpp"
#include "monoquiv/quiver.hpp"
#include "monoquiv/report.hpp"

namespace monoquiv {

// Number of paths u -> v of each degree d <= N, with degree and length
// marginals. Degree-0 entries are the idempotents: 1 on the diagonal.
class PathCountTable {
 public:
  PathCountTable(std::size_t num_vertices, std::size_t max_degree);

  std::size_t num_vertices() const { return n_; }
  std::size_t max_degree() const { return max_; }

  const mpz_class& count(VertexIndex u, VertexIndex v, std::size_t d) const {
    return counts_.at((u * n_ + v) * (max_ + 1) + d);
  }
  mpz_class& count(VertexIndex u, VertexIndex v, std::size_t d) {
    return counts_.at((u * n_ + v) * (max_ + 1) + d);
  }

  // Totals over all endpoint pairs.
  DegreeSeries by_degree() const;
  // Totals over endpoint pairs with both ends in `vertices`.
  DegreeSeries by_degree(const std::vector<VertexIndex>& vertices) const;
  // Paths of length r (any degree), r <= N.
  const DegreeSeries& by_length() const { return by_length_; }

 private:
  friend PathCountTable path_counts(const WeightedQuiver&, std::size_t);
  std::size_t n_;
  std::size_t max_;
  std::vector<mpz_class> counts_;
  DegreeSeries by_length_;
};

// count(d, u -> v) = sum over arrows a into v of count(d - deg a, u -> s(a)).
PathCountTable path_counts(const WeightedQuiver& q, std::size_t max_degree);

mpz_class path_counts_by_length(const WeightedQuiver& q, std::size_t r);

// Side-by-side graded dimensions of A and kQ(A). The difference is a
// diagnostic only; the report passes or fails on the length bijection
// #paths of length r in Q(A) = |L_{r+ell}|.
struct SeriesComparison {
  DegreeSeries algebra;
  DegreeSeries path_algebra;
  std::vector<mpz_class> difference;  // path_algebra - algebra
  SuiteReport bijection;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

SeriesComparison compare_series(const MonomialPresentation& p, std::size_t max_degree,
                                std::size_t max_length = 8);

nlohmann::json to_json(const DegreeSeries& s);

// Aligned plain-text table, one row per named series.
std::string format_series_table(
    const std::vector<std::pair<std::string, std::vector<mpz_class>>>& rows);

}  // namespace monoquiv
