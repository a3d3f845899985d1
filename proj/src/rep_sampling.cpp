#include "monoquiv/rep_sampling.hpp"

#include <stdexcept>

namespace monoquiv {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Entries in {-2..2}, about half of them zero.
Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng, 0.5)) m(r, c) = uniform(rng, -2, 2);
    }
  }
  return m;
}

Matrix nonzero_vector(std::size_t n, std::mt19937_64& rng) {
  Matrix v = random_matrix(n, 1, rng);
  if (v.is_zero()) v(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1)), 0) = 1;
  return v;
}

}  // namespace

WeightedQuiver random_weighted_quiver(std::mt19937_64& rng, const RandomQuiverOptions& opts) {
  if (opts.max_vertices == 0 || opts.max_arrows == 0 || opts.max_degree < 1) {
    throw std::invalid_argument("random quiver: empty options");
  }
  if (opts.require_heavy_arrow && opts.max_degree < 2) {
    throw std::invalid_argument("random quiver: a heavy arrow needs max_degree >= 2");
  }
  const int nv = uniform(rng, 1, static_cast<int>(opts.max_vertices));
  const int na = uniform(rng, 1, static_cast<int>(opts.max_arrows));
  std::vector<std::string> vertices;
  for (int i = 0; i < nv; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<Arrow> arrows;
  bool heavy = false;
  for (int i = 0; i < na; ++i) {
    Arrow a{"a" + std::to_string(i), static_cast<VertexIndex>(uniform(rng, 0, nv - 1)),
            static_cast<VertexIndex>(uniform(rng, 0, nv - 1)), uniform(rng, 1, opts.max_degree)};
    heavy = heavy || a.degree > 1;
    arrows.push_back(std::move(a));
  }
  if (opts.require_heavy_arrow && !heavy) {
    arrows[static_cast<std::size_t>(uniform(rng, 0, na - 1))].degree = uniform(rng, 2, opts.max_degree);
  }
  return WeightedQuiver(std::move(vertices), std::move(arrows));
}

TruncatedGradedRep sample_rep(QuiverPtr q, int lo, int hi, std::mt19937_64& rng,
                              std::size_t max_dim) {
  const WeightedQuiver& Q = *q;
  const int cap = static_cast<int>(max_dim);
  std::vector<std::vector<std::size_t>> dims(Q.num_vertices());
  for (auto& row : dims) {
    for (int d = lo; d <= hi; ++d) {
      row.push_back(coin(rng, 0.25) ? 0 : static_cast<std::size_t>(uniform(rng, 0, cap)));
    }
  }
  auto dim = [&](VertexIndex v, int d) { return d < lo ? 0 : dims[v][static_cast<std::size_t>(d - lo)]; };
  std::vector<std::vector<Matrix>> maps(Q.num_arrows());
  for (ArrowIndex a = 0; a < Q.num_arrows(); ++a) {
    const Arrow& arr = Q.arrow(a);
    const bool silent = coin(rng, 0.15);
    for (int d = lo; d + arr.degree <= hi; ++d) {
      const std::size_t rows = dim(arr.target, d + arr.degree);
      const std::size_t cols = dim(arr.source, d);
      maps[a].push_back(silent ? Matrix(rows, cols) : random_matrix(rows, cols, rng));
    }
  }
  return TruncatedGradedRep(std::move(q), lo, hi, std::move(dims), std::move(maps));
}

std::optional<Element> random_element(const TruncatedGradedRep& m, std::mt19937_64& rng) {
  std::vector<std::pair<VertexIndex, int>> spots;
  for (VertexIndex v = 0; v < m.quiver().num_vertices(); ++v) {
    for (int d = m.lo(); d <= m.hi(); ++d) {
      if (m.dim(v, d) > 0) spots.emplace_back(v, d);
    }
  }
  if (spots.empty()) return std::nullopt;
  auto [v, d] = spots[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(spots.size()) - 1))];
  return Element{v, d, nonzero_vector(m.dim(v, d), rng)};
}

RepMorphism sample_morphism(const TruncatedGradedRep& m, std::mt19937_64& rng,
                            std::size_t max_dim) {
  std::vector<Element> gens;
  const int count = uniform(rng, 1, 2);
  for (int i = 0; i < count; ++i) {
    if (auto e = random_element(m, rng)) gens.push_back(std::move(*e));
  }
  switch (uniform(rng, 0, 3)) {
    case 0:
      return quotient_by_elements(m, gens).projection;
    case 1:
      return generated_subrep(m, gens).inclusion;
    case 2:
      // Generators near the top keep the projective small.
      if (!gens.empty() && gens.front().degree >= m.hi() - 2) {
        const Element& e = gens.front();
        TruncatedProjective p = projective(m.quiver_ptr(), e.vertex, e.degree, m.lo(), m.hi());
        if (p.rep.max_dim() <= max_dim) return hom_from_element(p, m, e.vector);
      }
      [[fallthrough]];
    default: {
      // Scalar endomorphism.
      RepMorphism phi = RepMorphism::identity(m);
      const int c = uniform(rng, -2, 2);
      for (VertexIndex v = 0; v < m.quiver().num_vertices(); ++v) {
        for (int d = m.lo(); d <= m.hi(); ++d) {
          Matrix& x = phi.component(v, d);
          for (std::size_t i = 0; i < x.rows(); ++i) x(i, i) = c;
        }
      }
      return phi;
    }
  }
}

}  // namespace monoquiv
