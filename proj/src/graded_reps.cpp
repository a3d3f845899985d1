#include "monoquiv/graded_reps.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "monoquiv/error.hpp"
#include "monoquiv/rep_sampling.hpp"

namespace monoquiv {

namespace {

std::size_t window_size(int lo, int hi) { return static_cast<std::size_t>(hi - lo + 1); }

std::size_t map_count(int lo, int hi, int degree) {
  int n = hi - degree - lo + 1;
  return n > 0 ? static_cast<std::size_t>(n) : 0;
}

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b) {
  return a == b || *a == *b;
}

void require_same_frame(const TruncatedGradedRep& a, const TruncatedGradedRep& b,
                        const char* what) {
  if (!same_quiver(a.quiver_ptr(), b.quiver_ptr()) || a.lo() != b.lo() || a.hi() != b.hi()) {
    throw std::invalid_argument(std::string(what) + ": quiver or window mismatch");
  }
}

}  // namespace

TruncatedGradedRep::TruncatedGradedRep(QuiverPtr q, int lo, int hi,
                                       std::vector<std::vector<std::size_t>> dims,
                                       std::vector<std::vector<Matrix>> maps)
    : quiver_(std::move(q)), lo_(lo), hi_(hi), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (hi_ < lo_) throw std::invalid_argument("rep: empty window");
  const WeightedQuiver& Q = *quiver_;
  if (dims_.size() != Q.num_vertices()) throw std::invalid_argument("rep: one dimension row per vertex");
  for (const auto& row : dims_) {
    if (row.size() != window_size(lo_, hi_)) throw std::invalid_argument("rep: dimension row length");
  }
  if (maps_.size() != Q.num_arrows()) throw std::invalid_argument("rep: one map list per arrow");
  for (ArrowIndex a = 0; a < Q.num_arrows(); ++a) {
    const Arrow& arr = Q.arrow(a);
    if (maps_[a].size() != map_count(lo_, hi_, arr.degree)) {
      throw std::invalid_argument("rep: arrow " + arr.name + " has the wrong number of maps");
    }
    for (std::size_t i = 0; i < maps_[a].size(); ++i) {
      const int d = lo_ + static_cast<int>(i);
      const Matrix& m = maps_[a][i];
      if (m.rows() != dim(arr.target, d + arr.degree) || m.cols() != dim(arr.source, d)) {
        throw std::invalid_argument("rep: arrow " + arr.name + " degree " + std::to_string(d) +
                                    " has shape " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
      }
    }
  }
}

TruncatedGradedRep TruncatedGradedRep::zero(QuiverPtr q, int lo, int hi) {
  const WeightedQuiver& Q = *q;
  std::vector<std::vector<std::size_t>> dims(Q.num_vertices(),
                                             std::vector<std::size_t>(window_size(lo, hi), 0));
  std::vector<std::vector<Matrix>> maps(Q.num_arrows());
  for (ArrowIndex a = 0; a < Q.num_arrows(); ++a) {
    maps[a].assign(map_count(lo, hi, Q.arrow(a).degree), Matrix());
  }
  return TruncatedGradedRep(std::move(q), lo, hi, std::move(dims), std::move(maps));
}

std::size_t TruncatedGradedRep::dim(VertexIndex v, int d) const {
  if (d < lo_) return 0;
  if (d > hi_) throw std::out_of_range("rep: degree above the window");
  return dims_.at(v)[static_cast<std::size_t>(d - lo_)];
}

bool TruncatedGradedRep::has_map(ArrowIndex a, int d) const {
  return d >= lo_ && d + quiver_->arrow(a).degree <= hi_;
}

Matrix TruncatedGradedRep::map(ArrowIndex a, int d) const {
  const Arrow& arr = quiver_->arrow(a);
  if (d + arr.degree > hi_) throw std::out_of_range("rep: map leaves the window");
  if (d < lo_) return Matrix(dim(arr.target, d + arr.degree), 0);
  return maps_.at(a)[static_cast<std::size_t>(d - lo_)];
}

std::size_t TruncatedGradedRep::total_dim() const {
  std::size_t t = 0;
  for (const auto& row : dims_) {
    for (auto x : row) t += x;
  }
  return t;
}

std::size_t TruncatedGradedRep::max_dim() const {
  std::size_t t = 0;
  for (const auto& row : dims_) {
    for (auto x : row) t = std::max(t, x);
  }
  return t;
}

bool TruncatedGradedRep::operator==(const TruncatedGradedRep& other) const {
  return same_quiver(quiver_, other.quiver_) && lo_ == other.lo_ && hi_ == other.hi_ &&
         dims_ == other.dims_ && maps_ == other.maps_;
}

RepMorphism::RepMorphism(TruncatedGradedRep source, TruncatedGradedRep target,
                         std::vector<std::vector<Matrix>> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_same_frame(source_, target_, "morphism");
  const std::size_t n = source_.quiver().num_vertices();
  if (components_.size() != n) throw std::invalid_argument("morphism: one component row per vertex");
  for (VertexIndex v = 0; v < n; ++v) {
    if (components_[v].size() != window_size(source_.lo(), source_.hi())) {
      throw std::invalid_argument("morphism: component row length");
    }
    for (int d = source_.lo(); d <= source_.hi(); ++d) {
      const Matrix& m = component(v, d);
      if (m.rows() != target_.dim(v, d) || m.cols() != source_.dim(v, d)) {
        throw std::invalid_argument("morphism: component at " + source_.quiver().vertex(v) +
                                    " degree " + std::to_string(d) + " has the wrong shape");
      }
    }
  }
}

RepMorphism RepMorphism::identity(const TruncatedGradedRep& m) {
  std::vector<std::vector<Matrix>> comps(m.quiver().num_vertices());
  for (VertexIndex v = 0; v < comps.size(); ++v) {
    for (int d = m.lo(); d <= m.hi(); ++d) comps[v].push_back(Matrix::identity(m.dim(v, d)));
  }
  return RepMorphism(m, m, std::move(comps));
}

RepMorphism RepMorphism::zero(const TruncatedGradedRep& source, const TruncatedGradedRep& target) {
  std::vector<std::vector<Matrix>> comps(source.quiver().num_vertices());
  for (VertexIndex v = 0; v < comps.size(); ++v) {
    for (int d = source.lo(); d <= source.hi(); ++d) {
      comps[v].push_back(Matrix(target.dim(v, d), source.dim(v, d)));
    }
  }
  return RepMorphism(source, target, std::move(comps));
}

const Matrix& RepMorphism::component(VertexIndex v, int d) const {
  return components_.at(v).at(static_cast<std::size_t>(d - source_.lo()));
}

Matrix& RepMorphism::component(VertexIndex v, int d) {
  return components_.at(v).at(static_cast<std::size_t>(d - source_.lo()));
}

std::string RepMorphism::Witness::describe() const {
  std::ostringstream os;
  os << "square for arrow " << arrow << " at degree " << degree << ", entry (" << row << ","
     << col << "): phi_t*M_a = " << rational_string(lhs)
     << " but N_a*phi_s = " << rational_string(rhs);
  return os.str();
}

std::optional<RepMorphism::Witness> RepMorphism::validate() const {
  const WeightedQuiver& q = source_.quiver();
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    for (int d = source_.lo(); d + arr.degree <= source_.hi(); ++d) {
      Matrix lhs = component(arr.target, d + arr.degree) * source_.map(a, d);
      Matrix rhs = target_.map(a, d) * component(arr.source, d);
      for (std::size_t r = 0; r < lhs.rows(); ++r) {
        for (std::size_t c = 0; c < lhs.cols(); ++c) {
          if (lhs(r, c) != rhs(r, c)) return Witness{arr.name, d, r, c, lhs(r, c), rhs(r, c)};
        }
      }
    }
  }
  return std::nullopt;
}

bool RepMorphism::operator==(const RepMorphism& other) const {
  return source_ == other.source_ && target_ == other.target_ &&
         components_ == other.components_;
}

RepMorphism compose(const RepMorphism& psi, const RepMorphism& phi) {
  if (!(phi.target() == psi.source())) {
    throw std::invalid_argument("compose: target of phi is not the source of psi");
  }
  const TruncatedGradedRep& m = phi.source();
  std::vector<std::vector<Matrix>> comps(m.quiver().num_vertices());
  for (VertexIndex v = 0; v < comps.size(); ++v) {
    for (int d = m.lo(); d <= m.hi(); ++d) {
      comps[v].push_back(psi.component(v, d) * phi.component(v, d));
    }
  }
  return RepMorphism(m, psi.target(), std::move(comps));
}

TruncatedGradedRep shift(const TruncatedGradedRep& m, int k) {
  TruncatedGradedRep out = m;
  out.lo_ -= k;
  out.hi_ -= k;
  return out;
}

namespace {

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  }
  return m;
}

// Rep on [lo, hi] from a dimension callback and a map callback.
template <typename DimFn, typename MapFn>
TruncatedGradedRep build_rep(QuiverPtr q, int lo, int hi, DimFn dim, MapFn map) {
  const WeightedQuiver& Q = *q;
  std::vector<std::vector<std::size_t>> dims(Q.num_vertices());
  for (VertexIndex v = 0; v < Q.num_vertices(); ++v) {
    for (int d = lo; d <= hi; ++d) dims[v].push_back(dim(v, d));
  }
  std::vector<std::vector<Matrix>> maps(Q.num_arrows());
  for (ArrowIndex a = 0; a < Q.num_arrows(); ++a) {
    for (int d = lo; d + Q.arrow(a).degree <= hi; ++d) maps[a].push_back(map(a, d));
  }
  return TruncatedGradedRep(std::move(q), lo, hi, std::move(dims), std::move(maps));
}

template <typename CompFn>
std::vector<std::vector<Matrix>> build_components(const TruncatedGradedRep& frame, CompFn comp) {
  std::vector<std::vector<Matrix>> comps(frame.quiver().num_vertices());
  for (VertexIndex v = 0; v < comps.size(); ++v) {
    for (int d = frame.lo(); d <= frame.hi(); ++d) comps[v].push_back(comp(v, d));
  }
  return comps;
}

}  // namespace

TruncatedGradedRep direct_sum(const TruncatedGradedRep& a, const TruncatedGradedRep& b) {
  require_same_frame(a, b, "direct sum");
  return build_rep(
      a.quiver_ptr(), a.lo(), a.hi(), [&](VertexIndex v, int d) { return a.dim(v, d) + b.dim(v, d); },
      [&](ArrowIndex x, int d) { return block_diagonal(a.map(x, d), b.map(x, d)); });
}

SubRep kernel(const RepMorphism& phi) {
  const TruncatedGradedRep& m = phi.source();
  const std::size_t n = m.quiver().num_vertices();
  std::vector<std::vector<Matrix>> basis(n);
  for (VertexIndex v = 0; v < n; ++v) {
    for (int d = m.lo(); d <= m.hi(); ++d) basis[v].push_back(null_space(phi.component(v, d)));
  }
  auto at = [&](VertexIndex v, int d) -> const Matrix& {
    return basis[v][static_cast<std::size_t>(d - m.lo())];
  };
  TruncatedGradedRep k = build_rep(
      m.quiver_ptr(), m.lo(), m.hi(), [&](VertexIndex v, int d) { return at(v, d).cols(); },
      [&](ArrowIndex a, int d) {
        const Arrow& arr = m.quiver().arrow(a);
        return solve_in_span(at(arr.target, d + arr.degree), m.map(a, d) * at(arr.source, d));
      });
  RepMorphism inc(k, m, build_components(k, [&](VertexIndex v, int d) { return at(v, d); }));
  return {std::move(k), std::move(inc)};
}

QuotientRep cokernel(const RepMorphism& phi) {
  const TruncatedGradedRep& n = phi.target();
  const std::size_t nv = n.quiver().num_vertices();
  std::vector<std::vector<Quotient>> qs(nv);
  for (VertexIndex v = 0; v < nv; ++v) {
    for (int d = n.lo(); d <= n.hi(); ++d) {
      qs[v].push_back(quotient_by_span(phi.component(v, d), n.dim(v, d)));
    }
  }
  auto at = [&](VertexIndex v, int d) -> const Quotient& {
    return qs[v][static_cast<std::size_t>(d - n.lo())];
  };
  TruncatedGradedRep c = build_rep(
      n.quiver_ptr(), n.lo(), n.hi(),
      [&](VertexIndex v, int d) { return at(v, d).projection.rows(); },
      [&](ArrowIndex a, int d) {
        const Arrow& arr = n.quiver().arrow(a);
        return at(arr.target, d + arr.degree).projection * n.map(a, d) * at(arr.source, d).section;
      });
  RepMorphism proj(n, c, build_components(n, [&](VertexIndex v, int d) { return at(v, d).projection; }));
  return {std::move(c), std::move(proj)};
}

namespace {

// Column bases of the sub-representation generated by `gens`, [v][d - lo].
std::vector<std::vector<Matrix>> generated_spans(const TruncatedGradedRep& m,
                                                 const std::vector<Element>& gens) {
  const WeightedQuiver& q = m.quiver();
  std::vector<std::vector<Matrix>> span(q.num_vertices());
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    for (int d = m.lo(); d <= m.hi(); ++d) span[v].push_back(Matrix(m.dim(v, d), 0));
  }
  auto at = [&](VertexIndex v, int d) -> Matrix& {
    return span[v][static_cast<std::size_t>(d - m.lo())];
  };
  for (const Element& e : gens) {
    if (!m.in_window(e.degree) || e.vector.rows() != m.dim(e.vertex, e.degree) ||
        e.vector.cols() != 1) {
      throw std::invalid_argument("element does not live in the representation");
    }
    at(e.vertex, e.degree) = at(e.vertex, e.degree).hconcat(e.vector);
  }
  // Arrows raise degree, so degree d is final once all lower degrees pushed.
  for (int d = m.lo(); d <= m.hi(); ++d) {
    for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
      Matrix& s = at(v, d);
      Echelon e = row_reduce(s.transpose());
      Matrix basis(s.rows(), e.pivots.size());
      for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        for (std::size_t r = 0; r < s.rows(); ++r) basis(r, i) = e.reduced(i, r);
      }
      s = std::move(basis);
    }
    for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
      const Arrow& arr = q.arrow(a);
      if (!m.has_map(a, d) || at(arr.source, d).cols() == 0) continue;
      Matrix& t = at(arr.target, d + arr.degree);
      t = t.hconcat(m.map(a, d) * at(arr.source, d));
    }
  }
  return span;
}

}  // namespace

SubRep generated_subrep(const TruncatedGradedRep& m, const std::vector<Element>& gens) {
  auto span = generated_spans(m, gens);
  auto at = [&](VertexIndex v, int d) -> const Matrix& {
    return span[v][static_cast<std::size_t>(d - m.lo())];
  };
  TruncatedGradedRep w = build_rep(
      m.quiver_ptr(), m.lo(), m.hi(), [&](VertexIndex v, int d) { return at(v, d).cols(); },
      [&](ArrowIndex a, int d) {
        const Arrow& arr = m.quiver().arrow(a);
        return solve_in_span(at(arr.target, d + arr.degree), m.map(a, d) * at(arr.source, d));
      });
  RepMorphism inc(w, m, build_components(w, [&](VertexIndex v, int d) { return at(v, d); }));
  return {std::move(w), std::move(inc)};
}

QuotientRep quotient_by_elements(const TruncatedGradedRep& m, const std::vector<Element>& gens) {
  return cokernel(generated_subrep(m, gens).inclusion);
}

TruncatedProjective projective(QuiverPtr q, VertexIndex v, int shift, int lo, int hi) {
  if (shift < lo || shift > hi) throw std::invalid_argument("projective: generator outside the window");
  const WeightedQuiver& Q = *q;
  TruncatedProjective p{TruncatedGradedRep::zero(q, lo, hi), v, shift, {}};
  p.basis.assign(Q.num_vertices(), std::vector<std::vector<Path>>(window_size(lo, hi)));
  std::map<Path, std::size_t> position;
  Path current{v, {}};
  auto visit = [&](auto&& self, VertexIndex at, int degree) -> void {
    auto& cell = p.basis[at][static_cast<std::size_t>(degree - lo)];
    position.emplace(current, cell.size());
    cell.push_back(current);
    for (ArrowIndex a : Q.out_arrows(at)) {
      int next = degree + Q.arrow(a).degree;
      if (next > hi) continue;
      current.arrows.push_back(a);
      self(self, Q.arrow(a).target, next);
      current.arrows.pop_back();
    }
  };
  visit(visit, v, shift);
  auto cell = [&](VertexIndex w, int d) -> const std::vector<Path>& {
    return p.basis[w][static_cast<std::size_t>(d - lo)];
  };
  p.rep = build_rep(
      q, lo, hi, [&](VertexIndex w, int d) { return cell(w, d).size(); },
      [&](ArrowIndex a, int d) {
        const Arrow& arr = Q.arrow(a);
        const auto& from = cell(arr.source, d);
        Matrix m(cell(arr.target, d + arr.degree).size(), from.size());
        for (std::size_t j = 0; j < from.size(); ++j) {
          Path ext = from[j];
          ext.arrows.push_back(a);
          m(position.at(ext), j) = 1;
        }
        return m;
      });
  return p;
}

RepMorphism hom_from_element(const TruncatedProjective& p, const TruncatedGradedRep& m,
                             const Matrix& element) {
  require_same_frame(p.rep, m, "hom_from_element");
  if (element.rows() != m.dim(p.vertex, p.shift) || element.cols() != 1) {
    throw std::invalid_argument("hom_from_element: element has the wrong shape");
  }
  const WeightedQuiver& q = m.quiver();
  auto image = [&](const Path& path) {
    Matrix x = element;
    int d = p.shift;
    for (ArrowIndex a : path.arrows) {
      x = m.map(a, d) * x;
      d += q.arrow(a).degree;
    }
    return x;
  };
  auto comps = build_components(p.rep, [&](VertexIndex w, int d) {
    const auto& cell = p.basis[w][static_cast<std::size_t>(d - p.rep.lo())];
    Matrix c(m.dim(w, d), cell.size());
    for (std::size_t j = 0; j < cell.size(); ++j) {
      Matrix col = image(cell[j]);
      for (std::size_t r = 0; r < col.rows(); ++r) c(r, j) = col(r, 0);
    }
    return c;
  });
  return RepMorphism(p.rep, m, std::move(comps));
}

RepMorphism codiagonal(const RepMorphism& phi, const RepMorphism& psi) {
  if (!(phi.target() == psi.target())) throw std::invalid_argument("codiagonal: targets differ");
  TruncatedGradedRep sum = direct_sum(phi.source(), psi.source());
  auto comps = build_components(sum, [&](VertexIndex v, int d) {
    return phi.component(v, d).hconcat(psi.component(v, d));
  });
  return RepMorphism(std::move(sum), phi.target(), std::move(comps));
}

SplitContext make_split_context(const WeightedQuiver& q, const std::string& arrow) {
  auto [split, step] = split_arrow(q, arrow);
  return {std::make_shared<const WeightedQuiver>(q),
          std::make_shared<const WeightedQuiver>(std::move(split)), std::move(step)};
}

namespace {

// Index in Q of the arrow of Q' that is not b' or b''.
ArrowIndex original_arrow(const SplitStep& s, ArrowIndex a) {
  return a < s.arrow_index ? a : a - 1;
}

}  // namespace

TruncatedGradedRep functor_F(const SplitContext& ctx, const TruncatedGradedRep& m) {
  if (!same_quiver(m.quiver_ptr(), ctx.original)) {
    throw std::invalid_argument("F: representation is not over the unsplit quiver");
  }
  if (m.hi() <= m.lo()) throw std::invalid_argument("F: window too small to place M_s(b)(-1)");
  const SplitStep& s = ctx.step;
  const VertexIndex sb = ctx.original->arrow(s.arrow_index).source;
  const VertexIndex z = s.new_vertex_index;
  return build_rep(
      ctx.split, m.lo(), m.hi(),
      [&](VertexIndex v, int d) { return v == z ? m.dim(sb, d - 1) : m.dim(v, d); },
      [&](ArrowIndex a, int d) {
        if (a == s.b_prime_index()) {
          return Matrix::identity(m.dim(sb, d));
        }
        if (a == s.b_dblprime_index()) return m.map(s.arrow_index, d - 1);
        return m.map(original_arrow(s, a), d);
      });
}

RepMorphism functor_F(const SplitContext& ctx, const RepMorphism& phi) {
  TruncatedGradedRep fm = functor_F(ctx, phi.source());
  TruncatedGradedRep fn = functor_F(ctx, phi.target());
  const VertexIndex sb = ctx.original->arrow(ctx.step.arrow_index).source;
  const VertexIndex z = ctx.step.new_vertex_index;
  auto comps = build_components(fm, [&](VertexIndex v, int d) {
    if (v != z) return phi.component(v, d);
    if (d - 1 < fm.lo()) return Matrix(0, 0);
    return phi.component(sb, d - 1);
  });
  return RepMorphism(std::move(fm), std::move(fn), std::move(comps));
}

TruncatedGradedRep functor_G(const SplitContext& ctx, const TruncatedGradedRep& n) {
  if (!same_quiver(n.quiver_ptr(), ctx.split)) {
    throw std::invalid_argument("G: representation is not over the split quiver");
  }
  const SplitStep& s = ctx.step;
  return build_rep(
      ctx.original, n.lo(), n.hi(), [&](VertexIndex v, int d) { return n.dim(v, d); },
      [&](ArrowIndex a, int d) {
        if (a == s.arrow_index) {
          return n.map(s.b_dblprime_index(), d + 1) * n.map(s.b_prime_index(), d);
        }
        return n.map(transfer_arrow(s, a).front(), d);
      });
}

RepMorphism functor_G(const SplitContext& ctx, const RepMorphism& psi) {
  TruncatedGradedRep gm = functor_G(ctx, psi.source());
  TruncatedGradedRep gn = functor_G(ctx, psi.target());
  auto comps = build_components(gm, [&](VertexIndex v, int d) { return psi.component(v, d); });
  return RepMorphism(std::move(gm), std::move(gn), std::move(comps));
}

RepMorphism counit_eps(const SplitContext& ctx, const TruncatedGradedRep& n) {
  TruncatedGradedRep fgn = functor_F(ctx, functor_G(ctx, n));
  const VertexIndex z = ctx.step.new_vertex_index;
  auto comps = build_components(fgn, [&](VertexIndex v, int d) {
    if (v != z) return Matrix::identity(n.dim(v, d));
    return n.map(ctx.step.b_prime_index(), d - 1);
  });
  return RepMorphism(std::move(fgn), n, std::move(comps));
}

bool is_torsion_window(const TruncatedGradedRep& m, int d0) {
  const WeightedQuiver& q = m.quiver();
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    for (int e = m.lo(); e <= m.hi(); ++e) {
      if (m.dim(v, e) == 0) continue;
      // reach[w][e' - e]: span of images of (M_v)_e along paths to (w, e').
      const std::size_t len = static_cast<std::size_t>(m.hi() - e + 1);
      std::vector<std::vector<Matrix>> reach(q.num_vertices(), std::vector<Matrix>(len));
      for (VertexIndex w = 0; w < q.num_vertices(); ++w) {
        for (std::size_t k = 0; k < len; ++k) reach[w][k] = Matrix(m.dim(w, e + static_cast<int>(k)), 0);
      }
      reach[v][0] = Matrix::identity(m.dim(v, e));
      for (std::size_t k = 0; k < len; ++k) {
        for (VertexIndex w = 0; w < q.num_vertices(); ++w) {
          const Matrix& here = reach[w][k];
          if (here.cols() == 0) continue;
          if (static_cast<int>(k) >= d0 && !here.is_zero()) return false;
          for (ArrowIndex a : q.out_arrows(w)) {
            const std::size_t next = k + static_cast<std::size_t>(q.arrow(a).degree);
            if (next >= len) continue;
            Matrix img = m.map(a, e + static_cast<int>(k)) * here;
            if (img.is_zero()) continue;
            Matrix& t = reach[q.arrow(a).target][next];
            t = t.hconcat(img);
          }
        }
      }
    }
  }
  return true;
}

SuiteReport torsion_transfer_check(const SplitContext& ctx, const TruncatedGradedRep& m, int d0) {
  SuiteReport rep{"torsion-transfer"};
  TruncatedGradedRep fm = functor_F(ctx, m);
  const int slack = ctx.step.arrow_degree;
  const bool m_tors = is_torsion_window(m, d0);
  const bool fm_tors_slack = is_torsion_window(fm, d0 + slack);
  const bool fm_tors = is_torsion_window(fm, d0);
  Check& fwd = rep.add("M torsion beyond d0 => F(M) torsion beyond d0 + deg(b)");
  ++fwd.cases;
  if (m_tors && !fm_tors_slack) fwd.fail("d0=" + std::to_string(d0));
  Check& back = rep.add("F(M) torsion beyond d0 => M torsion beyond d0");
  ++back.cases;
  if (fm_tors && !m_tors) back.fail("d0=" + std::to_string(d0));
  rep.notes.push_back("window surrogate: cannot certify torsion of the untruncated module");
  return rep;
}

SuiteReport check_adjunction(const WeightedQuiver& q, const std::string& arrow,
                             std::size_t samples, int window, std::uint64_t seed) {
  if (window < 1) throw std::invalid_argument("adjunction: window must be >= 1");
  const SplitContext ctx = make_split_context(q, arrow);
  const VertexIndex z = ctx.step.new_vertex_index;
  SuiteReport rep{"adjunction"};
  Check& gf = rep.add("G(F(M)) = M");
  Check& additive = rep.add("F(M + M') = F(M) + F(M')");
  Check& shift_ok = rep.add("F(M(1)) = F(M)(1)");
  Check& f_mor = rep.add("F(phi) is a morphism");
  Check& eps_fm = rep.add("eps_F(M) = id");
  Check& eps_mor = rep.add("eps_N is a morphism");
  Check& g_eps = rep.add("G(eps_N) = id");
  Check& natural = rep.add("eps_N' FG(psi) = psi eps_N");
  Check& support = rep.add("Ker/Coker eps_N vanish away from z");
  Check& torsion = rep.add("Ker/Coker eps_N torsion in window");
  Check& transfer = rep.add("torsion transfers through F");

  for (std::size_t s = 0; s < samples; ++s) {
    auto rng = trial_rng(seed, s);
    const std::string tag = "sample " + std::to_string(s) + ": ";
    TruncatedGradedRep m = sample_rep(ctx.original, 0, window, rng);
    TruncatedGradedRep m2 = sample_rep(ctx.original, 0, window, rng);
    TruncatedGradedRep fm = functor_F(ctx, m);

    ++gf.cases;
    if (!(functor_G(ctx, fm) == m)) gf.fail(tag + "G(F(M)) differs from M");
    ++additive.cases;
    if (!(functor_F(ctx, direct_sum(m, m2)) == direct_sum(fm, functor_F(ctx, m2)))) {
      additive.fail(tag + "F does not commute with direct sums");
    }
    ++shift_ok.cases;
    if (window >= 2 && !(functor_F(ctx, shift(m, 1)) == shift(fm, 1))) {
      shift_ok.fail(tag + "F(M(1)) differs from F(M)(1)");
    }
    ++f_mor.cases;
    RepMorphism phi = sample_morphism(m, rng);
    if (auto w = functor_F(ctx, phi).validate()) f_mor.fail(tag + w->describe());

    ++eps_fm.cases;
    if (!(counit_eps(ctx, fm) == RepMorphism::identity(fm))) eps_fm.fail(tag + "eps_F(M) is not the identity");

    TruncatedGradedRep n = sample_rep(ctx.split, 0, window, rng);
    RepMorphism eps = counit_eps(ctx, n);
    ++eps_mor.cases;
    if (auto w = eps.validate()) eps_mor.fail(tag + w->describe());
    ++g_eps.cases;
    if (!(functor_G(ctx, eps) == RepMorphism::identity(functor_G(ctx, n)))) {
      g_eps.fail(tag + "G(eps_N) is not the identity");
    }

    RepMorphism psi = sample_morphism(n, rng);
    ++natural.cases;
    RepMorphism lhs = compose(counit_eps(ctx, psi.target()), functor_F(ctx, functor_G(ctx, psi)));
    RepMorphism rhs = compose(psi, counit_eps(ctx, psi.source()));
    if (!(lhs == rhs)) natural.fail(tag + "naturality square differs");

    SubRep ker = kernel(eps);
    QuotientRep coker = cokernel(eps);
    ++support.cases;
    for (VertexIndex v = 0; v < ctx.split->num_vertices(); ++v) {
      if (v == z) continue;
      for (int d = 0; d <= window; ++d) {
        if (ker.rep.dim(v, d) != 0 || coker.rep.dim(v, d) != 0) {
          support.fail(tag + "vertex " + ctx.split->vertex(v) + " degree " + std::to_string(d));
        }
      }
    }
    ++torsion.cases;
    if (!is_torsion_window(ker.rep, 1) || !is_torsion_window(coker.rep, 1)) {
      torsion.fail(tag + "nonzero composite on Ker or Coker");
    }

    std::uniform_int_distribution<int> pick_d0(1, window);
    SuiteReport t = torsion_transfer_check(ctx, m, pick_d0(rng));
    ++transfer.cases;
    if (!t.passed()) {
      for (const Check& c : t.checks) {
        if (!c.passed) transfer.fail(tag + c.name + " " + c.witness);
      }
    }
  }
  rep.notes.push_back("split arrow " + ctx.step.arrow + " (degree " +
                      std::to_string(ctx.step.arrow_degree) + "), window [0, " +
                      std::to_string(window) + "]");
  return rep;
}

nlohmann::json to_json(const TruncatedGradedRep& m) {
  using nlohmann::json;
  const WeightedQuiver& q = m.quiver();
  json dims = json::object();
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    json row = json::array();
    for (int d = m.lo(); d <= m.hi(); ++d) row.push_back(m.dim(v, d));
    dims[q.vertex(v)] = std::move(row);
  }
  json maps = json::object();
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    json list = json::array();
    for (int d = m.lo(); m.has_map(a, d); ++d) {
      Matrix mat = m.map(a, d);
      json rows = json::array();
      for (std::size_t r = 0; r < mat.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(rational_string(mat(r, c)));
        rows.push_back(std::move(row));
      }
      list.push_back(std::move(rows));
    }
    maps[q.arrow(a).name] = std::move(list);
  }
  return {{"window", {m.lo(), m.hi()}}, {"dims", std::move(dims)}, {"maps", std::move(maps)}};
}

TruncatedGradedRep rep_from_json(QuiverPtr qp, const nlohmann::json& doc) {
  const WeightedQuiver& q = *qp;
  try {
    const int lo = doc.at("window").at(0).get<int>();
    const int hi = doc.at("window").at(1).get<int>();
    std::vector<std::vector<std::size_t>> dims(q.num_vertices());
    for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
      dims[v] = doc.at("dims").at(q.vertex(v)).get<std::vector<std::size_t>>();
    }
    auto dim = [&](VertexIndex v, int d) -> std::size_t {
      return d < lo ? 0 : dims[v].at(static_cast<std::size_t>(d - lo));
    };
    std::vector<std::vector<Matrix>> maps(q.num_arrows());
    for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
      const Arrow& arr = q.arrow(a);
      const auto& list = doc.at("maps").at(arr.name);
      for (std::size_t i = 0; i < list.size(); ++i) {
        const int d = lo + static_cast<int>(i);
        Matrix m(dim(arr.target, d + arr.degree), dim(arr.source, d));
        if (list[i].size() != m.rows()) throw ParseError("rep: row count of " + arr.name);
        for (std::size_t r = 0; r < m.rows(); ++r) {
          if (list[i][r].size() != m.cols()) throw ParseError("rep: column count of " + arr.name);
          for (std::size_t c = 0; c < m.cols(); ++c) {
            m(r, c) = parse_rational(list[i][r][c].get<std::string>());
          }
        }
        maps[a].push_back(std::move(m));
      }
    }
    return TruncatedGradedRep(std::move(qp), lo, hi, std::move(dims), std::move(maps));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("rep: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("rep: ") + e.what());
  }
}

}  // namespace monoquiv
