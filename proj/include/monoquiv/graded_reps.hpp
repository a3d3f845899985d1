#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "monoquiv/arrow_split.hpp"
#include "monoquiv/matrix.hpp"
#include "monoquiv/quiver.hpp"
#include "monoquiv/report.hpp"

namespace monoquiv {

using QuiverPtr = std::shared_ptr<const WeightedQuiver>;

// A graded representation of a weighted quiver seen through the degree
// window [lo, hi]. Components below lo are zero; nothing is known above hi.
// For each arrow a and degree d with lo <= d and d + deg(a) <= hi the map
// (M_a)_d : (M_{s(a)})_d -> (M_{t(a)})_{d+deg(a)} is stored.
class TruncatedGradedRep {
 public:
  TruncatedGradedRep(QuiverPtr q, int lo, int hi,
                     std::vector<std::vector<std::size_t>> dims,
                     std::vector<std::vector<Matrix>> maps);

  static TruncatedGradedRep zero(QuiverPtr q, int lo, int hi);

  const WeightedQuiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool in_window(int d) const { return lo_ <= d && d <= hi_; }

  // 0 below the window; throws std::out_of_range above it.
  std::size_t dim(VertexIndex v, int d) const;
  // Whether (M_a)_d lands inside the window.
  bool has_map(ArrowIndex a, int d) const;
  // Stored map, or the zero map out of an empty space when d < lo.
  Matrix map(ArrowIndex a, int d) const;

  std::size_t total_dim() const;
  std::size_t max_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  bool operator==(const TruncatedGradedRep& other) const;

 private:
  friend TruncatedGradedRep shift(const TruncatedGradedRep&, int);
  QuiverPtr quiver_;
  int lo_;
  int hi_;
  std::vector<std::vector<std::size_t>> dims_;  // [v][d - lo]
  std::vector<std::vector<Matrix>> maps_;       // [a][d - lo]
};

// Degree-preserving family of vertex maps; phi(v, d) is
// dim N_{v,d} x dim M_{v,d}. Construction checks shapes only; validate()
// checks the commuting squares.
class RepMorphism {
 public:
  RepMorphism(TruncatedGradedRep source, TruncatedGradedRep target,
              std::vector<std::vector<Matrix>> components);

  static RepMorphism identity(const TruncatedGradedRep& m);
  static RepMorphism zero(const TruncatedGradedRep& source, const TruncatedGradedRep& target);

  const TruncatedGradedRep& source() const { return source_; }
  const TruncatedGradedRep& target() const { return target_; }
  const Matrix& component(VertexIndex v, int d) const;
  Matrix& component(VertexIndex v, int d);

  struct Witness {
    std::string arrow;
    int degree;
    std::size_t row;
    std::size_t col;
    mpq_class lhs;  // (phi_t ∘ M_a) entry
    mpq_class rhs;  // (N_a ∘ phi_s) entry
    std::string describe() const;
  };
  // First square phi_{t(a)} M_a = N_a phi_{s(a)} that fails, if any.
  std::optional<Witness> validate() const;

  bool operator==(const RepMorphism& other) const;

 private:
  TruncatedGradedRep source_;
  TruncatedGradedRep target_;
  std::vector<std::vector<Matrix>> components_;  // [v][d - lo]
};

// psi ∘ phi.
RepMorphism compose(const RepMorphism& psi, const RepMorphism& phi);

// M(k)_d = M_{d+k}; the window moves to [lo - k, hi - k].
TruncatedGradedRep shift(const TruncatedGradedRep& m, int k);

TruncatedGradedRep direct_sum(const TruncatedGradedRep& a, const TruncatedGradedRep& b);

// Kernel / cokernel of a morphism as representations, with their
// inclusion / projection.
struct SubRep {
  TruncatedGradedRep rep;
  RepMorphism inclusion;
};
struct QuotientRep {
  TruncatedGradedRep rep;
  RepMorphism projection;
};
SubRep kernel(const RepMorphism& phi);
QuotientRep cokernel(const RepMorphism& phi);

// A homogeneous element of M at vertex v in degree d.
struct Element {
  VertexIndex vertex;
  int degree;
  Matrix vector;  // dim x 1
};

// M / (sub-representation generated by the elements).
QuotientRep quotient_by_elements(const TruncatedGradedRep& m, const std::vector<Element>& gens);

// (e_v kQ)(-shift) on [lo, hi]: basis of the component at (w, e) is the
// paths v -> w of degree e - shift, in enumeration order; arrows act by
// right multiplication.
struct TruncatedProjective {
  TruncatedGradedRep rep;
  VertexIndex vertex;
  int shift;
  std::vector<std::vector<std::vector<Path>>> basis;  // [w][e - lo]
};
TruncatedProjective projective(QuiverPtr q, VertexIndex v, int shift, int lo, int hi);

// The morphism (e_v kQ)(-shift) -> M sending e_v to m in (M_v)_shift.
RepMorphism hom_from_element(const TruncatedProjective& p, const TruncatedGradedRep& m,
                             const Matrix& element);

// [phi psi] : A ⊕ B -> C for phi : A -> C and psi : B -> C.
RepMorphism codiagonal(const RepMorphism& phi, const RepMorphism& psi);

// The quivers on both sides of one arrow split.
struct SplitContext {
  QuiverPtr original;
  QuiverPtr split;
  SplitStep step;
};
SplitContext make_split_context(const WeightedQuiver& q, const std::string& arrow);

// F : reps of Q -> reps of Q'. F(M)_z = M_{s(b)}(-1), F(M)_{b'} = id as a
// degree one map, F(M)_{b''} = M_b. Throws std::invalid_argument when the
// window has no room for the shifted copy (hi == lo).
TruncatedGradedRep functor_F(const SplitContext& ctx, const TruncatedGradedRep& m);
RepMorphism functor_F(const SplitContext& ctx, const RepMorphism& phi);

// G : reps of Q' -> reps of Q. Drops z and composes G(N)_b = N_{b''} N_{b'}.
TruncatedGradedRep functor_G(const SplitContext& ctx, const TruncatedGradedRep& n);
RepMorphism functor_G(const SplitContext& ctx, const RepMorphism& psi);

// eps_N : FG(N) -> N, identity away from z and N_{b'} at z.
RepMorphism counit_eps(const SplitContext& ctx, const TruncatedGradedRep& n);

// True iff every composite of arrow maps along a path of degree >= d0,
// starting anywhere in the window and landing inside it, is zero. This is
// one-sided: a window can never certify that the full module is not torsion.
bool is_torsion_window(const TruncatedGradedRep& m, int d0);

// Torsion transfer through F on the window: M torsion beyond d0 forces F(M)
// torsion beyond d0 + deg(b), and F(M) torsion beyond d0 forces M torsion
// beyond d0.
SuiteReport torsion_transfer_check(const SplitContext& ctx, const TruncatedGradedRep& m,
                                   int d0);

// Triangle identities, counit naturality, G∘F = id, shift compatibility and
// kernel/cokernel support of eps on `samples` sampled representations.
SuiteReport check_adjunction(const WeightedQuiver& q, const std::string& arrow,
                             std::size_t samples, int window, std::uint64_t seed);

nlohmann::json to_json(const TruncatedGradedRep& m);
TruncatedGradedRep rep_from_json(QuiverPtr q, const nlohmann::json& doc);

}  // namespace monoquiv
