#pragma once

#include "lcs/lcs.hpp"

namespace lcs {

// (ab + ba)/2 on representatives; commutative by construction, associative
// modulo M_3 with defect ((a*b)*c - a*(b*c)) = [b,[a,c]]/4 exactly.
NCPoly star_mul(const NCPoly& a, const NCPoly& b);

// Representative of the class of (a n + n a)/2 in N_k(da+dn): computed on
// representatives, reduced mod I and M_{k+1}.
SparseVec star_act(Filtration& f, const SparseVec& a, int da,
                   const SparseVec& n, int k, int dn);

// Echelon span of (A+ * N_k)(d) inside the N_k complement.  A+ acts through
// its generators x_i and the bracket classes [x_i, x_j]: modulo M_{k+1} the
// action is associative, so word actions telescope through generator actions,
// and every class of A/M_3 is an ordinary polynomial in the x_i and the
// two-form classes [x_i, x_j].  For odd k the bracket classes act by zero
// (M_2 L_k and M_k M_2 both land in M_{k+1}), so there they add nothing.
EchelonBasis star_action_span(Filtration& f, int k, int d);

struct FiberVector {
  Multidegree weight;
  SparseVec rep;  // reduced mod M_{k+1} and mod the A+ action span
};

struct StandardFiber {
  int k = 0;
  int maxdeg = 0;
  std::map<int, std::vector<FiberVector>> perdegree;
  int total_dim = 0;
  // Heuristic: dimensions vanished in the last two computed degrees.  The
  // fiber is a theorem-finite object but the vanishing degree is not known a
  // priori, so an unstabilized result is returned flagged, not rejected.
  bool stabilized = false;

  int dim(int d) const;
};

// St(N_k) = N_k / (A+ * N_k) per degree, with multidegree weights read off
// the homogeneous basis vectors.  Free presentations only.
StandardFiber standard_fiber(Filtration& f, int k);

struct RatMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
  bool is_zero() const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b);

// Matrix of the induced map N_k(d) -> N_k(d+w) for a graded derivation of
// weight w, in the canonical complement bases.  Free presentations only; the
// induced map is independent of the noncommutative lift of commutative
// generator images (checked in tests by comparing lifts).
RatMatrix wn_action_matrix(Filtration& f, const Derivation& der, int k, int d);

// The x2^2*d/dx2 computation on St(N_3(A_2)): the action sends the class of
// [x1,[x1,x2]] to 2*[x1,x2]^2, which is nonzero in the fiber, so the weight
// filtration of St(N_3(A_2)) does not split.
struct NonSplitWitness {
  bool action_nonzero = false;
  bool equals_twice_bracket_square = false;
  bool holds() const { return action_nonzero && equals_twice_bracket_square; }
};
NonSplitWitness n3_nonsplit_witness(Filtration& f);

// Largest weight shift w >= 1 for which some monomial derivation x^alpha d_i
// of weight w acts nonzero on the fiber; an empirical proxy for the order of
// the jet group through which the action factors.  No tightness is claimed.
int max_active_weight_shift(Filtration& f, int k, const StandardFiber& fb);

}  // namespace lcs
