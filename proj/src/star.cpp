#include "lcs/star.hpp"

#include <algorithm>

#include "lcs/errors.hpp"

namespace lcs {

NCPoly star_mul(const NCPoly& a, const NCPoly& b) {
  NCPoly r = mul(a, b) + mul(b, a);
  r *= Rat(1, 2);
  return r;
}

SparseVec star_act(Filtration& f, const SparseVec& a, int da,
                   const SparseVec& n, int k, int dn) {
  const WordTables& wt = f.words();
  SparseVec v = wt.mul_rows(a, da, n, dn);
  v.axpy(Rat(1), wt.mul_rows(n, dn, a, da));
  v.scale(Rat(1, 2));
  return f.nk_class(std::move(v), k, da + dn);
}

namespace {

void require_free(const Filtration& f, const char* what) {
  if (!f.presentation().is_free())
    throw UsageError(std::string(what) + " is implemented for free presentations only");
}

}  // namespace

EchelonBasis star_action_span(Filtration& f, int k, int d) {
  require_free(f, "star_action_span");
  const WordTables& wt = f.words();
  std::span<const GeneratorSpec> gens(f.presentation().generators);
  const EchelonBasis& target = f.nk_complement(k, d);
  std::vector<SparseVec> rows;

  auto act_from = [&](const SparseVec& g, int dg) {
    int src = d - dg;
    if (src < 0) return;
    const EchelonBasis& q = f.nk_complement(k, src);
    for (const auto& v : q.rows()) {
      SparseVec s = star_act(f, g, dg, v, k, src);
      if (s.empty()) continue;
      // The action lands in M_k; if the residue escapes the complement span,
      // M_k failed to be a two-sided ideal and the engine is broken.
      if (!member(s, target))
        throw EngineError("star action left the N_k complement span");
      rows.push_back(std::move(s));
    }
  };

  for (int i = 0; i < f.presentation().ngens(); ++i) {
    Word xi = Word::generator(gens, i);
    SparseVec g;
    g.push(wt.at(xi.degree()).of(xi), Rat(1));
    act_from(g, xi.degree());
  }
  for (int i = 0; i < f.presentation().ngens(); ++i) {
    for (int j = i + 1; j < f.presentation().ngens(); ++j) {
      Word xi = Word::generator(gens, i);
      Word xj = Word::generator(gens, j);
      int dg = xi.degree() + xj.degree();
      SparseVec g = wt.from_poly(
          commutator(NCPoly(xi), NCPoly(xj)), dg);
      act_from(g, dg);
    }
  }
  return f.echelonize_graded(std::move(rows), d);
}

int StandardFiber::dim(int d) const {
  auto it = perdegree.find(d);
  return it == perdegree.end() ? 0 : static_cast<int>(it->second.size());
}

StandardFiber standard_fiber(Filtration& f, int k) {
  require_free(f, "standard_fiber");
  if (k < 2) throw UsageError("standard_fiber requires k >= 2");
  if (k > f.kmax())
    throw UsageError("standard_fiber: k exceeds the computed kmax");
  f.compute();
  const WordTables& wt = f.words();
  int n = f.presentation().ngens();
  StandardFiber fb;
  fb.k = k;
  fb.maxdeg = f.maxdeg();
  for (int d = 0; d <= f.maxdeg(); ++d) {
    const EchelonBasis& q = f.nk_complement(k, d);
    if (q.dim() == 0) continue;
    EchelonBasis span = star_action_span(f, k, d);
    std::vector<SparseVec> residues;
    for (const auto& r : q.rows()) {
      SparseVec res = reduce(span, r);
      if (!res.empty()) residues.push_back(std::move(res));
    }
    EchelonBasis st = f.echelonize_graded(std::move(residues), d);
    if (st.dim() != q.dim() - span.dim())
      throw EngineError("standard fiber dimension mismatch");
    if (st.dim() == 0) continue;
    std::vector<FiberVector> vecs;
    vecs.reserve(static_cast<std::size_t>(st.dim()));
    for (const auto& r : st.rows()) {
      FiberVector fv;
      fv.weight = wt.at(d).words[r.leading_col()].multidegree(n);
      fv.rep = r;
      vecs.push_back(std::move(fv));
    }
    fb.perdegree.emplace(d, std::move(vecs));
    fb.total_dim += st.dim();
  }
  fb.stabilized = f.maxdeg() >= 2 && fb.dim(f.maxdeg()) == 0 &&
                  fb.dim(f.maxdeg() - 1) == 0;
  return fb;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols != b.rows) throw EngineError("mat_mul: shape mismatch");
  RatMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int l = 0; l < a.cols; ++l) {
      if (a.at(i, l) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, l) * b.at(l, j);
    }
  return c;
}

RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw EngineError("mat_sub: shape mismatch");
  RatMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] - b.a[i];
  return c;
}

RatMatrix wn_action_matrix(Filtration& f, const Derivation& der, int k, int d) {
  require_free(f, "wn_action_matrix");
  std::span<const GeneratorSpec> gens(f.presentation().generators);
  auto w = der.graded_weight(gens);
  if (!w) throw UsageError("wn_action_matrix requires a graded derivation");
  const WordTables& wt = f.words();
  const EchelonBasis& src = f.nk_complement(k, d);
  if (d + *w < 0 || d + *w > f.maxdeg()) {
    if (d + *w < 0) return RatMatrix(0, src.dim());
    throw UsageError("wn_action_matrix: image degree exceeds the window");
  }
  const EchelonBasis& dst = f.nk_complement(k, d + *w);
  RatMatrix m(dst.dim(), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    NCPoly p = wt.to_poly(src.rows()[static_cast<std::size_t>(j)], d);
    NCPoly img = der.apply(p, gens);
    if (img.is_zero()) continue;
    SparseVec r = f.nk_class(wt.from_poly(img, d + *w), k, d + *w);
    // Express in the destination complement basis; the remainder must vanish
    // because derivations preserve M_k and M_{k+1}.
    for (int i = 0; i < dst.dim(); ++i) {
      const Rat* c = r.find(dst.pivots()[static_cast<std::size_t>(i)]);
      if (!c) continue;
      m.at(i, j) = *c;
      r.axpy(-*c, dst.rows()[static_cast<std::size_t>(i)]);
    }
    if (!r.empty())
      throw EngineError("derivation image escaped the N_k complement span");
  }
  return m;
}

NonSplitWitness n3_nonsplit_witness(Filtration& f) {
  require_free(f, "n3_nonsplit_witness");
  if (f.presentation().ngens() != 2)
    throw UsageError("n3_nonsplit_witness needs the free algebra on 2 generators");
  if (f.kmax() < 3 || f.maxdeg() < 4)
    throw UsageError("n3_nonsplit_witness needs kmax >= 3 and maxdeg >= 4");
  f.compute();
  const WordTables& wt = f.words();
  std::span<const GeneratorSpec> gens(f.presentation().generators);
  NCPoly x1(Word::generator(gens, 0)), x2(Word::generator(gens, 1));

  // D = x2^2 d/dx2, v = [x1,[x1,x2]]; D(v) should equal 2 [x1,x2]^2 in St.
  Derivation der({NCPoly::zero(), mul(x2, x2)});
  NCPoly v = commutator(x1, commutator(x1, x2));
  NCPoly image = der.apply(v, gens);
  NCPoly target = mul(commutator(x1, x2), commutator(x1, x2)) * Rat(2);

  EchelonBasis span = star_action_span(f, 3, 4);
  SparseVec ri = reduce(span, f.nk_class(wt.from_poly(image, 4), 3, 4));
  SparseVec rt = reduce(span, f.nk_class(wt.from_poly(target, 4), 3, 4));
  NonSplitWitness wit;
  wit.action_nonzero = !ri.empty();
  wit.equals_twice_bracket_square = (ri == rt);
  return wit;
}

int max_active_weight_shift(Filtration& f, int k, const StandardFiber& fb) {
  require_free(f, "max_active_weight_shift");
  std::span<const GeneratorSpec> gens(f.presentation().generators);
  const WordTables& wt = f.words();
  int n = f.presentation().ngens();
  int dmin = -1, dmax = -1;
  for (const auto& [d, vecs] : fb.perdegree) {
    if (vecs.empty()) continue;
    if (dmin < 0) dmin = d;
    dmax = d;
  }
  if (dmin < 0) return 0;
  int best = 0;
  for (int w = 1; w <= dmax - dmin; ++w) {
    bool active = false;
    // Monomial derivations x^alpha d_i of weight w (all generator degrees
    // are 1 here, so |alpha| = w + 1), symmetrized lifts.
    for (const Word& aw : enumerate_words(gens, w + 1)) {
      Multidegree alpha = aw.multidegree(n);
      // Deduplicate: only the sorted word per multidegree.
      std::string sorted = aw.letters();
      std::sort(sorted.begin(), sorted.end());
      if (sorted != aw.letters()) continue;
      NCPoly lift = symmetrized_monomial(gens, alpha);
      for (int i = 0; i < n && !active; ++i) {
        std::vector<NCPoly> images(static_cast<std::size_t>(n));
        images[static_cast<std::size_t>(i)] = lift;
        Derivation der(std::move(images));
        for (const auto& [d, vecs] : fb.perdegree) {
          if (d + w > f.maxdeg() || d + w > dmax) continue;
          EchelonBasis span = star_action_span(f, k, d + w);
          for (const auto& fv : vecs) {
            NCPoly p = wt.to_poly(fv.rep, d);
            NCPoly img = der.apply(p, gens);
            if (img.is_zero()) continue;
            SparseVec r =
                reduce(span, f.nk_class(wt.from_poly(img, d + w), k, d + w));
            if (!r.empty()) {
              active = true;
              break;
            }
          }
          if (active) break;
        }
      }
      if (active) break;
    }
    if (active) best = w;
  }
  return best;
}

}  // namespace lcs
