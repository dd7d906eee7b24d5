#include "frobdepth/fmodule.hpp"

#include <algorithm>

namespace frobdepth {

Subquotient::Subquotient(Submodule num, Submodule den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  if (numerator.rank() != denominator.rank())
    throw Error(ErrorKind::DimensionMismatch, "subquotient parts live in different modules");
}

bool Subquotient::is_zero() const { return denominator.contains(numerator); }

bool Subquotient::well_formed() const { return numerator.contains(denominator); }

VectorPoly SubquotientMap::apply(const VectorPoly& v) const {
  return mat_vec(matrix, v, source.ring());
}

bool SubquotientMap::well_defined() const {
  for (const auto& g : source.numerator.gens())
    if (!target.numerator.contains(apply(g))) return false;
  for (const auto& g : source.denominator.gens())
    if (!target.denominator.contains(apply(g))) return false;
  return true;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Nilpotent: return "Nilpotent";
    case Verdict::NonNilpotent: return "NonNilpotent";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Frobenius pullback

namespace {

int frob_factor(const RingCtx& ctx, unsigned e) {
  long long q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= ctx.p();
    if (q > (1 << 20)) throw Error(ErrorKind::ResourceExhausted, "Frobenius exponent too large");
  }
  return static_cast<int>(q);
}

VectorPoly power_vec(const VectorPoly& v, unsigned e, const RingCtx& ctx) {
  VectorPoly out;
  out.reserve(v.size());
  for (const auto& f : v) out.push_back(poly_power_p(f, e, ctx));
  return out;
}

std::vector<int> scale_shifts(std::vector<int> s, int q) {
  for (auto& x : s) x *= q;
  return s;
}

std::vector<VectorPoly> nonzero(std::vector<VectorPoly> v) {
  std::erase_if(v, [](const VectorPoly& x) { return vec_is_zero(x); });
  return v;
}

}  // namespace

Ideal frobenius_power(const Ideal& ideal, unsigned e) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(poly_power_p(g, e, ideal.ring()));
  return Ideal(ideal.ring(), std::move(gens));
}

Matrix frobenius_pullback(const Matrix& m, unsigned e, const RingCtx& ctx) {
  Matrix out = m;
  for (auto& f : out.data) f = poly_power_p(f, e, ctx);
  return out;
}

Submodule frobenius_pullback(const Submodule& m, unsigned e) {
  const RingCtx& ctx = m.ring();
  std::vector<VectorPoly> gens;
  for (const auto& g : m.gens()) gens.push_back(power_vec(g, e, ctx));
  return Submodule(ctx, m.rank(), std::move(gens), scale_shifts(m.shifts(), frob_factor(ctx, e)));
}

Subquotient frobenius_pullback(const Subquotient& m, unsigned e) {
  return Subquotient(frobenius_pullback(m.numerator, e), frobenius_pullback(m.denominator, e));
}

SubquotientMap frobenius_pullback(const SubquotientMap& m, unsigned e) {
  return SubquotientMap{frobenius_pullback(m.source, e), frobenius_pullback(m.target, e),
                        frobenius_pullback(m.matrix, e, m.source.ring())};
}

FreeComplex frobenius_pullback(const FreeComplex& c, unsigned e, const RingCtx& ctx) {
  FreeComplex out = c;
  int q = frob_factor(ctx, e);
  for (auto& m : out.modules) m.shifts = scale_shifts(m.shifts, q);
  for (auto& d : out.maps) d = frobenius_pullback(d, e, ctx);
  return out;
}

// ---------------------------------------------------------------------------
// FrobeniusAnalysis

struct FrobeniusAnalysis::Cache {
  std::once_flag phi_once;
  std::vector<Matrix> phi;
};

FrobeniusAnalysis::FrobeniusAnalysis(Ideal ideal)
    : ideal_(std::move(ideal)),
      res_(free_resolution(ideal_)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& m : res_.modules)
    for (int s : m.shifts) top_shift_ = std::max(top_shift_, s);
}

std::vector<int> FrobeniusAnalysis::dual_shifts(std::size_t k) const {
  std::vector<int> out;
  for (int s : res_.modules.at(k).shifts) out.push_back(top_shift_ - s);
  return out;
}

void FrobeniusAnalysis::build_comparisons() const {
  std::call_once(cache_->phi_once, [this] {
    const RingCtx& ctx = ring();
    Matrix phi0 = Matrix::zero(1, 1);
    phi0.at(0, 0) = Polynomial::constant(1, ctx);
    cache_->phi.push_back(std::move(phi0));
    for (std::size_t k = 1; k <= res_.length(); ++k) {
      const Matrix& dp = res_.d(k);
      Matrix dq = frobenius_pullback(dp, 1, ctx);
      std::vector<VectorPoly> cols;
      for (std::size_t c = 0; c < dp.cols; ++c) cols.push_back(dp.column(c));
      Submodule image(ctx, dp.rows, std::move(cols), res_.modules[k - 1].shifts);
      const Matrix& prev = cache_->phi[k - 1];
      Matrix phi = Matrix::zero(dp.cols, dq.cols);
      for (std::size_t c = 0; c < dq.cols; ++c) {
        VectorPoly v = mat_vec(prev, dq.column(c), ctx);
        auto coeffs = image.lift(v);
        if (!coeffs)
          throw Error(ErrorKind::LiftFailed, "comparison map does not lift at step " + std::to_string(k));
        phi.set_column(c, *coeffs);
      }
      if (verification_enabled()) {
        Matrix lhs = mat_mul(dp, phi, ctx);
        Matrix rhs = mat_mul(prev, dq, ctx);
        if (!(lhs.data == rhs.data))
          throw Error(ErrorKind::CertificateFailed, "comparison map is not a chain map");
      }
      cache_->phi.push_back(std::move(phi));
    }
  });
}

const Matrix& FrobeniusAnalysis::comparison(std::size_t k) const {
  build_comparisons();
  if (k >= cache_->phi.size()) throw Error(ErrorKind::InvalidArgument, "no comparison map at this index");
  return cache_->phi[k];
}

Subquotient FrobeniusAnalysis::ext(int j) const {
  const RingCtx& ctx = ring();
  if (j < 0 || j > static_cast<int>(ctx.n()))
    throw Error(ErrorKind::InvalidArgument, "Ext index out of range");
  if (j > pd()) return Subquotient(Submodule(ctx, 0, {}), Submodule(ctx, 0, {}));
  const auto k = static_cast<std::size_t>(j);
  const std::size_t r = res_.modules[k].rank;
  std::vector<int> shifts = dual_shifts(k);

  std::vector<VectorPoly> num;
  if (j == pd()) {
    for (std::size_t i = 0; i < r; ++i) {
      VectorPoly e(r);
      e[i] = Polynomial::constant(1, ctx);
      num.push_back(std::move(e));
    }
  } else {
    // kernel of the transposed differential = syzygies among rows of d_{j+1}
    const Matrix& d = res_.d(k + 1);
    std::vector<VectorPoly> rows;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < d.rows; ++i) {
      VectorPoly row = d.row(i);
      if (vec_is_zero(row)) {
        VectorPoly e(r);
        e[i] = Polynomial::constant(1, ctx);
        num.push_back(std::move(e));
      } else {
        rows.push_back(std::move(row));
        where.push_back(i);
      }
    }
    if (!rows.empty()) {
      Submodule m(ctx, d.cols, std::move(rows), dual_shifts(k + 1));
      Submodule syz = syzygies(m);
      for (const auto& s : syz.gens()) {
        VectorPoly v(r);
        for (std::size_t t = 0; t < where.size(); ++t) v[where[t]] = s[t];
        if (!vec_is_zero(v)) num.push_back(std::move(v));
      }
    }
  }

  std::vector<VectorPoly> den;
  if (k >= 1) {
    const Matrix& d = res_.d(k);
    for (std::size_t i = 0; i < d.rows; ++i) den.push_back(d.row(i));
  }
  Subquotient out(Submodule(ctx, r, std::move(num), shifts),
                  Submodule(ctx, r, nonzero(std::move(den)), shifts));
  if (verification_enabled() && !out.well_formed())
    throw Error(ErrorKind::CertificateFailed, "Ext denominator not inside numerator");
  return out;
}

SubquotientMap FrobeniusAnalysis::structural_map(int j) const {
  Subquotient src = ext(j);
  Subquotient tgt = frobenius_pullback(src, 1);
  Matrix m = j > pd() ? Matrix::zero(0, 0) : transpose(comparison(static_cast<std::size_t>(j)));
  SubquotientMap out{std::move(src), std::move(tgt), std::move(m)};
  if (verification_enabled() && !out.well_defined())
    throw Error(ErrorKind::CertificateFailed, "structural map is not well defined");
  return out;
}

ChainResult FrobeniusAnalysis::chain(int j, int max_e) const {
  if (max_e < 1) throw Error(ErrorKind::InvalidArgument, "max_e must be at least 1");
  const RingCtx& ctx = ring();
  ChainResult res;
  res.j = j;
  Subquotient E = ext(j);
  if (E.is_zero()) {
    res.verdict = Verdict::Nilpotent;
    res.stab_e = 0;
    return res;
  }
  SubquotientMap psi = structural_map(j);
  const auto& Z = E.numerator.gens();
  const auto& B = E.denominator.gens();
  const std::size_t r = E.ambient_rank();
  std::vector<VectorPoly> psi_z;
  for (const auto& z : Z) psi_z.push_back(psi.apply(z));
  const std::vector<int>& tshifts = psi.target.numerator.shifts();

  // preimage in the numerator of psi^{-1}(F* N), always containing B
  auto step = [&](const Submodule& N) {
    std::vector<VectorPoly> gens = psi_z;
    for (const auto& g : N.gens()) gens.push_back(power_vec(g, 1, ctx));
    Submodule joint(ctx, r, std::move(gens), tshifts);
    std::vector<VectorPoly> out = B;
    Submodule syz = syzygies(joint);
    for (const auto& s : syz.gens()) {
      VectorPoly v(r);
      for (std::size_t i = 0; i < Z.size(); ++i) v = vec_add(v, vec_scale(Z[i], s[i], ctx), ctx);
      if (!vec_is_zero(v)) out.push_back(std::move(v));
    }
    return minimal_generators(Submodule(ctx, r, nonzero(std::move(out)), E.numerator.shifts()));
  };

  Submodule N = E.denominator;
  for (int e = 0; e < max_e; ++e) {
    Submodule next = step(N);
    if (N.contains(next)) {
      res.verdict = N.contains(E.numerator) ? Verdict::Nilpotent : Verdict::NonNilpotent;
      res.stab_e = e;
      if (verification_enabled() && !N.contains(step(next)))
        throw Error(ErrorKind::CertificateFailed, "kernel chain moved after stabilizing");
      return res;
    }
    if (next.contains(E.numerator)) {
      res.verdict = Verdict::Nilpotent;
      res.stab_e = e + 1;
      return res;
    }
    N = std::move(next);
  }
  res.capped = true;
  return res;
}

// ---------------------------------------------------------------------------

Subquotient ext_module(const Ideal& ideal, int j) { return FrobeniusAnalysis(ideal).ext(j); }

SubquotientMap structural_map(const Ideal& ideal, int j) {
  return FrobeniusAnalysis(ideal).structural_map(j);
}

ChainResult frobenius_chain(const Ideal& ideal, int j, int max_e) {
  ChainResult r = FrobeniusAnalysis(ideal).chain(j, max_e);
  if (r.capped)
    throw Error(ErrorKind::Capped, "kernel chain at j=" + std::to_string(j) + " did not stabilize");
  return r;
}

namespace {

// Minimal monomial generators by divisibility.
std::vector<Polynomial> minimal_monomials(std::vector<Polynomial> gens, const RingCtx& ctx) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) ms.push_back(g.leading().mono);
  std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : ctx.cmp(a, b) > 0;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Polynomial> out;
  std::vector<Monomial> kept;
  for (const auto& m : ms) {
    if (std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); }))
      continue;
    kept.push_back(m);
    out.push_back(Polynomial::monomial(m, ctx));
  }
  return out;
}

std::vector<Polynomial> ideal_power(const Ideal& ideal, unsigned k) {
  const RingCtx& ctx = ideal.ring();
  const bool homogeneous = ideal.is_homogeneous();
  const bool monomial = ideal.is_monomial();
  std::vector<Polynomial> cur{Polynomial::constant(1, ctx)};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<Polynomial> next;
    for (const auto& a : cur)
      for (const auto& g : ideal.gens()) next.push_back(poly_mul(a, g, ctx));
    if (monomial)
      cur = minimal_monomials(std::move(next), ctx);
    else if (homogeneous)
      cur = minimal_generators(Ideal(ctx, std::move(next)));
    else
      cur = std::move(next);
  }
  return cur;
}

}  // namespace

bool cofinality_check(const Ideal& ideal) {
  const RingCtx& ctx = ideal.ring();
  const auto mu = static_cast<unsigned>(ideal.gens().size());
  if (mu == 0) return true;
  Ideal ip(ctx, ideal_power(ideal, ctx.p()));
  for (const auto& g : ideal.gens())
    if (!membership(poly_power_p(g, 1, ctx), ip)) return false;
  Ideal bracket = frobenius_power(ideal, 1);
  for (const auto& g : ideal_power(ideal, mu * (ctx.p() - 1) + 1))
    if (!membership(g, bracket)) return false;
  return true;
}

}  // namespace frobdepth
