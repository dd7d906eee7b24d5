#include "frobdepth/groebner.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gb_engine.hpp"

namespace frobdepth {

using detail::DivisorIndex;
using detail::Engine;
using detail::MTerm;
using detail::Vec;

namespace {

Vec to_vec(const VectorPoly& v) {
  Vec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms())
      out.push_back(MTerm{t.mono, static_cast<std::uint32_t>(i), t.coef});
  return out;
}

Vec to_vec(const Polynomial& f) {
  Vec out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back(MTerm{t.mono, 0, t.coef});
  return out;
}

// Terms of each slot stay in descending order, so from_terms only copies.
VectorPoly from_vec(const Vec& v, std::size_t rank, std::uint32_t offset, const RingCtx& ctx) {
  std::vector<std::vector<Term>> slots(rank);
  for (const auto& t : v) slots.at(t.pos - offset).push_back(Term{t.c, t.m});
  VectorPoly out;
  out.reserve(rank);
  for (auto& s : slots) out.push_back(Polynomial::from_terms(std::move(s), ctx));
  return out;
}

Polynomial poly_from_vec(const Vec& v, const RingCtx& ctx) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back(Term{t.c, t.m});
  return Polynomial::from_terms(std::move(terms), ctx);
}

DivisorIndex make_index(const std::vector<Vec>& basis, std::size_t rank) {
  DivisorIndex idx(rank);
  for (std::size_t k = 0; k < basis.size(); ++k) idx.add(k, basis[k].front());
  return idx;
}

void check_rank(const VectorPoly& v, std::size_t rank) {
  if (v.size() != rank)
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in rank " +
                    std::to_string(rank) + " module");
}

}  // namespace

// ---------------------------------------------------------------------------
// Ideal

struct Ideal::Cache {
  std::once_flag gb_once;
  std::vector<Polynomial> gb;
};

Ideal::Ideal(RingCtx ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(std::move(g));
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->gb_once, [this] {
    Engine eng(ctx_, {0});
    std::vector<Vec> in;
    in.reserve(gens_.size());
    for (const auto& g : gens_) in.push_back(to_vec(g));
    auto res = detail::groebner(in, eng, true);
    for (const auto& b : res.basis) cache_->gb.push_back(poly_from_vec(b, ctx_));
  });
  return cache_->gb;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

bool Ideal::is_squarefree_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) {
    return g.is_monomial() && g.leading().mono.squarefree_support() == g.leading().mono;
  });
}

// ---------------------------------------------------------------------------
// Submodule

struct Submodule::Cache {
  std::once_flag gb_once;
  std::vector<VectorPoly> gb;
  std::once_flag aug_once;
  std::vector<Vec> aug_basis;
  std::optional<Submodule> syz;
};

Submodule::Submodule(RingCtx ctx, std::size_t rank, std::vector<VectorPoly> gens,
                     std::vector<int> shifts)
    : ctx_(std::move(ctx)),
      rank_(rank),
      gens_(std::move(gens)),
      shifts_(std::move(shifts)),
      cache_(std::make_shared<Cache>()) {
  if (shifts_.empty()) shifts_.assign(rank_, 0);
  if (shifts_.size() != rank_)
    throw Error(ErrorKind::DimensionMismatch, "shift list does not match module rank");
  for (const auto& g : gens_) check_rank(g, rank_);
}

const std::vector<VectorPoly>& Submodule::groebner_basis() const {
  std::call_once(cache_->gb_once, [this] {
    Engine eng(ctx_, shifts_);
    std::vector<Vec> in;
    in.reserve(gens_.size());
    for (const auto& g : gens_) in.push_back(to_vec(g));
    auto res = detail::groebner(in, eng, rank_ == 1);
    for (const auto& b : res.basis) cache_->gb.push_back(from_vec(b, rank_, 0, ctx_));
  });
  return cache_->gb;
}

bool Submodule::is_zero() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const VectorPoly& g) { return vec_is_zero(g); });
}

bool Submodule::contains(const VectorPoly& v) const {
  check_rank(v, rank_);
  const auto& gb = groebner_basis();
  if (gb.empty()) return vec_is_zero(v);
  Engine eng(ctx_, shifts_);
  std::vector<Vec> basis;
  basis.reserve(gb.size());
  for (const auto& g : gb) basis.push_back(to_vec(g));
  auto idx = make_index(basis, rank_);
  return detail::reduce_top(to_vec(v), basis, idx, eng, static_cast<std::uint32_t>(rank_)).empty();
}

bool Submodule::contains(const Submodule& other) const {
  if (other.rank_ != rank_) throw Error(ErrorKind::DimensionMismatch, "rank mismatch");
  const auto& gb = groebner_basis();
  Engine eng(ctx_, shifts_);
  std::vector<Vec> basis;
  for (const auto& g : gb) basis.push_back(to_vec(g));
  auto idx = make_index(basis, rank_);
  for (const auto& g : other.gens_)
    if (!detail::reduce_top(to_vec(g), basis, idx, eng, static_cast<std::uint32_t>(rank_)).empty())
      return false;
  return true;
}

int Submodule::degree_of(const VectorPoly& v) const {
  check_rank(v, rank_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<int>(v[i].leading().mono.degree()) + shifts_[i];
  return 0;
}

bool Submodule::is_homogeneous() const {
  Engine eng(ctx_, shifts_);
  for (const auto& g : gens_)
    if (!eng.is_homogeneous(to_vec(g))) return false;
  return true;
}

const Submodule& Submodule::syzygy_module() const {
  std::call_once(cache_->aug_once, [this] {
    const std::size_t k = gens_.size();
    std::vector<int> shifts = shifts_;
    std::vector<int> tag_shifts;
    for (const auto& g : gens_) tag_shifts.push_back(degree_of(g));
    shifts.insert(shifts.end(), tag_shifts.begin(), tag_shifts.end());
    Engine eng(ctx_, shifts);
    std::vector<Vec> in;
    in.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      Vec v = to_vec(gens_[i]);
      v.push_back(MTerm{ctx_.one(), static_cast<std::uint32_t>(rank_ + i), 1});
      in.push_back(std::move(v));
    }
    auto res = detail::groebner(in, eng, false);
    cache_->aug_basis = std::move(res.basis);
    std::vector<VectorPoly> syz_gb;
    for (const auto& b : cache_->aug_basis)
      if (b.front().pos >= rank_)
        syz_gb.push_back(from_vec(b, k, static_cast<std::uint32_t>(rank_), ctx_));
    Submodule syz(ctx_, k, syz_gb, tag_shifts);
    std::call_once(syz.cache_->gb_once, [&] { syz.cache_->gb = syz_gb; });
    if (verification_enabled()) {
      for (const auto& s : syz_gb) {
        VectorPoly acc(rank_);
        for (std::size_t i = 0; i < k; ++i)
          acc = vec_add(acc, vec_scale(gens_[i], s[i], ctx_), ctx_);
        if (!vec_is_zero(acc))
          throw Error(ErrorKind::CertificateFailed, "syzygy does not annihilate generators");
      }
    }
    cache_->syz.emplace(std::move(syz));
  });
  return *cache_->syz;
}

std::optional<VectorPoly> Submodule::lift(const VectorPoly& v) const {
  check_rank(v, rank_);
  const Submodule& syz = syzygy_module();
  const std::size_t k = gens_.size();
  std::vector<int> shifts = shifts_;
  shifts.insert(shifts.end(), syz.shifts().begin(), syz.shifts().end());
  Engine eng(ctx_, shifts);
  const auto& basis = cache_->aug_basis;
  auto idx = make_index(basis, rank_ + k);
  Vec f = detail::reduce_top(to_vec(v), basis, idx, eng, static_cast<std::uint32_t>(rank_));
  if (!f.empty() && f.front().pos < rank_) return std::nullopt;
  f = detail::reduce_full(std::move(f), basis, idx, eng);
  for (auto& t : f) t.c = ctx_.neg(t.c);
  VectorPoly coeffs = from_vec(f, k, static_cast<std::uint32_t>(rank_), ctx_);
  if (verification_enabled()) {
    VectorPoly acc(rank_);
    for (std::size_t i = 0; i < k; ++i) acc = vec_add(acc, vec_scale(gens_[i], coeffs[i], ctx_), ctx_);
    for (std::size_t i = 0; i < rank_; ++i)
      if (!(acc[i] == v[i])) throw Error(ErrorKind::CertificateFailed, "lift certificate mismatch");
  }
  return coeffs;
}

// ---------------------------------------------------------------------------
// Free functions

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const RingCtx& ctx) {
  Engine eng(ctx, {0});
  std::vector<Vec> b;
  for (const auto& g : basis) {
    if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero element in division basis");
    b.push_back(to_vec(g));
  }
  auto idx = make_index(b, 1);
  return poly_from_vec(detail::reduce_full(to_vec(f), b, idx, eng), ctx);
}

VectorPoly reduce(const VectorPoly& f, std::span<const VectorPoly> basis, const RingCtx& ctx) {
  Engine eng(ctx, std::vector<int>(f.size(), 0));
  std::vector<Vec> b;
  for (const auto& g : basis) {
    check_rank(g, f.size());
    if (vec_is_zero(g)) throw Error(ErrorKind::InvalidArgument, "zero element in division basis");
    b.push_back(to_vec(g));
  }
  auto idx = make_index(b, f.size());
  return from_vec(detail::reduce_full(to_vec(f), b, idx, eng), f.size(), 0, ctx);
}

std::vector<Polynomial> buchberger(const Ideal& ideal) { return ideal.groebner_basis(); }

bool membership(const Polynomial& f, const Ideal& ideal) {
  const auto& gb = ideal.groebner_basis();
  return reduce(f, gb, ideal.ring()).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorKind::DimensionMismatch, "ideals in different rings");
  const auto& ga = a.groebner_basis();
  const auto& gb = b.groebner_basis();
  return ga == gb;
}

namespace {

Submodule as_module(const Ideal& ideal) {
  std::vector<VectorPoly> gens;
  for (const auto& g : ideal.gens()) gens.push_back(VectorPoly{g});
  return Submodule(ideal.ring(), 1, std::move(gens));
}

}  // namespace

std::optional<std::vector<Polynomial>> lift(const Polynomial& f, const Ideal& ideal) {
  return as_module(ideal).lift(VectorPoly{f});
}

Submodule minimal_generators(const Submodule& m) {
  Engine eng(m.ring(), m.shifts());
  std::vector<Vec> in;
  for (const auto& g : m.gens()) {
    in.push_back(to_vec(g));
    if (!eng.is_homogeneous(in.back()))
      throw Error(ErrorKind::NotHomogeneous, "minimal generators need homogeneous input");
  }
  auto res = detail::groebner(in, eng, m.rank() == 1);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (!res.input_redundant[i]) keep.push_back(i);
  std::stable_sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
    return m.degree_of(m.gens()[a]) < m.degree_of(m.gens()[b]);
  });
  std::vector<VectorPoly> gens;
  for (auto i : keep) gens.push_back(m.gens()[i]);
  return Submodule(m.ring(), m.rank(), std::move(gens), m.shifts());
}

std::vector<Polynomial> minimal_generators(const Ideal& ideal) {
  if (!ideal.is_homogeneous())
    throw Error(ErrorKind::NotHomogeneous, "minimal generators need homogeneous input");
  Submodule mg = minimal_generators(as_module(ideal));
  std::vector<Polynomial> out;
  for (const auto& g : mg.gens()) out.push_back(g[0]);
  return out;
}

Submodule syzygies(const Submodule& m) {
  const Submodule& syz = m.syzygy_module();
  if (m.is_homogeneous()) return minimal_generators(syz);
  return syz;
}

Submodule syzygies(const Ideal& ideal) { return syzygies(as_module(ideal)); }

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop) {
  const RingCtx& ctx = ideal.ring();
  const std::size_t n = ctx.n();
  std::vector<bool> dropped(n, false);
  for (auto d : drop) {
    if (d >= n) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
    dropped[d] = true;
  }
  std::vector<std::size_t> perm;  // new position -> old index
  for (std::size_t i = 0; i < n; ++i)
    if (dropped[i]) perm.push_back(i);
  const std::size_t split = perm.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) perm.push_back(i);
  if (split == n) throw Error(ErrorKind::InvalidArgument, "cannot eliminate every variable");

  std::vector<std::string> names;
  for (auto i : perm) names.push_back(ctx.var_names()[i]);
  RingCtx block(ctx.p(), names, MonomialOrder{OrderKind::BlockElimination, split}, ctx.limits());
  auto permute = [&](const Polynomial& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      std::vector<int> e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = t.mono[perm[k]];
      terms.push_back(Term{t.coef, block.monomial(e)});
    }
    return Polynomial::from_terms(std::move(terms), block);
  };
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(permute(g));
  Ideal big(block, gens);

  std::vector<std::string> kept_names(names.begin() + static_cast<long>(split), names.end());
  MonomialOrder sub_order;
  if (ctx.order().kind == OrderKind::Lex) sub_order.kind = OrderKind::Lex;
  RingCtx sub(ctx.p(), kept_names, sub_order, ctx.limits());
  std::vector<Polynomial> out;
  for (const auto& g : big.groebner_basis()) {
    bool free = true;
    for (const auto& t : g.terms())
      for (std::size_t k = 0; k < split && free; ++k)
        if (t.mono[k] != 0) free = false;
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      std::vector<int> e(n - split);
      for (std::size_t k = split; k < n; ++k) e[k - split] = t.mono[k];
      terms.push_back(Term{t.coef, sub.monomial(e)});
    }
    out.push_back(Polynomial::from_terms(std::move(terms), sub));
  }
  return Ideal(sub, std::move(out));
}

int dim_quotient(const Ideal& ideal) {
  const std::size_t n = ideal.ring().n();
  if (n > 12) throw Error(ErrorKind::ResourceExhausted, "dimension computation capped at 12 variables");
  const auto& gb = ideal.groebner_basis();
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) {
    if (g.is_constant()) return -1;
    supports.push_back(g.leading().mono.support());
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [s](std::uint32_t l) { return (l & ~s) == 0; });
    if (independent) best = size;
  }
  return best;
}

int height(const Ideal& ideal) {
  int d = dim_quotient(ideal);
  if (d < 0) throw Error(ErrorKind::UnitIdeal, "height of the unit ideal");
  return static_cast<int>(ideal.ring().n()) - d;
}

Ideal radical_monomial(const Ideal& ideal) {
  if (!ideal.is_monomial()) throw Error(ErrorKind::NotMonomial, "radical needs monomial generators");
  const RingCtx& ctx = ideal.ring();
  std::vector<Monomial> sup;
  for (const auto& g : ideal.gens()) sup.push_back(g.leading().mono.squarefree_support());
  std::vector<Monomial> minimal;
  for (std::size_t a = 0; a < sup.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < sup.size() && !redundant; ++b) {
      if (a == b || !sup[b].divides(sup[a])) continue;
      if (!(sup[b] == sup[a]) || b < a) redundant = true;
    }
    if (!redundant) minimal.push_back(sup[a]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Monomial& a, const Monomial& b) { return ctx.cmp(a, b) > 0; });
  std::vector<Polynomial> gens;
  for (const auto& m : minimal) gens.push_back(Polynomial::monomial(m, ctx));
  return Ideal(ctx, std::move(gens));
}

namespace {

void require_squarefree(const Ideal& ideal) {
  if (!ideal.is_monomial()) throw Error(ErrorKind::NotMonomial, "monomial ideal expected");
  if (!ideal.is_squarefree_monomial())
    throw Error(ErrorKind::NotSquarefree, "squarefree monomial ideal expected");
}

}  // namespace

std::vector<std::vector<std::size_t>> minimal_primes_monomial(const Ideal& ideal) {
  require_squarefree(ideal);
  const std::size_t n = ideal.ring().n();
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.gens()) {
    if (g.is_constant()) return {};
    supports.push_back(g.leading().mono.support());
  }
  std::vector<std::uint32_t> covers;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool cover = std::all_of(supports.begin(), supports.end(),
                             [s](std::uint32_t l) { return (l & s) != 0; });
    if (cover) covers.push_back(s);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto s : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(),
                                [s](std::uint32_t t) { return t != s && (t & ~s) == 0; });
    if (!minimal) continue;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      if (s & (1u << i)) vars.push_back(i);
    out.push_back(std::move(vars));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool punctured_connected(const Ideal& ideal) {
  require_squarefree(ideal);
  int d = dim_quotient(ideal);
  if (d < 0) throw Error(ErrorKind::UnitIdeal, "unit ideal has empty spectrum");
  if (d == 0) throw Error(ErrorKind::ZeroDimensional, "punctured spectrum is empty");
  auto primes = minimal_primes_monomial(ideal);
  const std::size_t n = ideal.ring().n();
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  std::vector<std::uint32_t> masks;
  for (const auto& pr : primes) {
    std::uint32_t m = 0;
    for (auto v : pr) m |= 1u << v;
    masks.push_back(m);
  }
  std::vector<bool> seen(masks.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < masks.size(); ++b)
      if (!seen[b] && (masks[a] | masks[b]) != all) {
        seen[b] = true;
        stack.push_back(b);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

// ---------------------------------------------------------------------------
// Vectors and matrices

VectorPoly vec_add(const VectorPoly& a, const VectorPoly& b, const RingCtx& ctx) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector length mismatch");
  VectorPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = add(a[i], b[i], ctx);
  return out;
}

VectorPoly vec_scale(const VectorPoly& a, const Polynomial& c, const RingCtx& ctx) {
  VectorPoly out(a.size());
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = poly_mul(a[i], c, ctx);
  return out;
}

bool vec_is_zero(const VectorPoly& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& f) { return f.is_zero(); });
}

std::string to_string(const VectorPoly& v, const RingCtx& ctx) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i], ctx);
  os << ')';
  return os.str();
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
  Matrix m;
  m.rows = rows;
  m.cols = cols;
  m.data.assign(rows * cols, Polynomial{});
  return m;
}

VectorPoly Matrix::column(std::size_t j) const {
  VectorPoly v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

VectorPoly Matrix::row(std::size_t i) const {
  return VectorPoly(data.begin() + static_cast<long>(i * cols),
                    data.begin() + static_cast<long>((i + 1) * cols));
}

void Matrix::set_column(std::size_t j, const VectorPoly& v) {
  if (v.size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
  for (std::size_t i = 0; i < rows; ++i) at(i, j) = v[i];
}

bool Matrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](const Polynomial& f) { return f.is_zero(); });
}

VectorPoly mat_vec(const Matrix& m, const VectorPoly& v, const RingCtx& ctx) {
  if (v.size() != m.cols) throw Error(ErrorKind::DimensionMismatch, "matrix-vector mismatch");
  VectorPoly out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero())
        out[i] = add(out[i], poly_mul(m.at(i, j), v[j], ctx), ctx);
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const RingCtx& ctx) {
  if (a.cols != b.rows) throw Error(ErrorKind::DimensionMismatch, "matrix product mismatch");
  Matrix out = Matrix::zero(a.rows, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j) out.set_column(j, mat_vec(a, b.column(j), ctx));
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t = Matrix::zero(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

}  // namespace frobdepth
