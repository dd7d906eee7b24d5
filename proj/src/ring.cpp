#include "frobdepth/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace frobdepth {

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars)
    throw Error(ErrorKind::DimensionMismatch, "too many variables");
  nvars_ = static_cast<std::uint8_t>(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xFFFF)
      throw Error(ErrorKind::InvalidArgument, "exponent out of range");
    exps_[i] = static_cast<std::uint16_t>(exponents[i]);
  }
  recompute();
}

void Monomial::recompute() {
  deg_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    deg_ += exps_[i];
    if (exps_[i] != 0) mask_ |= 1u << i;
  }
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + nvars_);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.nvars_ = std::max(a.nvars_, b.nvars_);
  for (std::size_t i = 0; i < r.nvars_; ++i) {
    std::uint32_t s = std::uint32_t{a.exps_[i]} + b.exps_[i];
    if (s > 0xFFFF) throw Error(ErrorKind::ResourceExhausted, "exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(s);
  }
  r.deg_ = a.deg_ + b.deg_;
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.nvars_ = a.nvars_;
  for (std::size_t i = 0; i < r.nvars_; ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  r.recompute();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.nvars_ = std::max(a.nvars_, b.nvars_);
  for (std::size_t i = 0; i < r.nvars_; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.recompute();
  return r;
}

Monomial Monomial::scaled(std::uint32_t factor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) {
    std::uint64_t e = std::uint64_t{exps_[i]} * factor;
    if (e > 0xFFFF) throw Error(ErrorKind::ResourceExhausted, "exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.recompute();
  return r;
}

Monomial Monomial::squarefree_support() const {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = exps_[i] ? 1 : 0;
  r.recompute();
  return r;
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

RingCtx::RingCtx(std::uint32_t p, std::vector<std::string> var_names, MonomialOrder order,
                 Limits limits)
    : p_(p), names_(std::move(var_names)), order_(order), limits_(limits) {
  if (p_ >= (1u << 16) || !is_prime(p_))
    throw Error(ErrorKind::InvalidArgument, "characteristic must be a prime below 2^16, got " +
                                                std::to_string(p_));
  if (names_.empty()) throw Error(ErrorKind::InvalidArgument, "ring needs at least one variable");
  if (names_.size() > kMaxVars)
    throw Error(ErrorKind::InvalidArgument,
                "at most " + std::to_string(kMaxVars) + " variables supported");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size())
    throw Error(ErrorKind::InvalidArgument, "variable names must be distinct");
  for (const auto& name : names_) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
      throw Error(ErrorKind::InvalidArgument, "bad variable name '" + name + "'");
    for (char c : name)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw Error(ErrorKind::InvalidArgument, "bad variable name '" + name + "'");
  }
  if (order_.kind == OrderKind::BlockElimination && order_.split > names_.size())
    throw Error(ErrorKind::InvalidArgument, "block split exceeds variable count");
}

RingCtx RingCtx::with_order(MonomialOrder order) const {
  return RingCtx(p_, names_, order, limits_);
}

RingCtx RingCtx::with_limits(Limits limits) const {
  return RingCtx(p_, names_, order_, limits);
}

int RingCtx::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Monomial RingCtx::monomial(std::span<const int> exponents) const {
  if (exponents.size() != n())
    throw Error(ErrorKind::DimensionMismatch, "monomial length " +
                                                  std::to_string(exponents.size()) +
                                                  " != variable count " + std::to_string(n()));
  return Monomial(exponents);
}

Monomial RingCtx::variable(std::size_t i) const {
  std::vector<int> e(n(), 0);
  e.at(i) = 1;
  return Monomial(e);
}

Monomial RingCtx::one() const {
  std::vector<int> e(n(), 0);
  return Monomial(e);
}

Coeff RingCtx::pow(Coeff a, std::uint64_t e) const {
  std::uint64_t base = a % p_, acc = 1 % p_;
  while (e != 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Coeff>(acc);
}

Coeff RingCtx::inv(Coeff a) const {
  if (a % p_ == 0) throw Error(ErrorKind::ZeroInverse, "0 has no inverse mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

Coeff RingCtx::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

Coeff ff_inv(Coeff a, const RingCtx& ctx) { return ctx.inv(a); }

std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b, const RingCtx& ctx) {
  if (a.size() != ctx.n() || b.size() != ctx.n())
    throw Error(ErrorKind::DimensionMismatch, "monomial does not belong to this ring");
  int c = ctx.cmp(a, b);
  return c > 0 ? std::strong_ordering::greater
               : (c < 0 ? std::strong_ordering::less : std::strong_ordering::equal);
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::from_terms(std::vector<Term> terms, const RingCtx& ctx) {
  for (auto& t : terms) t.coef %= ctx.p();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ctx.cmp(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coef = ctx.add(out.back().coef, t.coef);
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0; });
  return Polynomial(std::move(out));
}

Polynomial Polynomial::constant(long long c, const RingCtx& ctx) {
  Coeff r = ctx.from_int(c);
  if (r == 0) return {};
  return Polynomial({Term{r, ctx.one()}});
}

Polynomial Polynomial::monomial(const Monomial& m, const RingCtx& ctx, Coeff c) {
  c %= ctx.p();
  if (c == 0) return {};
  return Polynomial({Term{c, m}});
}

Polynomial Polynomial::variable(std::size_t i, const RingCtx& ctx) {
  return monomial(ctx.variable(i), ctx);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Polynomial Polynomial::reordered(const RingCtx& ctx) const { return from_terms(terms_, ctx); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coef != b.terms_[i].coef || !(a.terms_[i].mono == b.terms_[i].mono))
      return false;
  return true;
}

namespace {

// f + c * g, both sorted descending.
std::vector<Term> merge(const std::vector<Term>& f, const std::vector<Term>& g, Coeff c,
                        const RingCtx& ctx) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    int cmp = ctx.cmp(f[i].mono, g[j].mono);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{ctx.mul(c, g[j].coef), g[j].mono});
      ++j;
    } else {
      Coeff s = ctx.add(f[i].coef, ctx.mul(c, g[j].coef));
      if (s != 0) out.push_back(Term{s, f[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back(Term{ctx.mul(c, g[j].coef), g[j].mono});
  return out;
}

}  // namespace

Polynomial add(const Polynomial& f, const Polynomial& g, const RingCtx& ctx) {
  return Polynomial(merge(f.terms_, g.terms_, 1, ctx));
}

Polynomial sub(const Polynomial& f, const Polynomial& g, const RingCtx& ctx) {
  return Polynomial(merge(f.terms_, g.terms_, ctx.neg(1), ctx));
}

Polynomial neg(const Polynomial& f, const RingCtx& ctx) { return scale(f, ctx.neg(1), ctx); }

Polynomial scale(const Polynomial& f, Coeff c, const RingCtx& ctx) {
  c %= ctx.p();
  if (c == 0) return {};
  std::vector<Term> out = f.terms_;
  for (auto& t : out) t.coef = ctx.mul(t.coef, c);
  return Polynomial(std::move(out));
}

Polynomial mul_term(const Polynomial& f, Coeff c, const Monomial& m, const RingCtx& ctx) {
  c %= ctx.p();
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(f.terms_.size());
  for (const auto& t : f.terms_) out.push_back(Term{ctx.mul(t.coef, c), t.mono * m});
  return Polynomial(std::move(out));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g, const RingCtx& ctx) {
  if (f.is_zero() || g.is_zero()) return {};
  const Polynomial& small = f.size() <= g.size() ? f : g;
  const Polynomial& big = f.size() <= g.size() ? g : f;
  if (small.size() == 1) return mul_term(big, small.leading().coef, small.leading().mono, ctx);
  std::vector<Term> prod;
  prod.reserve(f.size() * g.size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) prod.push_back(Term{ctx.mul(a.coef, b.coef), a.mono * b.mono});
  return Polynomial::from_terms(std::move(prod), ctx);
}

Polynomial poly_pow(const Polynomial& f, unsigned k, const RingCtx& ctx) {
  Polynomial acc = Polynomial::constant(1, ctx);
  Polynomial base = f;
  while (k != 0) {
    if (k & 1) acc = poly_mul(acc, base, ctx);
    k >>= 1;
    if (k != 0) base = poly_mul(base, base, ctx);
  }
  return acc;
}

Polynomial poly_power_p(const Polynomial& f, unsigned e, const RingCtx& ctx) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= ctx.p();
    if (q > 0xFFFF) throw Error(ErrorKind::ResourceExhausted, "Frobenius exponent too large");
  }
  // c^(p^e) = c in F_p; a monomial order is preserved by scaling exponents.
  std::vector<Term> out = f.terms_;
  for (auto& t : out) t.mono = t.mono.scaled(static_cast<std::uint32_t>(q));
  return Polynomial(std::move(out));
}

}  // namespace frobdepth
