#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobdepth/error.hpp"

namespace frobdepth {

inline constexpr std::size_t kMaxVars = 16;

using Coeff = std::uint32_t;

/// Exponent vector of a monomial in at most kMaxVars variables. Entries past
/// the ring's variable count are zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  std::size_t size() const { return nvars_; }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return deg_; }
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const { return mask_; }
  bool is_one() const { return deg_ == 0; }

  std::vector<int> exponents() const;

  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) { return (a.mask_ & b.mask_) == 0; }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.exps_ == b.exps_;
  }

  /// Every exponent multiplied by `factor`.
  Monomial scaled(std::uint32_t factor) const;
  /// Exponents replaced by min(e, 1).
  Monomial squarefree_support() const;

 private:
  void recompute();

  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint32_t deg_ = 0;
  std::uint32_t mask_ = 0;
  std::uint8_t nvars_ = 0;
};

enum class OrderKind { Grevlex, Lex, BlockElimination };

/// Block elimination: the first `split` variables form a block that dominates
/// the rest; grevlex inside each block.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::size_t split = 0;
};

struct Limits {
  std::uint64_t pair_cap = 1'000'000;
};

/// The ring F_p[x_1..x_n] with a fixed monomial order.
class RingCtx {
 public:
  RingCtx(std::uint32_t p, std::vector<std::string> var_names, MonomialOrder order = {},
          Limits limits = {});

  std::uint32_t p() const { return p_; }
  std::size_t n() const { return names_.size(); }
  const std::vector<std::string>& var_names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  const Limits& limits() const { return limits_; }

  RingCtx with_order(MonomialOrder order) const;
  RingCtx with_limits(Limits limits) const;

  /// Index of a variable name, or -1.
  int var_index(std::string_view name) const;
  Monomial monomial(std::span<const int> exponents) const;
  Monomial variable(std::size_t i) const;
  Monomial one() const;

  /// Three-way comparison in the ring's order: >0 iff a > b.
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (order_.kind) {
      case OrderKind::Grevlex: return cmp_grevlex(a, b, 0, n());
      case OrderKind::Lex:
        for (std::size_t i = 0; i < n(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case OrderKind::BlockElimination: {
        int c = cmp_grevlex(a, b, 0, order_.split);
        return c != 0 ? c : cmp_grevlex(a, b, order_.split, n());
      }
    }
    return 0;
  }

  Coeff add(Coeff a, Coeff b) const { Coeff s = a + b; return s >= p_ ? s - p_ : s; }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const;
  /// Throws ZeroInverse when a = 0 mod p.
  Coeff inv(Coeff a) const;
  /// Reduces an arbitrary integer into [0, p).
  Coeff from_int(long long v) const;

  friend bool operator==(const RingCtx& a, const RingCtx& b) {
    return a.p_ == b.p_ && a.names_ == b.names_ && a.order_.kind == b.order_.kind &&
           a.order_.split == b.order_.split;
  }

 private:
  static int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  std::uint32_t p_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  Limits limits_;
};

Coeff ff_inv(Coeff a, const RingCtx& ctx);
/// Checked comparison; throws DimensionMismatch on foreign monomials.
std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b, const RingCtx& ctx);

struct Term {
  Coeff coef;
  Monomial mono;
};

/// Sparse polynomial: nonzero coefficients, strictly descending monomials.
class Polynomial {
 public:
  Polynomial() = default;
  /// Sorts, merges duplicates and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms, const RingCtx& ctx);
  static Polynomial constant(long long c, const RingCtx& ctx);
  static Polynomial monomial(const Monomial& m, const RingCtx& ctx, Coeff c = 1);
  static Polynomial variable(std::size_t i, const RingCtx& ctx);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  /// Highest total degree among terms; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Re-sorts the terms under another ring's order (same variables).
  Polynomial reordered(const RingCtx& ctx) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  explicit Polynomial(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  friend Polynomial add(const Polynomial&, const Polynomial&, const RingCtx&);
  friend Polynomial sub(const Polynomial&, const Polynomial&, const RingCtx&);
  friend Polynomial scale(const Polynomial&, Coeff, const RingCtx&);
  friend Polynomial mul_term(const Polynomial&, Coeff, const Monomial&, const RingCtx&);
  friend Polynomial poly_power_p(const Polynomial&, unsigned, const RingCtx&);

  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g, const RingCtx& ctx);
Polynomial sub(const Polynomial& f, const Polynomial& g, const RingCtx& ctx);
Polynomial neg(const Polynomial& f, const RingCtx& ctx);
Polynomial scale(const Polynomial& f, Coeff c, const RingCtx& ctx);
Polynomial mul_term(const Polynomial& f, Coeff c, const Monomial& m, const RingCtx& ctx);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g, const RingCtx& ctx);
Polynomial poly_pow(const Polynomial& f, unsigned k, const RingCtx& ctx);
/// f^(p^e), computed term-wise through the Frobenius endomorphism.
Polynomial poly_power_p(const Polynomial& f, unsigned e, const RingCtx& ctx);

/// Parses `x^3 + y^3 + z^3`, `2*x*y - z^2`; throws ParseError.
Polynomial parse_polynomial(std::string_view text, const RingCtx& ctx);
/// Canonical text; coefficients above p/2 print as negatives.
std::string to_string(const Polynomial& f, const RingCtx& ctx);
std::string to_string(const Monomial& m, const RingCtx& ctx);

}  // namespace frobdepth
