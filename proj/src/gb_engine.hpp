#pragma once

// Internal module Groebner engine. Elements of R^r are flattened into term
// lists ordered position-over-term: lower position index is larger, then the
// ring's monomial order. Ideals are the rank-1 case.

#include <cstdint>
#include <vector>

#include "frobdepth/ring.hpp"

namespace frobdepth::detail {

struct MTerm {
  Monomial m;
  std::uint32_t pos;
  Coeff c;
};

using Vec = std::vector<MTerm>;

class Engine {
 public:
  /// `shifts[i]` is the degree of basis vector i; it only feeds sugar degrees.
  Engine(const RingCtx& ctx, std::vector<int> shifts);

  const RingCtx& ring() const { return *ctx_; }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<int>& shifts() const { return shifts_; }

  int cmp(const MTerm& a, const MTerm& b) const {
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return ctx_->cmp(a.m, b.m);
  }

  /// Sorts, merges and drops zeros.
  void normalize(Vec& v) const;
  void make_monic(Vec& v) const;
  /// Largest deg(m) + shift(pos) over the terms.
  int degree(const Vec& v) const;
  bool is_homogeneous(const Vec& v) const;

  /// f[from:] - c * m * g[g_from:].
  Vec sub_mul(const Vec& f, std::size_t from, Coeff c, const Monomial& m, const Vec& g,
              std::size_t g_from) const;
  Vec mul(const Vec& g, Coeff c, const Monomial& m) const;

 private:
  const RingCtx* ctx_;
  std::vector<int> shifts_;
};

/// Leading-term index over a basis, grouped by position.
class DivisorIndex {
 public:
  explicit DivisorIndex(std::size_t rank) : by_pos_(rank) {}
  void add(std::size_t id, const MTerm& lead);
  /// First registered id (in insertion order) whose lead divides t, or -1.
  long find(const MTerm& t) const;

 private:
  struct Entry {
    Monomial m;
    std::size_t id;
  };
  std::vector<std::vector<Entry>> by_pos_;
};

/// Full reduction (leading terms first, then every remaining term).
Vec reduce_full(Vec f, const std::vector<Vec>& basis, const DivisorIndex& index,
                const Engine& eng);
/// Reduces only while the leading term sits at a position < stop_pos and is
/// reducible. Returns the partially reduced vector.
Vec reduce_top(Vec f, const std::vector<Vec>& basis, const DivisorIndex& index,
               const Engine& eng, std::uint32_t stop_pos);

struct GbResult {
  std::vector<Vec> basis;             // reduced, monic, sorted descending by lead
  std::vector<bool> input_redundant;  // generator reduced to zero when processed
};

/// Buchberger with sugar selection and Gebauer-Moeller pair criteria. For
/// homogeneous input, `input_redundant` marks generators outside a minimal
/// generating set (generators are processed in degree order, input order
/// breaking ties).
GbResult groebner(const std::vector<Vec>& gens, const Engine& eng, bool product_criterion);

/// All inputs and all S-vectors reduce to zero against `basis`.
bool check_certificate(const std::vector<Vec>& gens, const std::vector<Vec>& basis,
                       const Engine& eng);

}  // namespace frobdepth::detail
