#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobdepth/ring.hpp"

namespace frobdepth {

/// Element of a free module R^r.
using VectorPoly = std::vector<Polynomial>;

/// Ideal given by generators, with a lazily computed reduced Groebner basis.
/// The basis cache is filled at most once and is safe to read concurrently.
class Ideal {
 public:
  /// Zero generators are dropped.
  Ideal(RingCtx ctx, std::vector<Polynomial> gens);

  const RingCtx& ring() const { return ctx_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  /// Reduced basis, sorted by descending leading monomial.
  const std::vector<Polynomial>& groebner_basis() const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_homogeneous() const;
  bool is_monomial() const;
  bool is_squarefree_monomial() const;

 private:
  struct Cache;
  RingCtx ctx_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Submodule of R^r spanned by `gens`. `shifts` are the degrees of the basis
/// vectors of R^r (all zero when omitted).
class Submodule {
 public:
  Submodule(RingCtx ctx, std::size_t rank, std::vector<VectorPoly> gens,
            std::vector<int> shifts = {});

  const RingCtx& ring() const { return ctx_; }
  std::size_t rank() const { return rank_; }
  const std::vector<VectorPoly>& gens() const { return gens_; }
  const std::vector<int>& shifts() const { return shifts_; }

  /// Reduced module basis under position-over-term order.
  const std::vector<VectorPoly>& groebner_basis() const;
  bool is_zero() const;
  bool contains(const VectorPoly& v) const;
  bool contains(const Submodule& other) const;
  /// Coefficients c with sum c_i * gens[i] = v, or nullopt if v is outside.
  std::optional<VectorPoly> lift(const VectorPoly& v) const;
  /// Generators of the kernel of R^k -> R^r, e_i -> gens[i]. Shifts of the
  /// source are the degrees of the generators.
  const Submodule& syzygy_module() const;

  /// Degree of a homogeneous element (deg of any term + shift of its slot).
  int degree_of(const VectorPoly& v) const;
  bool is_homogeneous() const;

 private:
  struct Cache;
  RingCtx ctx_;
  std::size_t rank_;
  std::vector<VectorPoly> gens_;
  std::vector<int> shifts_;
  std::shared_ptr<Cache> cache_;
};

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const RingCtx& ctx);
VectorPoly reduce(const VectorPoly& f, std::span<const VectorPoly> basis, const RingCtx& ctx);

std::vector<Polynomial> buchberger(const Ideal& ideal);
bool membership(const Polynomial& f, const Ideal& ideal);
bool ideal_equal(const Ideal& a, const Ideal& b);
/// Coefficients expressing f in the generators of the ideal, or nullopt.
std::optional<std::vector<Polynomial>> lift(const Polynomial& f, const Ideal& ideal);

Submodule syzygies(const Submodule& m);
Submodule syzygies(const Ideal& ideal);
/// Minimal homogeneous generating set, chosen in degree order (input order
/// within a degree). Throws NotHomogeneous.
Submodule minimal_generators(const Submodule& m);
std::vector<Polynomial> minimal_generators(const Ideal& ideal);

/// I intersected with F_p[remaining variables], as an ideal of the smaller
/// polynomial ring (variable names and relative order kept).
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop);

/// Krull dimension of R/I via independent sets of the initial ideal; -1 for
/// the unit ideal.
int dim_quotient(const Ideal& ideal);
/// n - dim R/I. Throws UnitIdeal.
int height(const Ideal& ideal);

Ideal radical_monomial(const Ideal& ideal);
/// Minimal primes of a squarefree monomial ideal as sorted variable-index
/// sets (minimal vertex covers of the generator supports).
std::vector<std::vector<std::size_t>> minimal_primes_monomial(const Ideal& ideal);
/// Connectedness of V(I) minus the origin for a squarefree monomial ideal:
/// components meet away from the origin iff their variable sets do not
/// together exhaust all variables.
bool punctured_connected(const Ideal& ideal);

// Vector and matrix helpers shared by the homological modules.
VectorPoly vec_add(const VectorPoly& a, const VectorPoly& b, const RingCtx& ctx);
VectorPoly vec_scale(const VectorPoly& a, const Polynomial& c, const RingCtx& ctx);
bool vec_is_zero(const VectorPoly& v);
std::string to_string(const VectorPoly& v, const RingCtx& ctx);

/// Dense matrix of polynomials, row-major. Columns are images of source basis
/// vectors.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial> data;

  static Matrix zero(std::size_t rows, std::size_t cols);
  Polynomial& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  VectorPoly column(std::size_t j) const;
  VectorPoly row(std::size_t i) const;
  void set_column(std::size_t j, const VectorPoly& v);
  bool is_zero() const;
};

VectorPoly mat_vec(const Matrix& m, const VectorPoly& v, const RingCtx& ctx);
Matrix mat_mul(const Matrix& a, const Matrix& b, const RingCtx& ctx);
Matrix transpose(const Matrix& m);

}  // namespace frobdepth
