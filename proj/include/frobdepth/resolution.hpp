#pragma once

#include <vector>

#include "frobdepth/groebner.hpp"

namespace frobdepth {

struct GradedFreeModule {
  std::size_t rank = 0;
  std::vector<int> shifts;  // degree of each basis vector
};

/// F_0 <- F_1 <- ... <- F_l with d_k = maps[k-1] : F_k -> F_{k-1}.
struct FreeComplex {
  std::vector<GradedFreeModule> modules;
  std::vector<Matrix> maps;
  bool homogeneous = true;

  std::size_t length() const { return maps.size(); }
  /// d_k for 1 <= k <= length.
  const Matrix& d(std::size_t k) const { return maps.at(k - 1); }
  std::vector<std::size_t> betti() const;

  /// d_{k-1} * d_k = 0 for every k.
  bool is_complex(const RingCtx& ctx) const;
  /// No differential has a nonzero constant entry.
  bool is_minimal() const;
  /// Every nonzero entry (i, j) of d_k is homogeneous of degree
  /// shift_k[j] - shift_{k-1}[i].
  bool degrees_consistent() const;
};

/// Minimal graded free resolution of R/I. Throws NotHomogeneous, UnitIdeal.
FreeComplex free_resolution(const Ideal& ideal);
int pd(const Ideal& ideal);
/// n - pd(R/I): depth of R/I at the homogeneous maximal ideal.
int depth_quotient(const Ideal& ideal);

/// Cancels unit entries pairwise until no differential has a nonzero constant
/// entry. Preserves exactness and the homotopy type.
FreeComplex prune(FreeComplex complex, const RingCtx& ctx);

/// Sum over k of (-1)^k sum_j t^shift_{k,j}; index = degree. Throws
/// NotHomogeneous. Negative shifts are rejected.
std::vector<long long> hilbert_numerator(const FreeComplex& complex);

}  // namespace frobdepth
