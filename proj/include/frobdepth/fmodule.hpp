#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "frobdepth/groebner.hpp"
#include "frobdepth/resolution.hpp"

namespace frobdepth {

/// numerator / denominator, both inside the same graded free module R^r.
struct Subquotient {
  Submodule numerator;
  Submodule denominator;

  Subquotient(Submodule num, Submodule den);
  std::size_t ambient_rank() const { return numerator.rank(); }
  const RingCtx& ring() const { return numerator.ring(); }
  /// numerator contained in denominator.
  bool is_zero() const;
  /// denominator contained in numerator.
  bool well_formed() const;
};

/// Map of subquotients induced by a matrix on the ambient free modules.
struct SubquotientMap {
  Subquotient source;
  Subquotient target;
  Matrix matrix;  // target rank x source rank

  VectorPoly apply(const VectorPoly& v) const;
  bool well_defined() const;
};

enum class Verdict { Nilpotent, NonNilpotent, Unknown };
const char* to_string(Verdict v);

struct ChainResult {
  int j = 0;
  Verdict verdict = Verdict::Unknown;
  int stab_e = -1;  // -1 when capped
  bool capped = false;
};

Ideal frobenius_power(const Ideal& ideal, unsigned e);
Matrix frobenius_pullback(const Matrix& m, unsigned e, const RingCtx& ctx);
Submodule frobenius_pullback(const Submodule& m, unsigned e);
Subquotient frobenius_pullback(const Subquotient& m, unsigned e);
SubquotientMap frobenius_pullback(const SubquotientMap& m, unsigned e);
FreeComplex frobenius_pullback(const FreeComplex& c, unsigned e, const RingCtx& ctx);

/// Ext modules of R/I and the comparison maps Ext^j(R/I,R) -> F*Ext^j(R/I,R).
/// Holds the minimal resolution P of R/I and the chain map F*P -> P lifting
/// R/I^[p] -> R/I, both computed once.
class FrobeniusAnalysis {
 public:
  /// Throws NotHomogeneous, UnitIdeal.
  explicit FrobeniusAnalysis(Ideal ideal);

  const Ideal& ideal() const { return ideal_; }
  const RingCtx& ring() const { return ideal_.ring(); }
  const FreeComplex& resolution() const { return res_; }
  int pd() const { return static_cast<int>(res_.length()); }

  /// phi_k : F*P_k -> P_k, as a b_k x b_k matrix.
  const Matrix& comparison(std::size_t k) const;

  /// Ext^j(R/I, R); zero for j > pd. Throws InvalidArgument unless 0 <= j <= n.
  Subquotient ext(int j) const;
  /// Throws LiftFailed if a chain-map lift does not exist.
  SubquotientMap structural_map(int j) const;
  /// Ascending kernel chain of E -> F^e*E. Never throws Capped; a capped
  /// result has verdict Unknown.
  ChainResult chain(int j, int max_e) const;

 private:
  std::vector<int> dual_shifts(std::size_t k) const;
  void build_comparisons() const;

  Ideal ideal_;
  FreeComplex res_;
  int top_shift_ = 0;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

Subquotient ext_module(const Ideal& ideal, int j);
SubquotientMap structural_map(const Ideal& ideal, int j);
/// Throws Capped when max_e steps do not stabilize.
ChainResult frobenius_chain(const Ideal& ideal, int j, int max_e = 8);

/// I^[p] in I^p and I^(mu(p-1)+1) in I^[p], mu = number of generators.
bool cofinality_check(const Ideal& ideal);

}  // namespace frobdepth
