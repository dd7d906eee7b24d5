#include "frobdepth/resolution.hpp"

namespace frobdepth {

std::vector<std::size_t> FreeComplex::betti() const {
  std::vector<std::size_t> b;
  for (const auto& m : modules) b.push_back(m.rank);
  return b;
}

bool FreeComplex::is_complex(const RingCtx& ctx) const {
  for (std::size_t k = 2; k <= length(); ++k)
    if (!mat_mul(d(k - 1), d(k), ctx).is_zero()) return false;
  return true;
}

bool FreeComplex::is_minimal() const {
  for (const auto& m : maps)
    for (const auto& f : m.data)
      if (!f.is_zero() && f.is_constant()) return false;
  return true;
}

bool FreeComplex::degrees_consistent() const {
  for (std::size_t k = 1; k <= length(); ++k) {
    const Matrix& m = d(k);
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) {
        const Polynomial& f = m.at(i, j);
        if (f.is_zero()) continue;
        int want = modules[k].shifts[j] - modules[k - 1].shifts[i];
        if (!f.is_homogeneous() || f.degree() != want) return false;
      }
  }
  return true;
}

namespace {

void verify(const FreeComplex& c, const RingCtx& ctx, std::size_t n) {
  if (!verification_enabled()) return;
  if (!c.is_complex(ctx)) throw Error(ErrorKind::CertificateFailed, "d*d != 0 in resolution");
  if (!c.is_minimal()) throw Error(ErrorKind::CertificateFailed, "resolution is not minimal");
  if (!c.degrees_consistent())
    throw Error(ErrorKind::CertificateFailed, "resolution differential has wrong degrees");
  if (c.length() > n)
    throw Error(ErrorKind::CertificateFailed, "resolution longer than the number of variables");
}

}  // namespace

FreeComplex free_resolution(const Ideal& ideal) {
  const RingCtx& ctx = ideal.ring();
  if (!ideal.is_homogeneous())
    throw Error(ErrorKind::NotHomogeneous, "resolutions need homogeneous generators");
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "R/I is zero");

  FreeComplex c;
  c.modules.push_back(GradedFreeModule{1, {0}});
  std::vector<Polynomial> gens = minimal_generators(ideal);
  if (gens.empty()) return c;

  Matrix d1 = Matrix::zero(1, gens.size());
  std::vector<int> s1;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    d1.at(0, j) = gens[j];
    s1.push_back(gens[j].degree());
  }
  c.modules.push_back(GradedFreeModule{gens.size(), s1});
  c.maps.push_back(std::move(d1));

  while (true) {
    const Matrix& last = c.maps.back();
    const auto& src_shifts = c.modules[c.modules.size() - 2].shifts;
    std::vector<VectorPoly> cols;
    for (std::size_t j = 0; j < last.cols; ++j) cols.push_back(last.column(j));
    Submodule image(ctx, last.rows, std::move(cols), src_shifts);
    Submodule syz = syzygies(image);
    std::vector<VectorPoly> next;
    for (const auto& g : syz.gens())
      if (!vec_is_zero(g)) next.push_back(g);
    if (next.empty()) break;
    if (c.length() >= ctx.n())
      throw Error(ErrorKind::CertificateFailed, "resolution longer than the number of variables");
    Matrix dk = Matrix::zero(last.cols, next.size());
    std::vector<int> shifts;
    for (std::size_t j = 0; j < next.size(); ++j) {
      dk.set_column(j, next[j]);
      shifts.push_back(syz.degree_of(next[j]));
    }
    c.modules.push_back(GradedFreeModule{next.size(), shifts});
    c.maps.push_back(std::move(dk));
  }
  c = prune(std::move(c), ctx);
  verify(c, ctx, ctx.n());
  return c;
}

int pd(const Ideal& ideal) { return static_cast<int>(free_resolution(ideal).length()); }

int depth_quotient(const Ideal& ideal) {
  return static_cast<int>(ideal.ring().n()) - pd(ideal);
}

namespace {

Matrix drop(const Matrix& m, std::size_t row, std::size_t col) {
  // row/col == SIZE_MAX means keep all
  Matrix out = Matrix::zero(m.rows - (row < m.rows ? 1 : 0), m.cols - (col < m.cols ? 1 : 0));
  for (std::size_t i = 0, oi = 0; i < m.rows; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols; ++j) {
      if (j == col) continue;
      out.at(oi, oj++) = m.at(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace

FreeComplex prune(FreeComplex c, const RingCtx& ctx) {
  constexpr std::size_t kKeep = static_cast<std::size_t>(-1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 1; k <= c.length() && !changed; ++k) {
      Matrix& dk = c.maps[k - 1];
      for (std::size_t i = 0; i < dk.rows && !changed; ++i)
        for (std::size_t j = 0; j < dk.cols && !changed; ++j) {
          const Polynomial& u = dk.at(i, j);
          if (u.is_zero() || !u.is_constant()) continue;
          // Split off R e_j -> R f_i.
          Coeff inv = ctx.inv(u.leading().coef);
          Matrix nd = Matrix::zero(dk.rows, dk.cols);
          for (std::size_t a = 0; a < dk.rows; ++a)
            for (std::size_t b = 0; b < dk.cols; ++b) {
              Polynomial corr = poly_mul(dk.at(a, j), dk.at(i, b), ctx);
              nd.at(a, b) = sub(dk.at(a, b), scale(corr, inv, ctx), ctx);
            }
          Matrix reduced = drop(nd, i, j);
          if (k >= 2) c.maps[k - 2] = drop(c.maps[k - 2], kKeep, i);
          if (k < c.length()) c.maps[k] = drop(c.maps[k], j, kKeep);
          c.maps[k - 1] = std::move(reduced);
          c.modules[k - 1].shifts.erase(c.modules[k - 1].shifts.begin() + static_cast<long>(i));
          c.modules[k - 1].rank -= 1;
          c.modules[k].shifts.erase(c.modules[k].shifts.begin() + static_cast<long>(j));
          c.modules[k].rank -= 1;
          changed = true;
        }
    }
    // trailing zero modules disappear
    while (!c.maps.empty() && c.modules.back().rank == 0) {
      c.maps.pop_back();
      c.modules.pop_back();
    }
  }
  return c;
}

std::vector<long long> hilbert_numerator(const FreeComplex& c) {
  if (!c.homogeneous) throw Error(ErrorKind::NotHomogeneous, "complex is not graded");
  std::vector<long long> coeffs;
  for (std::size_t k = 0; k < c.modules.size(); ++k) {
    long long sign = (k % 2 == 0) ? 1 : -1;
    for (int s : c.modules[k].shifts) {
      if (s < 0) throw Error(ErrorKind::InvalidArgument, "negative shift in Hilbert numerator");
      if (coeffs.size() <= static_cast<std::size_t>(s)) coeffs.resize(s + 1, 0);
      coeffs[s] += sign;
    }
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace frobdepth
