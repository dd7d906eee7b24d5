#include <algorithm>
#include <random>

#include "doctest.h"
#include "frobdepth/resolution.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace frobdepth;
using frobdepth::testing::ideal;
using frobdepth::testing::P;

namespace {

Polynomial random_monomial(const RingCtx& r, std::mt19937& rng, int max_exp) {
  std::uniform_int_distribution<int> ex(0, max_exp);
  std::vector<int> e(r.n());
  do {
    for (auto& x : e) x = ex(rng);
  } while (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }));
  return Polynomial::monomial(r.monomial(e), r);
}

std::vector<std::vector<int>> all_shifts(const FreeComplex& c) {
  std::vector<std::vector<int>> s;
  for (const auto& m : c.modules) {
    auto v = m.shifts;
    std::sort(v.begin(), v.end());
    s.push_back(v);
  }
  return s;
}

}  // namespace

TEST_CASE("Koszul complex of the maximal ideal") {
  VerificationScope verify;
  RingCtx r(3, {"x", "y", "z"});
  auto c = free_resolution(ideal(r, {"x", "y", "z"}));
  CHECK(c.betti() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(all_shifts(c) == std::vector<std::vector<int>>{{0}, {1, 1, 1}, {2, 2, 2}, {3}});
  CHECK(hilbert_numerator(c) == std::vector<long long>{1, -3, 3, -1});
  CHECK(pd(ideal(r, {"x", "y", "z"})) == 3);
  CHECK(depth_quotient(ideal(r, {"x", "y", "z"})) == 0);
}

TEST_CASE("embedded prime example") {
  VerificationScope verify;
  RingCtx r(2, {"x", "y"});
  auto I = ideal(r, {"x^2", "x*y"});
  auto c = free_resolution(I);
  CHECK(c.betti() == std::vector<std::size_t>{1, 2, 1});
  CHECK(all_shifts(c) == std::vector<std::vector<int>>{{0}, {2, 2}, {3}});
  CHECK(hilbert_numerator(c) == std::vector<long long>{1, 0, -2, 1});
  CHECK(depth_quotient(I) == 0);
  CHECK(dim_quotient(I) == 1);
}

TEST_CASE("two planes meeting in a point") {
  VerificationScope verify;
  RingCtx r(2, {"x", "y", "z", "w"});
  auto I = ideal(r, {"x*z", "x*w", "y*z", "y*w"});
  auto c = free_resolution(I);
  CHECK(c.betti() == std::vector<std::size_t>{1, 4, 4, 1});
  CHECK(depth_quotient(I) == 1);
  CHECK(hilbert_numerator(c) == oracle::hilbert_numerator(I));
}

TEST_CASE("twisted cubic is Cohen-Macaulay") {
  VerificationScope verify;
  RingCtx r(5, {"a", "b", "c", "d"});
  auto I = ideal(r, {"a*c - b^2", "b*d - c^2", "a*d - b*c"});
  auto c = free_resolution(I);
  CHECK(c.betti() == std::vector<std::size_t>{1, 3, 2});
  CHECK(all_shifts(c) == std::vector<std::vector<int>>{{0}, {2, 2, 2}, {3, 3}});
  CHECK(depth_quotient(I) == dim_quotient(I));
  CHECK(hilbert_numerator(c) == oracle::hilbert_numerator(I));
}

TEST_CASE("degenerate inputs") {
  RingCtx r(3, {"x", "y"});
  auto z = free_resolution(Ideal(r, {}));
  CHECK(z.betti() == std::vector<std::size_t>{1});
  CHECK(pd(Ideal(r, {})) == 0);
  try {
    free_resolution(ideal(r, {"x", "1"}));
    FAIL("expected UnitIdeal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnitIdeal);
  }
  try {
    free_resolution(ideal(r, {"x^2 - y"}));
    FAIL("expected NotHomogeneous");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHomogeneous);
  }
}

TEST_CASE("prune cancels unit entries") {
  RingCtx r(7, {"x", "y"});
  FreeComplex c;
  c.modules = {{1, {0}}, {2, {1, 1}}, {1, {1}}};
  Matrix d1 = Matrix::zero(1, 2);
  d1.at(0, 0) = P(r, "x");
  d1.at(0, 1) = P(r, "x");
  Matrix d2 = Matrix::zero(2, 1);
  d2.at(0, 0) = P(r, "1");
  d2.at(1, 0) = P(r, "-1");
  c.maps = {d1, d2};
  REQUIRE(c.is_complex(r));
  auto m = prune(c, r);
  CHECK(m.betti() == std::vector<std::size_t>{1, 1});
  CHECK(m.d(1).at(0, 0) == P(r, "x"));
  CHECK(m.is_minimal());
  CHECK(hilbert_numerator(m) == hilbert_numerator(c));
}

TEST_CASE("Hilbert numerator matches inclusion-exclusion on random monomial ideals") {
  VerificationScope verify;
  std::mt19937 rng(31);
  RingCtx r(2, {"a", "b", "c", "d"});
  for (int it = 0; it < 40; ++it) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(random_monomial(r, rng, 2));
    Ideal I(r, gens);
    auto c = free_resolution(I);
    CHECK(hilbert_numerator(c) == oracle::hilbert_numerator(I));
    CHECK(c.length() <= r.n());
  }
}

TEST_CASE("resolution of random homogeneous ideals") {
  VerificationScope verify;
  std::mt19937 rng(77);
  for (std::uint32_t p : {2u, 3u}) {
    RingCtx r(p, {"x", "y", "z"});
    for (int it = 0; it < 25; ++it) {
      std::vector<Polynomial> gens;
      std::uniform_int_distribution<int> deg(1, 3);
      for (int k = 0; k < 3; ++k) {
        int d = deg(rng);
        std::vector<Term> terms;
        for (int t = 0; t < 3; ++t) {
          std::vector<int> e(3, 0);
          std::uniform_int_distribution<int> var(0, 2);
          for (int s = 0; s < d; ++s) ++e[var(rng)];
          terms.push_back(Term{1, r.monomial(e)});
        }
        gens.push_back(Polynomial::from_terms(std::move(terms), r));
      }
      Ideal I(r, gens);
      if (I.is_zero()) continue;
      auto c = free_resolution(I);
      CHECK(hilbert_numerator(c) == oracle::hilbert_numerator(I));
      // permuted and padded generators give the same graded Betti numbers
      auto shuffled = I.gens();
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      shuffled.push_back(poly_mul(shuffled[0], P(r, "x + y"), r));
      shuffled.push_back(add(shuffled.back(), poly_mul(shuffled[0], P(r, "z"), r), r));
      auto c2 = free_resolution(Ideal(r, shuffled));
      CHECK(all_shifts(c2) == all_shifts(c));
    }
  }
}
