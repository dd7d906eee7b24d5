#include <algorithm>
#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace frobdepth;
using frobdepth::testing::ideal;
using frobdepth::testing::P;

namespace {

RingCtx lex3() { return RingCtx(7, {"x", "y", "z"}, {OrderKind::Lex}); }
RingCtx lex2() { return RingCtx(7, {"x", "y"}, {OrderKind::Lex}); }

std::vector<std::string> strs(const std::vector<Polynomial>& ps, const RingCtx& r) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p, r));
  return out;
}

}  // namespace

TEST_CASE("reduce") {
  auto r = lex3();
  std::vector<Polynomial> basis{P(r, "x^2 - z"), P(r, "y - 1")};
  CHECK(reduce(P(r, "x^2*y"), basis, r) == P(r, "z"));
  auto f = P(r, "x*y + z^3 - 2");
  CHECK(reduce(f, std::vector<Polynomial>{f}, r).is_zero());

  auto r2 = lex2();
  std::vector<Polynomial> gb{P(r2, "x - y^2"), P(r2, "y^3 - 1")};
  CHECK(reduce(P(r2, "x"), gb, r2) == P(r2, "y^2"));
}

TEST_CASE("buchberger") {
  VerificationScope verify;
  auto r = lex2();
  auto I = ideal(r, {"x^2 - y", "x*y - 1"});
  CHECK(strs(buchberger(I), r) == std::vector<std::string>{"x - y^2", "y^3 - 1"});

  auto J = ideal(r, {"x", "y"});
  CHECK(strs(buchberger(J), r) == std::vector<std::string>{"x", "y"});

  Ideal zero(r, {Polynomial{}});
  CHECK(zero.is_zero());
  CHECK(buchberger(zero).empty());
}

TEST_CASE("membership") {
  auto r = lex2();
  auto I = ideal(r, {"x^2 - y", "x*y - 1"});
  CHECK_FALSE(membership(P(r, "x"), I));
  CHECK(membership(P(r, "x^2 - y"), I));
  CHECK(membership(Polynomial{}, I));
  CHECK(membership(P(r, "y^3 - 1"), I));
}

TEST_CASE("ideal_equal") {
  RingCtx r(5, {"x", "y"});
  CHECK(ideal_equal(ideal(r, {"x^2", "x*y"}), ideal(r, {"x*x", "x*y"})));
  CHECK_FALSE(ideal_equal(ideal(r, {"x"}), ideal(r, {"x^2"})));
  CHECK(ideal_equal(ideal(r, {"x+y", "y"}), ideal(r, {"x", "y"})));
}

TEST_CASE("lift with certificate") {
  VerificationScope verify;
  RingCtx r(3, {"x", "y", "z"});
  auto I = ideal(r, {"x^2", "x*y", "y*z - x*z"});
  auto f = P(r, "x^3*z + x*y^2*z - x^2*z^2 + y^2*z^3 - x*y*z^3");
  // membership first; then the certificate reproduces f.
  REQUIRE(membership(f, I));
  auto c = lift(f, I);
  REQUIRE(c.has_value());
  Polynomial acc;
  for (std::size_t i = 0; i < I.gens().size(); ++i)
    acc = add(acc, poly_mul((*c)[i], I.gens()[i], r), r);
  CHECK(acc == f);
  CHECK_FALSE(lift(P(r, "z^2"), I).has_value());
}

TEST_CASE("syzygies") {
  VerificationScope verify;
  RingCtx r(7, {"x", "y"});
  auto s = syzygies(ideal(r, {"x^2", "x*y"}));
  REQUIRE(s.gens().size() == 1);
  const auto& v = s.gens()[0];
  bool matches = (v[0] == P(r, "y") && v[1] == P(r, "-x")) ||
                 (v[0] == P(r, "-y") && v[1] == P(r, "x"));
  CHECK(matches);
  CHECK(s.shifts() == std::vector<int>{2, 2});

  auto k = syzygies(ideal(r, {"x", "y"}));
  REQUIRE(k.gens().size() == 1);
  CHECK(Submodule(r, 2, {VectorPoly{P(r, "y"), P(r, "-x")}}).contains(k));

  auto u = syzygies(ideal(r, {"1"}));
  CHECK(u.is_zero());
}

TEST_CASE("module syzygies annihilate generators") {
  VerificationScope verify;
  RingCtx r(3, {"x", "y", "z"});
  std::vector<VectorPoly> gens{{P(r, "x"), P(r, "y")}, {P(r, "y"), P(r, "z")},
                               {P(r, "x^2"), P(r, "x*y")}, {P(r, "z^2"), P(r, "x*z")}};
  Submodule m(r, 2, gens);
  auto s = syzygies(m);
  CHECK_FALSE(s.is_zero());
  for (const auto& sv : s.gens()) {
    VectorPoly acc(2);
    for (std::size_t i = 0; i < gens.size(); ++i)
      acc = vec_add(acc, vec_scale(gens[i], sv[i], r), r);
    CHECK(vec_is_zero(acc));
  }
  // (x, -1, ...) relation: x*g0 - g2 = 0, must be in the syzygy module
  CHECK(m.syzygy_module().contains(VectorPoly{P(r, "x"), Polynomial{}, P(r, "-1"), Polynomial{}}));
}

TEST_CASE("eliminate") {
  VerificationScope verify;
  RingCtx r(7, {"t", "x", "y"});
  std::vector<std::size_t> drop{0};
  auto E = eliminate(ideal(r, {"x - t^2", "y - t^3"}), drop);
  REQUIRE(E.ring().n() == 2);
  CHECK(ideal_equal(E, ideal(E.ring(), {"y^2 - x^3"})));

  auto E2 = eliminate(ideal(r, {"x - t"}), drop);
  CHECK(E2.is_zero());

  auto E3 = eliminate(ideal(r, {"t", "x"}), drop);
  CHECK(ideal_equal(E3, ideal(E3.ring(), {"x"})));
}

TEST_CASE("dim_quotient and height") {
  RingCtx r4(2, {"x", "y", "z", "w"});
  auto two_planes = ideal(r4, {"x*z", "x*w", "y*z", "y*w"});
  CHECK(dim_quotient(two_planes) == 2);
  CHECK(height(two_planes) == 2);

  RingCtx r2(2, {"x", "y"});
  CHECK(dim_quotient(ideal(r2, {"x^2", "x*y"})) == 1);
  CHECK(dim_quotient(Ideal(r4, {})) == 4);
  CHECK(height(ideal(r2, {"x"})) == 1);
  CHECK(height(ideal(r2, {"x", "y"})) == 2);
  CHECK(dim_quotient(ideal(r2, {"x + 1", "x"})) == -1);
  CHECK_THROWS_AS(height(ideal(r2, {"1"})), Error);
}

TEST_CASE("radical_monomial") {
  RingCtx r(2, {"x", "y", "z"});
  CHECK(ideal_equal(radical_monomial(ideal(r, {"x^2", "x*y"})), ideal(r, {"x"})));
  CHECK(ideal_equal(radical_monomial(ideal(r, {"x^2*y^3"})), ideal(r, {"x*y"})));
  auto sq = ideal(r, {"x*y", "y*z"});
  CHECK(ideal_equal(radical_monomial(sq), sq));
  CHECK_THROWS_AS(radical_monomial(ideal(r, {"x + y"})), Error);
}

TEST_CASE("minimal_primes_monomial") {
  RingCtx r4(2, {"x", "y", "z", "w"});
  using Sets = std::vector<std::vector<std::size_t>>;
  CHECK(minimal_primes_monomial(ideal(r4, {"x*z", "x*w", "y*z", "y*w"})) == Sets{{0, 1}, {2, 3}});
  RingCtx r2(2, {"x", "y"});
  CHECK(minimal_primes_monomial(ideal(r2, {"x*y"})) == Sets{{0}, {1}});
  CHECK(minimal_primes_monomial(ideal(r2, {"x"})) == Sets{{0}});
  try {
    minimal_primes_monomial(ideal(r2, {"x^2"}));
    FAIL("expected NotSquarefree");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSquarefree);
  }
}

TEST_CASE("punctured_connected") {
  RingCtx r4(2, {"x", "y", "z", "w"});
  CHECK_FALSE(punctured_connected(ideal(r4, {"x*z", "x*w", "y*z", "y*w"})));
  RingCtx r3(2, {"x", "y", "z"});
  CHECK(punctured_connected(ideal(r3, {"x*y"})));
  CHECK(punctured_connected(ideal(r3, {"x", "y"})));
  try {
    punctured_connected(ideal(r3, {"x", "y", "z"}));
    FAIL("expected ZeroDimensional");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDimensional);
  }
}

TEST_CASE("Groebner properties on random ideals") {
  VerificationScope verify;  // every basis is certificate-checked
  std::mt19937 rng(2024);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    RingCtx r(p, {"x", "y", "z"});
    for (int it = 0; it < 40; ++it) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(frobdepth::testing::random_poly(r, rng, 3, 3));
      Ideal I(r, gens);
      const auto& gb = I.groebner_basis();
      for (int t = 0; t < 5; ++t) {
        auto f = frobdepth::testing::random_poly(r, rng, 4, 5);
        auto nf = reduce(f, gb, r);
        CHECK(reduce(nf, gb, r) == nf);
        CHECK(membership(sub(f, nf, r), I));
      }
      if (!I.is_unit()) CHECK(dim_quotient(I) + height(I) == 3);
      // reduced basis: no leading term divides another
      for (std::size_t a = 0; a < gb.size(); ++a)
        for (std::size_t b = 0; b < gb.size(); ++b)
          if (a != b) CHECK_FALSE(gb[a].leading().mono.divides(gb[b].leading().mono));
      auto s = syzygies(I);
      for (const auto& v : s.gens()) {
        Polynomial acc;
        for (std::size_t i = 0; i < I.gens().size(); ++i)
          acc = add(acc, poly_mul(v[i], I.gens()[i], r), r);
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("radical of random monomial ideals") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> ex(0, 3);
  RingCtx r(2, {"a", "b", "c", "d"});
  for (int it = 0; it < 100; ++it) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(Polynomial::monomial(
          r.monomial(std::vector<int>{ex(rng), ex(rng), ex(rng), ex(rng)}), r));
    Ideal I(r, gens);
    auto rad = radical_monomial(I);
    CHECK(ideal_equal(radical_monomial(rad), rad));
    for (const auto& g : I.gens()) CHECK(membership(g, rad));
  }
}
