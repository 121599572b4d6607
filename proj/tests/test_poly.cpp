// Copyright The nilhecke Authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nilhecke/poly.hpp"

using namespace nilhecke;

namespace {

RootDatum build(const std::string& s) { return RootDatum(parse_type_spec(s)); }

OPoly random_poly(const RootDatum& d, std::mt19937& rng, int maxdeg) {
  std::uniform_int_distribution<int> deg(0, maxdeg);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> var(0, d.rank() - 1);
  OPoly p(d.rank());
  int nterms = 1 + static_cast<int>(rng() % 5);
  for (int t = 0; t < nterms; ++t) {
    Expo e(static_cast<std::size_t>(d.rank()), 0);
    int dd = deg(rng);
    for (int k = 0; k < dd; ++k) e[static_cast<std::size_t>(var(rng))] += 1;
    int c = coef(rng);
    if (c != 0) p.add_term(e, RingElem::from_int(d.ring(), c));
  }
  return p;
}

}  // namespace

TEST_CASE("W-action on polynomials") {
  auto a2 = build("A2");
  std::mt19937 rng(11);
  OPoly p = random_poly(a2, rng, 3);
  CHECK(act(a2, WeylElement::identity(a2), p) == p);

  OPoly alpha1 = simple_root_poly(a2, 0);
  OPoly alpha2 = simple_root_poly(a2, 1);
  CHECK(act(a2, WeylElement::simple(a2, 0), alpha2) == alpha1 + alpha2);
  for (int i = 0; i < 2; ++i)
    CHECK(act(a2, WeylElement::simple(a2, i), simple_root_poly(a2, i)) == -simple_root_poly(a2, i));
}

TEST_CASE("divided differences") {
  auto a2 = build("A2");
  OPoly a1 = simple_root_poly(a2, 0);
  OPoly a2p = simple_root_poly(a2, 1);

  SECTION("on linear forms ddx gives the coroot pairing") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (const char* t : {"A2", "B2", "I2(5):normalized"}) {
      RootDatum d = build(t);
      for (int trial = 0; trial < 50; ++trial) {
        RVec lam;
        OPoly lp(d.rank());
        for (int j = 0; j < d.rank(); ++j) {
          int c = coef(rng);
          lam.push_back(RingElem::from_int(d.ring(), c));
          if (c != 0) {
            Expo e(static_cast<std::size_t>(d.rank()), 0);
            e[static_cast<std::size_t>(j)] = 1;
            lp.add_term(e, RingElem::from_int(d.ring(), c));
          }
        }
        for (int i = 0; i < d.rank(); ++i) {
          OPoly expect = OPoly::constant(d.rank(), d.pair_simple(i, lam));
          REQUIRE(ddx(d, i, lp) == expect);
        }
      }
    }
  }

  CHECK(ddx(a2, 0, a2p * (a1 + a2p)).is_zero());  // s1-invariant product
  CHECK(ddx(a2, 0, a1 * a2p) == a1 + a2p.scaled(RingElem::from_int(a2.ring(), 2)));

  CHECK(ddy(a2, 0, a1) == OPoly::constant(2, RingElem::from_int(a2.ring(), -2)));
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    OPoly p = random_poly(a2, rng, 4);
    CHECK(ddy(a2, 0, p) == -ddx(a2, 0, p));
  }

  SECTION("degree drops by one on homogeneous input") {
    OPoly p = a1 * a1 * a2p;
    OPoly q = ddx(a2, 1, p);
    CHECK(q.is_homogeneous(2));
  }

  SECTION("nonzero remainder aborts") {
    // dividing alpha_2^2 by alpha_1 has a remainder
    QVec form = simple_root_form(a2, 0);
    CHECK_THROWS_AS(divide_by_linear(to_field(a2p * a2p), form), invariant_error);
  }
}

TEST_CASE("divided-difference operator identities") {
  std::mt19937 rng(99);
  for (const char* t : {"A2", "B2", "G2", "I2(5):normalized"}) {
    RootDatum d = build(t);

    SECTION(std::string("twisted Leibniz in ") + t) {
      for (int trial = 0; trial < 500; ++trial) {
        int i = static_cast<int>(rng() % static_cast<unsigned>(d.rank()));
        OPoly p = random_poly(d, rng, 3), q = random_poly(d, rng, 3);
        OPoly lhs = ddx(d, i, p * q);
        OPoly rhs = ddx(d, i, p) * q + act(d, WeylElement::simple(d, i), p) * ddx(d, i, q);
        REQUIRE(lhs == rhs);
      }
    }

    SECTION(std::string("nilpotence in ") + t) {
      for (int trial = 0; trial < 100; ++trial) {
        int i = static_cast<int>(rng() % static_cast<unsigned>(d.rank()));
        OPoly p = random_poly(d, rng, 4);
        REQUIRE(ddx(d, i, ddx(d, i, p)).is_zero());
      }
    }

    SECTION(std::string("braid relation in ") + t) {
      int m = d.coxeter_exponent(0, 1);
      for (int trial = 0; trial < 25; ++trial) {
        OPoly p = random_poly(d, rng, 4);
        OPoly lhs = p, rhs = p;
        int gens[2] = {0, 1};
        for (int k = 0; k < m; ++k) {
          lhs = ddx(d, gens[k % 2], lhs);
          rhs = ddx(d, gens[(k + 1) % 2], rhs);
        }
        REQUIRE(lhs == rhs);
      }
    }

    SECTION(std::string("ddx vanishes exactly on s_i-invariants in ") + t) {
      for (int trial = 0; trial < 100; ++trial) {
        int i = static_cast<int>(rng() % static_cast<unsigned>(d.rank()));
        OPoly p = random_poly(d, rng, 3);
        bool invariant = (act(d, WeylElement::simple(d, i), p) == p);
        REQUIRE(ddx(d, i, p).is_zero() == invariant);
      }
    }
  }
}

TEST_CASE("augmentation") {
  auto a2 = build("A2");
  RingElem one = RingElem::from_int(a2.ring(), 1);
  RingElem three = RingElem::from_int(a2.ring(), 3);
  CHECK(augment(OPoly::constant(2, one), RingElem::zero(a2.ring())) == one);
  OPoly p = simple_root_poly(a2, 0) + OPoly::constant(2, three);
  CHECK(augment(p, RingElem::zero(a2.ring())) == three);
}

TEST_CASE("text rendering") {
  // terms print in descending degrevlex order, coefficient 1 omitted
  auto R = integer_ring();
  OPoly p(8);
  auto term = [&](std::initializer_list<int> vars, int c) {
    Expo e(8, 0);
    for (int v : vars) e[static_cast<std::size_t>(v)] += 1;
    p.add_term(e, RingElem::from_int(R, c));
  };
  term({1, 2}, 1);
  term({2, 2}, 1);
  term({1, 3}, 1);
  term({2, 3}, 2);
  term({3, 3}, 1);
  CHECK(poly_to_string_sage(p) == "a1*a2 + a2^2 + a1*a3 + 2*a2*a3 + a3^2");
  CHECK(poly_to_string(p) == "a2*a3 + a3^2 + a2*a4 + 2*a3*a4 + a4^2");

  OPoly z(3);
  CHECK(poly_to_string(z) == "0");
  OPoly c = OPoly::constant(3, RingElem::from_int(R, 2));
  CHECK(poly_to_string(c) == "2");
  OPoly neg(2);
  neg.add_term({1, 0}, RingElem::from_int(R, -1));
  neg.add_term({0, 1}, RingElem::from_int(R, 3));
  CHECK(poly_to_string(neg) == "-a1 + 3*a2");

  // algebraic coefficients parenthesize sums
  auto i5 = build("I2(5):normalized");
  OPoly q(2);
  q.add_term({1, 0}, RingElem::tau(i5.ring()) + RingElem::from_int(i5.ring(), 1));
  CHECK(poly_to_string(q) == "(tau + 1)*a1");
}
