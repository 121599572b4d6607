// Copyright The nilhecke Authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "nilhecke/rootdata.hpp"
#include "nilhecke/weyl.hpp"

using namespace nilhecke;

namespace {
RootDatum build(const std::string& s) { return RootDatum(parse_type_spec(s)); }

Int entry_int(const RingElem& c) {
  REQUIRE(c.ring()->degree() >= 1);
  for (std::size_t k = 1; k < c.coords().size(); ++k) REQUIRE(c.coords()[k] == 0);
  return c.coords()[0];
}
}  // namespace

TEST_CASE("Cartan matrices in Bourbaki labeling") {
  auto a2 = build("A2");
  CHECK(entry_int(a2.cartan()[0][0]) == 2);
  CHECK(entry_int(a2.cartan()[0][1]) == -1);
  CHECK(entry_int(a2.cartan()[1][0]) == -1);

  auto g2 = build("G2");
  CHECK(entry_int(g2.cartan()[0][1]) == -3);
  CHECK(entry_int(g2.cartan()[1][0]) == -1);

  auto b2 = build("B2");
  CHECK(entry_int(b2.cartan()[0][1]) == -2);
  CHECK(entry_int(b2.cartan()[1][0]) == -1);

  auto i5 = build("I2(5):normalized");
  RingElem tau = RingElem::tau(i5.ring());
  CHECK(i5.cartan()[0][1] == -tau);
  CHECK(i5.cartan()[1][0] == -tau);

  // polarized I2(8): c12 = -tau8^2 = -(2 + sqrt2), c21 = -1
  auto i8 = build("I2(8):polarized");
  RingElem s2 = RingElem::tau(i8.ring());  // sqrt(2)
  CHECK(i8.cartan()[0][1] == -(RingElem::from_int(i8.ring(), 2) + s2));
  CHECK(entry_int(i8.cartan()[1][0]) == -1);

  // H3 carries the m=5 bond on the (1,2) edge
  auto h3 = build("H3");
  CHECK(h3.cartan()[0][1] == -RingElem::tau(h3.ring()));
  CHECK(entry_int(h3.cartan()[1][2]) == -1);
  CHECK(entry_int(h3.cartan()[0][2]) == 0);

  CHECK_THROWS_AS(build("E9"), ring_error);
  CHECK_THROWS_AS(build("F3"), ring_error);
  CHECK_THROWS_AS(build("I2(5):polarized"), ring_error);
  CHECK_THROWS_AS(build("X4"), ring_error);
}

TEST_CASE("Coxeter exponents from Cartan entries") {
  auto a3 = build("A3");
  CHECK(a3.coxeter_exponent(0, 2) == 2);  // no edge
  CHECK(a3.coxeter_exponent(0, 1) == 3);
  auto b2 = build("B2");
  CHECK(b2.coxeter_exponent(0, 1) == 4);
  auto g2 = build("G2");
  CHECK(g2.coxeter_exponent(0, 1) == 6);  // triple edge
  auto i8 = build("I2(8):polarized");
  CHECK(i8.coxeter_exponent(0, 1) == 8);  // 4cos^2(pi/8) = 2 + sqrt2
  auto i7 = build("I2(7):normalized");
  CHECK(i7.coxeter_exponent(0, 1) == 7);
  auto h3 = build("H3");
  CHECK(h3.coxeter_exponent(0, 1) == 5);
  CHECK(h3.coxeter_exponent(1, 2) == 3);
}

TEST_CASE("root systems") {
  auto a2 = build("A2");
  CHECK(a2.roots().size() == 6);
  CHECK(a2.num_positive() == 3);

  auto b2 = build("B2");
  CHECK(b2.roots().size() == 8);
  // positives: a1, a2, a1+a2, a1+2a2
  std::set<std::string> pos;
  for (int ri : b2.positive_roots()) pos.insert(b2.root_to_string(ri));
  CHECK(pos == std::set<std::string>{"a1", "a2", "a1 + a2", "a1 + 2*a2"});

  auto i5 = build("I2(5):normalized");
  CHECK(i5.roots().size() == 10);  // |Phi| = 2m for dihedral types

  auto h3 = build("H3");
  CHECK(h3.roots().size() == 30);

  SECTION("reflections permute the roots; orbit records are faithful") {
    for (const char* t : {"A2", "B2", "G2", "I2(5):normalized", "H3"}) {
      RootDatum d = build(t);
      for (std::size_t r = 0; r < d.roots().size(); ++r) {
        // recorded word applied to the base simple root reproduces the root
        RVec v = d.simple_root(d.roots()[r].base);
        const auto& word = d.roots()[r].word;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
          v = detail::rmat_apply(d.simple_reflection(*it), v);
        CHECK(v == d.roots()[r].coords);
        // s_alpha maps the root set to itself
        RMat refl = d.reflection(static_cast<int>(r));
        for (const auto& other : d.roots())
          CHECK(d.root_index(detail::rmat_apply(refl, other.coords)) >= 0);
      }
      // Phi = Phi+ disjoint-union -(Phi+)
      CHECK(d.roots().size() == 2 * d.positive_roots().size());
      for (int ri : d.positive_roots()) {
        RVec neg = d.roots()[static_cast<std::size_t>(ri)].coords;
        for (auto& c : neg) c = -c;
        int ni = d.root_index(neg);
        REQUIRE(ni >= 0);
        CHECK_FALSE(d.roots()[static_cast<std::size_t>(ni)].positive);
      }
    }
  }

  SECTION("s_alpha(lambda) = lambda - <alpha^vee, lambda> alpha on random vectors") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (const char* t : {"A2", "B2", "I2(5):normalized"}) {
      RootDatum d = build(t);
      for (int trial = 0; trial < 100; ++trial) {
        int ri = static_cast<int>(rng() % d.roots().size());
        RVec lam;
        for (int j = 0; j < d.rank(); ++j) lam.push_back(RingElem::from_int(d.ring(), coef(rng)));
        RVec lhs = detail::rmat_apply(d.reflection(ri), lam);
        RingElem pair = d.pairing(ri, lam);
        RVec rhs = lam;
        for (int j = 0; j < d.rank(); ++j)
          rhs[static_cast<std::size_t>(j)] -= pair * d.roots()[static_cast<std::size_t>(ri)].coords[static_cast<std::size_t>(j)];
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("pairings") {
  auto a2 = build("A2");
  for (int i = 0; i < 2; ++i)
    CHECK(entry_int(a2.pair_simple(i, a2.simple_root(i))) == 2);
  // alpha_i^vee(omega_j) = delta_ij
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      FieldElem v = a2.pair_simple(i, a2.fundamental_weight(j));
      CHECK(v == FieldElem::from_rat(a2.ring(), i == j ? 1 : 0));
    }
  // pairing(alpha_2, alpha_1) = c_12 = -1
  CHECK(entry_int(a2.pair_simple(1, a2.simple_root(0))) == -1);
}

TEST_CASE("fundamental weights and lattice index") {
  auto a2 = build("A2");
  // omega_1 = (2 a1 + a2)/3
  QVec w1 = a2.fundamental_weight(0);
  CHECK(w1[0] == FieldElem::from_rat(a2.ring(), Rat(2, 3)));
  CHECK(w1[1] == FieldElem::from_rat(a2.ring(), Rat(1, 3)));
  CHECK(a2.lattice_index() == 3);

  auto i5 = build("I2(5):normalized");
  CHECK(i5.lattice_index() == 5);

  auto b2 = build("B2");
  CHECK(b2.lattice_index() == 2);
}

TEST_CASE("weight-lattice data") {
  auto d = build("A2@weight");
  CHECK(d.lattice() == Lattice::Weight);
  // alpha_1 = 2 omega_1 - omega_2
  CHECK(entry_int(d.simple_root(0)[0]) == 2);
  CHECK(entry_int(d.simple_root(0)[1]) == -1);
  CHECK(d.roots().size() == 6);
  // omega_i is the i-th basis vector here
  CHECK(d.fundamental_weight(0)[0] == FieldElem::from_rat(d.ring(), 1));
  CHECK(d.fundamental_weight(0)[1] == FieldElem::from_rat(d.ring(), 0));
}

TEST_CASE("type spec parsing") {
  CHECK(parse_type_spec("A3").family == Family::A);
  CHECK(parse_type_spec("A3").rank == 3);
  CHECK(parse_type_spec("I2(7):normalized").m == 7);
  CHECK(parse_type_spec("I2(8):polarized").family == Family::I2Polarized);
  CHECK(parse_type_spec("H3@weight").lattice == Lattice::Weight);
  CHECK(parse_type_spec("B2@root").lattice == Lattice::Root);
  CHECK_THROWS_AS(parse_type_spec("I2[7]"), ring_error);
  CHECK_THROWS_AS(parse_type_spec("A2@spin"), ring_error);
}
