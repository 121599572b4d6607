// Copyright The nilhecke Authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "nilhecke/weyl.hpp"

using namespace nilhecke;

namespace {
RootDatum build(const std::string& s) { return RootDatum(parse_type_spec(s)); }

// brute force: some reduced word of w contains some reduced word of u as a
// subword
bool bruhat_brute(const GroupTable& T, int u, int w) {
  bool found = false;
  auto words_u = all_reduced_words(T.datum(), T.element(u));
  for_each_reduced_word(T.datum(), T.element(w), [&](const Word& big) {
    if (found) return;
    for (const auto& small : words_u) {
      std::size_t pos = 0;
      for (std::size_t k = 0; k < big.size() && pos < small.size(); ++k)
        if (big[k] == small[pos]) ++pos;
      if (pos == small.size()) { found = true; return; }
    }
  });
  return found;
}
}  // namespace

TEST_CASE("group generation") {
  auto a3 = build("A3");
  GroupTable T(a3);
  CHECK(T.size() == 24);  // symmetric group S4

  auto i5 = build("I2(5):normalized");
  CHECK(GroupTable(i5).size() == 10);  // dihedral, order 2m

  auto g2 = build("G2");
  CHECK(GroupTable(g2).size() == 12);

  auto h3 = build("H3");
  CHECK(GroupTable(h3).size() == 120);

  SECTION("cap is enforced") {
    auto b2 = build("B2");
    CHECK_THROWS_AS(GroupTable(b2, 3), ring_error);
  }

  SECTION("canonical words are lexicographically least reduced words") {
    auto a2 = build("A2");
    GroupTable T2(a2);
    int w0 = T2.longest_id();
    CHECK(T2.word(w0) == Word{0, 1, 0});
    for (int x = 0; x < T2.size(); ++x) {
      auto words = all_reduced_words(a2, T2.element(x));
      CHECK(T2.word(x) == words.front());
    }
  }
}

TEST_CASE("reduced words") {
  auto a2 = build("A2");
  GroupTable T(a2);
  CHECK(all_reduced_words(a2, T.element(0)) == std::vector<Word>{{}});
  int w0 = T.longest_id();
  auto w0words = all_reduced_words(a2, T.element(w0));
  CHECK(w0words == std::vector<Word>{{0, 1, 0}, {1, 0, 1}});

  auto a3 = build("A3");
  GroupTable T3(a3);
  auto words = all_reduced_words(a3, T3.element(T3.longest_id()));
  CHECK(words.size() == 16);

  SECTION("cross-check against all 6-letter words") {
    int count = 0;
    int w0id = T3.longest_id();
    Word w(6);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == 6) {
        WeylElement e = WeylElement::from_word(a3, w);
        if (e.length() == 6 && T3.id_of(e) == w0id) ++count;
        return;
      }
      for (int i = 0; i < 3; ++i) {
        w[static_cast<std::size_t>(pos)] = i;
        rec(pos + 1);
      }
    };
    rec(0);
    CHECK(count == 16);
  }
}

TEST_CASE("descents") {
  auto a2 = build("A2");
  GroupTable T(a2);
  CHECK(T.descents(0, true).empty());
  CHECK(T.descents(0, false).empty());
  int w = T.id_of(WeylElement::from_word(a2, {0, 1}));  // s1 s2
  CHECK(T.descents(w, true) == std::set<int>{0});
  CHECK(T.descents(w, false) == std::set<int>{1});
  int w0 = T.longest_id();
  CHECK(T.descents(w0, true) == std::set<int>{0, 1});
  CHECK(T.descents(w0, false) == std::set<int>{0, 1});
}

TEST_CASE("Bruhat order") {
  auto a2 = build("A2");
  GroupTable T(a2);
  int s1 = T.id_of(WeylElement::simple(a2, 0));
  int s2 = T.id_of(WeylElement::simple(a2, 1));
  int s2s1 = T.id_of(WeylElement::from_word(a2, {1, 0}));
  for (int x = 0; x < T.size(); ++x) {
    CHECK(T.bruhat_leq(0, x));
    CHECK(T.bruhat_leq(x, x));
  }
  CHECK(T.bruhat_leq(s1, s2s1));
  CHECK_FALSE(T.bruhat_leq(s2, s1));

  SECTION("production order matches the greedy and brute-force subword checks") {
    for (const char* t : {"A3", "B2"}) {
      RootDatum d = build(t);
      GroupTable G(d);
      for (int u = 0; u < G.size(); ++u)
        for (int w = 0; w < G.size(); ++w) {
          bool fast = G.bruhat_leq(u, w);
          REQUIRE(fast == G.bruhat_leq_greedy(u, w));
          REQUIRE(fast == bruhat_brute(G, u, w));
        }
    }
  }
}

TEST_CASE("inversion sets") {
  auto a2 = build("A2");
  GroupTable T(a2);
  CHECK(T.inversion_set(0).empty());
  int s1 = T.id_of(WeylElement::simple(a2, 0));
  auto inv1 = T.inversion_set(s1);
  REQUIRE(inv1.size() == 1);
  CHECK(a2.root_to_string(inv1[0]) == "a1");
  int s2s1 = T.id_of(WeylElement::from_word(a2, {1, 0}));
  std::set<std::string> inv;
  for (int ri : T.inversion_set(s2s1)) inv.insert(a2.root_to_string(ri));
  CHECK(inv == std::set<std::string>{"a2", "a1 + a2"});

  SECTION("|inv(w)| = l(w) everywhere") {
    for (const char* t : {"A3", "B2", "I2(5):normalized"}) {
      RootDatum d = build(t);
      GroupTable G(d);
      for (int x = 0; x < G.size(); ++x)
        REQUIRE(static_cast<int>(G.inversion_set(x).size()) == G.length(x));
    }
  }
}

TEST_CASE("length laws and the nil-Coxeter product law") {
  for (const char* t : {"A3", "B2"}) {
    RootDatum d = build(t);
    GroupTable G(d);
    for (int u = 0; u < G.size(); ++u) {
      for (int i = 0; i < d.rank(); ++i) {
        int diff = G.length(G.right(u, i)) - G.length(u);
        REQUIRE((diff == 1 || diff == -1));
      }
      for (int v = 0; v < G.size(); ++v) {
        int uv = G.product(u, v);
        REQUIRE(G.length(uv) <= G.length(u) + G.length(v));
        if (G.length(uv) == G.length(u) + G.length(v)) {
          Word cat = G.word(u);
          cat.insert(cat.end(), G.word(v).begin(), G.word(v).end());
          REQUIRE(word_is_reduced(d, cat));
        }
      }
    }
  }
}

TEST_CASE("minimal coset representatives") {
  auto a2 = build("A2");
  GroupTable T(a2);
  CHECK(T.minimal_coset_reps({}).size() == 6);
  CHECK(T.minimal_coset_reps({0, 1}) == std::vector<int>{0});
  auto reps = T.minimal_coset_reps({1});
  std::set<Word> got;
  for (int x : reps) got.insert(T.word(x));
  CHECK(got == std::set<Word>{{}, {0}, {1, 0}});

  SECTION("|W^J| * |W_J| = |W| for every J in A3") {
    auto a3 = build("A3");
    GroupTable G(a3);
    for (int mask = 0; mask < 8; ++mask) {
      std::set<int> J;
      for (int i = 0; i < 3; ++i)
        if (mask & (1 << i)) J.insert(i);
      REQUIRE(static_cast<int>(G.minimal_coset_reps(J).size()) * G.parabolic_order(J) == G.size());
    }
  }
}
