// Copyright The nilhecke Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Finite Coxeter group combinatorics.  Elements act on lattice coordinates
// by exact matrices, which is the one representation that works uniformly
// for non-crystallographic data.  A GroupTable enumerates the whole group;
// most word-level operations also work without one, so large groups (type
// A8 say) can be used without enumerating them.

#pragma once

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nilhecke/rootdata.hpp"

namespace nilhecke {

using Word = std::vector<int>;  // 0-based generator indices internally

class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(const RootDatum& d) {
    WeylElement e;
    e.mat_ = detail::rmat_identity(d.ring(), d.rank());
    e.inv_ = e.mat_;
    e.len_ = 0;
    return e;
  }
  static WeylElement simple(const RootDatum& d, int i) {
    WeylElement e;
    e.mat_ = d.simple_reflection(i);
    e.inv_ = e.mat_;
    e.len_ = 1;
    return e;
  }
  static WeylElement from_word(const RootDatum& d, const Word& w) {
    WeylElement e = identity(d);
    for (int i : w) e = mul(d, e, simple(d, i));
    return e;
  }

  const RMat& matrix() const { return mat_; }
  const RMat& inverse_matrix() const { return inv_; }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }

  WeylElement inverse() const {
    WeylElement e;
    e.mat_ = inv_;
    e.inv_ = mat_;
    e.len_ = len_;
    return e;
  }

  static WeylElement mul(const RootDatum& d, const WeylElement& a, const WeylElement& b) {
    WeylElement e;
    e.mat_ = detail::rmat_mul(a.mat_, b.mat_);
    e.inv_ = detail::rmat_mul(b.inv_, a.inv_);
    e.len_ = count_inversions(d, e.mat_);
    return e;
  }

  RVec apply(const RVec& v) const { return detail::rmat_apply(mat_, v); }
  QVec apply(const QVec& v) const { return detail::qmat_apply(mat_, v); }
  RVec apply_inverse(const RVec& v) const { return detail::rmat_apply(inv_, v); }
  QVec apply_inverse(const QVec& v) const { return detail::qmat_apply(inv_, v); }

  // s_i is a right descent iff w(alpha_i) is negative.
  bool right_descent(const RootDatum& d, int i) const {
    return root_is_negative(d, detail::rmat_apply(mat_, d.simple_root(i)));
  }
  // s_i is a left descent iff w^{-1}(alpha_i) is negative.
  bool left_descent(const RootDatum& d, int i) const {
    return root_is_negative(d, detail::rmat_apply(inv_, d.simple_root(i)));
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.mat_ == b.mat_; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.mat_ < b.mat_; }

  static int count_inversions(const RootDatum& d, const RMat& m) {
    int cnt = 0;
    for (int ri : d.positive_roots()) {
      RVec img = detail::rmat_apply(m, d.roots()[static_cast<std::size_t>(ri)].coords);
      int idx = d.root_index(img);
      if (idx < 0) throw invariant_error("Weyl element does not permute the roots");
      if (!d.roots()[static_cast<std::size_t>(idx)].positive) ++cnt;
    }
    return cnt;
  }

  static bool root_is_negative(const RootDatum& d, const RVec& v) {
    int idx = d.root_index(v);
    if (idx < 0) throw invariant_error("vector is not a root");
    return !d.roots()[static_cast<std::size_t>(idx)].positive;
  }

 private:
  RMat mat_, inv_;
  int len_ = 0;
};

// Lexicographically least reduced word and descent-based word machinery
// without a full group table.
inline std::set<int> right_descents(const RootDatum& d, const WeylElement& w) {
  std::set<int> out;
  for (int i = 0; i < d.rank(); ++i)
    if (w.right_descent(d, i)) out.insert(i);
  return out;
}
inline std::set<int> left_descents(const RootDatum& d, const WeylElement& w) {
  std::set<int> out;
  for (int i = 0; i < d.rank(); ++i)
    if (w.left_descent(d, i)) out.insert(i);
  return out;
}

// Canonical (lexicographically least) reduced word, peeling least left
// descents.
inline Word canonical_word(const RootDatum& d, WeylElement w) {
  Word out;
  while (!w.is_identity()) {
    for (int i = 0; i < d.rank(); ++i) {
      if (w.left_descent(d, i)) {
        out.push_back(i);
        w = WeylElement::mul(d, WeylElement::simple(d, i), w);
        break;
      }
    }
  }
  return out;
}

inline bool word_is_reduced(const RootDatum& d, const Word& w) {
  return WeylElement::from_word(d, w).length() == static_cast<int>(w.size());
}

// Every reduced word of w, via right-descent recursion.
inline void for_each_reduced_word(const RootDatum& d, const WeylElement& w,
                                  const std::function<void(const Word&)>& fn) {
  Word buf(static_cast<std::size_t>(w.length()));
  std::function<void(const WeylElement&, int)> rec = [&](const WeylElement& x, int pos) {
    if (pos < 0) {
      fn(buf);
      return;
    }
    for (int i = 0; i < d.rank(); ++i) {
      if (x.right_descent(d, i)) {
        buf[static_cast<std::size_t>(pos)] = i;
        rec(WeylElement::mul(d, x, WeylElement::simple(d, i)), pos - 1);
      }
    }
  };
  rec(w, w.length() - 1);
}

inline std::vector<Word> all_reduced_words(const RootDatum& d, const WeylElement& w) {
  std::vector<Word> out;
  for_each_reduced_word(d, w, [&](const Word& v) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

// Complete multiplication table of a finite group, built by BFS over right
// multiplication with ascending generator order.  The first discovery of an
// element assigns its canonical word, which is then the lexicographically
// least reduced word.
class GroupTable {
 public:
  explicit GroupTable(const RootDatum& d, std::size_t cap = 200000) : datum_(&d) {
    const int n = d.rank();
    std::map<RMat, int> index;
    elements_.push_back(WeylElement::identity(d));
    words_.push_back({});
    index[elements_[0].matrix()] = 0;
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      WeylElement cur = elements_[head];
      for (int i = 0; i < n; ++i) {
        WeylElement nxt = WeylElement::mul(d, cur, WeylElement::simple(d, i));
        if (index.count(nxt.matrix())) continue;
        if (elements_.size() >= cap) throw ring_error("group order exceeds cap");
        index[nxt.matrix()] = static_cast<int>(elements_.size());
        Word w = words_[head];
        w.push_back(i);
        if (nxt.length() != static_cast<int>(w.size()))
          throw invariant_error("BFS word is not reduced");
        elements_.push_back(std::move(nxt));
        words_.push_back(std::move(w));
      }
    }
    index_ = std::move(index);
    const int N = size();
    right_.assign(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(n)));
    left_.assign(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(n)));
    inverse_.assign(static_cast<std::size_t>(N), 0);
    for (int x = 0; x < N; ++x) {
      for (int i = 0; i < n; ++i) {
        right_[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] =
            id_of(WeylElement::mul(d, elements_[static_cast<std::size_t>(x)], WeylElement::simple(d, i)));
        left_[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] =
            id_of(WeylElement::mul(d, WeylElement::simple(d, i), elements_[static_cast<std::size_t>(x)]));
      }
      inverse_[static_cast<std::size_t>(x)] = id_of(elements_[static_cast<std::size_t>(x)].inverse());
    }
    bruhat_.assign(static_cast<std::size_t>(N), {});
  }

  const RootDatum& datum() const { return *datum_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const WeylElement& element(int id) const { return elements_[static_cast<std::size_t>(id)]; }
  const Word& word(int id) const { return words_[static_cast<std::size_t>(id)]; }
  int length(int id) const { return elements_[static_cast<std::size_t>(id)].length(); }
  int id_of(const WeylElement& w) const {
    auto it = index_.find(w.matrix());
    if (it == index_.end()) throw invariant_error("element not in table");
    return it->second;
  }
  int right(int id, int i) const { return right_[static_cast<std::size_t>(id)][static_cast<std::size_t>(i)]; }
  int left(int id, int i) const { return left_[static_cast<std::size_t>(id)][static_cast<std::size_t>(i)]; }
  int inverse(int id) const { return inverse_[static_cast<std::size_t>(id)]; }
  int product(int a, int b) const {
    int out = a;
    for (int i : words_[static_cast<std::size_t>(b)]) out = right(out, i);
    return out;
  }

  bool right_descent(int id, int i) const { return length(right(id, i)) < length(id); }
  bool left_descent(int id, int i) const { return length(left(id, i)) < length(id); }
  std::set<int> descents(int id, bool leftside) const {
    std::set<int> out;
    for (int i = 0; i < datum_->rank(); ++i)
      if (leftside ? left_descent(id, i) : right_descent(id, i)) out.insert(i);
    return out;
  }

  int identity_id() const { return 0; }
  int longest_id() const {
    int best = 0;
    for (int x = 0; x < size(); ++x)
      if (length(x) > length(best)) best = x;
    return best;
  }

  // Bruhat interval [e, w] as membership flags, via the subword property:
  // run over the canonical word of w keeping all elements reachable as
  // reduced subword products.
  const std::vector<char>& bruhat_interval(int w) const {
    auto& cache = bruhat_[static_cast<std::size_t>(w)];
    if (!cache.empty()) return cache;
    std::vector<char> in(static_cast<std::size_t>(size()), 0);
    in[0] = 1;
    for (int i : words_[static_cast<std::size_t>(w)]) {
      std::vector<char> nxt = in;
      for (int x = 0; x < size(); ++x) {
        if (!in[static_cast<std::size_t>(x)]) continue;
        int y = right(x, i);
        if (length(y) > length(x)) nxt[static_cast<std::size_t>(y)] = 1;
      }
      in = std::move(nxt);
    }
    cache = std::move(in);
    return cache;
  }

  bool bruhat_leq(int u, int w) const { return bruhat_interval(w)[static_cast<std::size_t>(u)] != 0; }

  // Literal greedy subword check used as a cross-validation oracle: try each
  // reduced word of u as a subsequence of the canonical word of w.
  bool bruhat_leq_greedy(int u, int w) const {
    const Word& big = words_[static_cast<std::size_t>(w)];
    bool found = false;
    for_each_reduced_word(*datum_, element(u), [&](const Word& small) {
      if (found) return;
      std::size_t pos = 0;
      for (std::size_t k = 0; k < big.size() && pos < small.size(); ++k)
        if (big[k] == small[pos]) ++pos;
      if (pos == small.size()) found = true;
    });
    return found;
  }

  // Inversion set of w: positive roots sent negative by w^{-1}.
  std::vector<int> inversion_set(int id) const {
    std::vector<int> out;
    const auto& d = *datum_;
    for (int ri : d.positive_roots()) {
      RVec img = element(id).apply_inverse(d.roots()[static_cast<std::size_t>(ri)].coords);
      int k = d.root_index(img);
      if (!d.roots()[static_cast<std::size_t>(k)].positive) out.push_back(ri);
    }
    return out;
  }

  // Minimal length coset representatives for W_J.
  std::vector<int> minimal_coset_reps(const std::set<int>& J) const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x) {
      bool ok = true;
      for (int j : J)
        if (right_descent(x, j)) { ok = false; break; }
      if (ok) out.push_back(x);
    }
    return out;
  }

  // Order of the parabolic subgroup W_J.
  int parabolic_order(const std::set<int>& J) const {
    std::set<int> seen{0};
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int j : J) {
        int y = right(x, j);
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
    return static_cast<int>(seen.size());
  }

  // Longest element of W_J.
  int longest_in_parabolic(const std::set<int>& J) const {
    int cur = 0;
    for (;;) {
      bool moved = false;
      for (int j : J) {
        int y = right(cur, j);
        if (length(y) > length(cur)) { cur = y; moved = true; break; }
      }
      if (!moved) return cur;
    }
  }

 private:
  const RootDatum* datum_;
  std::vector<WeylElement> elements_;
  std::vector<Word> words_;
  std::map<RMat, int> index_;
  std::vector<std::vector<int>> right_, left_;
  std::vector<int> inverse_;
  mutable std::vector<std::vector<char>> bruhat_;
};

// 1-based rendering for CLI/JSON surfaces.
inline std::string word_to_string(const Word& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k] + 1);
  return s + "]";
}

}  // namespace nilhecke
