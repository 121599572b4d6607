// Copyright The nilhecke Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Multivariate polynomials in the lattice-basis variables over O_F or its
// fraction field, with the W-action and divided-difference operators.  Text
// rendering follows the a1..an convention with terms in descending
// degree-reverse-lexicographic order, so outputs diff cleanly against
// SageMath.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nilhecke/rootdata.hpp"
#include "nilhecke/weyl.hpp"

namespace nilhecke {

using Expo = std::vector<int>;

template <class K>
class Polynomial {
 public:
  using Terms = std::map<Expo, K>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, K c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Expo(static_cast<std::size_t>(nvars), 0), std::move(c));
    return p;
  }
  static Polynomial variable(int nvars, int j, const K& one) {
    Polynomial p(nvars);
    Expo e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(j)] = 1;
    p.terms_.emplace(std::move(e), one);
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  K constant_term(const K& zero) const {
    Expo e(static_cast<std::size_t>(nvars_), 0);
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
  }

  static int total_degree(const Expo& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  }

  int degree() const {  // -1 for the zero polynomial
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  bool is_homogeneous(int deg) const {
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != deg) return false;
    return true;
  }

  void add_term(const Expo& e, const K& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars_ ? a.nvars_ : b.nvars_);
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) {
        Expo e = e1;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const K& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

  // Substitute variable j by the given linear forms (columns of a matrix
  // acting on coordinates): x_j -> sum_i M[i][j] x_i.
  template <class ToK>
  Polynomial substitute_linear(const RMat& M, const ToK& conv) const {
    const int n = nvars_;
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      Polynomial img(n);
      for (int i = 0; i < n; ++i) {
        const RingElem& c = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        Expo e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        img.add_term(e, conv(c));
      }
      images.push_back(std::move(img));
    }
    Polynomial out(n);
    for (const auto& [e, c] : terms_) {
      Polynomial term = Polynomial::constant(n, c);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < e[static_cast<std::size_t>(j)]; ++k) term *= images[static_cast<std::size_t>(j)];
      out += term;
    }
    return out;
  }

  // degrevlex with a1 > a2 > ... > an, larger first.
  static bool degrevlex_less(const Expo& a, const Expo& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t k = a.size(); k-- > 0;) {
      if (a[k] != b[k]) return a[k] > b[k];  // smaller trailing exponent wins
    }
    return false;
  }

  std::string to_string(const std::function<std::string(const K&)>& coeff_str, int var_base = 1) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Expo, K>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
      return degrevlex_less(y->first, x->first);  // descending
    });
    std::string out;
    bool first = true;
    for (auto* t : order) {
      std::string mono;
      for (std::size_t j = 0; j < t->first.size(); ++j) {
        int e = t->first[j];
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "a" + std::to_string(static_cast<int>(j) + var_base);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      std::string c = coeff_str(t->second);
      std::string term;
      if (mono.empty()) term = c;
      else if (c == "1") term = mono;
      else if (c == "-1") term = "-" + mono;
      else term = c + "*" + mono;
      if (first) {
        out = term;
        first = false;
      } else if (!term.empty() && term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

 private:
  int nvars_ = 0;
  Terms terms_;
};

using OPoly = Polynomial<RingElem>;
using QPoly = Polynomial<FieldElem>;

inline QPoly to_field(const OPoly& p) {
  QPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, FieldElem(c));
  return out;
}

inline OPoly to_ring_checked(const QPoly& p, const char* where) {
  OPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    auto w = c.as_integral();
    if (!w) throw invariant_error(std::string(where) + ": non-integral coefficient " + c.to_string());
    out.add_term(e, *w);
  }
  return out;
}

// ---- W-action on polynomials --------------------------------------------

inline OPoly act(const RootDatum& d, const WeylElement& w, const OPoly& p) {
  (void)d;
  return p.substitute_linear(w.matrix(), [](const RingElem& c) { return c; });
}
inline QPoly act(const RootDatum& d, const WeylElement& w, const QPoly& p) {
  (void)d;
  return p.substitute_linear(w.matrix(), [](const RingElem& c) { return FieldElem(c); });
}

inline OPoly simple_root_poly(const RootDatum& d, int i) {
  OPoly p(d.rank());
  const RVec& a = d.simple_root(i);
  for (int j = 0; j < d.rank(); ++j) {
    if (a[static_cast<std::size_t>(j)].is_zero()) continue;
    Expo e(static_cast<std::size_t>(d.rank()), 0);
    e[static_cast<std::size_t>(j)] = 1;
    p.add_term(e, a[static_cast<std::size_t>(j)]);
  }
  return p;
}

inline OPoly root_poly(const RootDatum& d, int ri) {
  OPoly p(d.rank());
  const RVec& a = d.roots()[static_cast<std::size_t>(ri)].coords;
  for (int j = 0; j < d.rank(); ++j) {
    if (a[static_cast<std::size_t>(j)].is_zero()) continue;
    Expo e(static_cast<std::size_t>(d.rank()), 0);
    e[static_cast<std::size_t>(j)] = 1;
    p.add_term(e, a[static_cast<std::size_t>(j)]);
  }
  return p;
}

// Division by a linear form with the remainder returned; remainder empty
// means the division was exact.
inline std::pair<QPoly, QPoly> divmod_by_linear(const QPoly& num, const QVec& form) {
  const int n = num.nvars();
  int pivot = -1;
  for (int j = 0; j < n; ++j)
    if (!form[static_cast<std::size_t>(j)].is_zero()) { pivot = j; break; }
  if (pivot < 0) throw invariant_error("divmod_by_linear: zero form");
  if (num.is_zero()) return {QPoly(n), QPoly(n)};
  const FieldElem& c = form[static_cast<std::size_t>(pivot)];
  QPoly rest(n);
  for (int j = pivot + 1; j < n; ++j) {
    if (form[static_cast<std::size_t>(j)].is_zero()) continue;
    Expo e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    rest.add_term(e, form[static_cast<std::size_t>(j)]);
  }
  int maxdeg = 0;
  for (const auto& [e, k] : num.terms()) maxdeg = std::max(maxdeg, e[static_cast<std::size_t>(pivot)]);
  std::vector<QPoly> N(static_cast<std::size_t>(maxdeg) + 1, QPoly(n));
  for (const auto& [e, k] : num.terms()) {
    Expo r = e;
    int deg = r[static_cast<std::size_t>(pivot)];
    r[static_cast<std::size_t>(pivot)] = 0;
    N[static_cast<std::size_t>(deg)].add_term(r, k);
  }
  FieldElem one = FieldElem::from_rat(c.ring(), 1);
  FieldElem cinv = one / c;
  QPoly out(n);
  for (int k = maxdeg; k >= 1; --k) {
    QPoly q = N[static_cast<std::size_t>(k)].scaled(cinv);
    for (const auto& [e, kk] : q.terms()) {
      Expo e2 = e;
      e2[static_cast<std::size_t>(pivot)] += k - 1;
      out.add_term(e2, kk);
    }
    N[static_cast<std::size_t>(k - 1)] -= rest * q;
  }
  return {out, N[0]};
}

// Exact division by a linear form.  Synthetic division in the least
// variable with a nonzero coefficient; a nonzero remainder is an arithmetic
// bug and aborts.
inline QPoly divide_by_linear(const QPoly& num, const QVec& form) {
  auto [q, r] = divmod_by_linear(num, form);
  if (!r.is_zero()) throw invariant_error("divide_by_linear: nonzero remainder");
  return q;
}

inline std::optional<QPoly> try_divide_by_linear(const QPoly& num, const QVec& form) {
  auto [q, r] = divmod_by_linear(num, form);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

inline QVec simple_root_form(const RootDatum& d, int i) {
  QVec out;
  out.reserve(static_cast<std::size_t>(d.rank()));
  for (const auto& c : d.simple_root(i)) out.emplace_back(c);
  return out;
}

inline QVec root_form(const RootDatum& d, int ri) {
  QVec out;
  out.reserve(static_cast<std::size_t>(d.rank()));
  for (const auto& c : d.roots()[static_cast<std::size_t>(ri)].coords) out.emplace_back(c);
  return out;
}

// X_i action: (p - s_i p) / alpha_i.
inline QPoly ddx(const RootDatum& d, int i, const QPoly& p) {
  QPoly num = p - act(d, WeylElement::simple(d, i), p);
  return divide_by_linear(num, simple_root_form(d, i));
}
inline OPoly ddx(const RootDatum& d, int i, const OPoly& p) {
  return to_ring_checked(ddx(d, i, to_field(p)), "ddx");
}

// Y_i action: (s_i p - p) / alpha_i = -X_i action.
inline QPoly ddy(const RootDatum& d, int i, const QPoly& p) {
  QPoly num = act(d, WeylElement::simple(d, i), p) - p;
  return divide_by_linear(num, simple_root_form(d, i));
}
inline OPoly ddy(const RootDatum& d, int i, const OPoly& p) {
  return to_ring_checked(ddy(d, i, to_field(p)), "ddy");
}

// Evaluation at 0.
template <class K>
inline K augment(const Polynomial<K>& p, const K& zero) {
  return p.constant_term(zero);
}

// ---- rendering ------------------------------------------------------------

inline std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

inline std::string coeff_to_string(const RingElem& c) {
  if (c.ring()->degree() == 1) return c.coords()[0].str();
  std::string s = c.to_string();
  // parenthesize sums so the monomial product reads unambiguously
  bool needs_paren = s.find(' ') != std::string::npos;
  return needs_paren ? "(" + s + ")" : s;
}

inline std::string coeff_to_string(const FieldElem& c) {
  if (c.ring()->degree() == 1) return rat_to_string(c.coords()[0]);
  std::string s = c.to_string();
  bool needs_paren = s.find(' ') != std::string::npos;
  return needs_paren ? "(" + s + ")" : s;
}

inline std::string poly_to_string(const OPoly& p) {
  return p.to_string([](const RingElem& c) { return coeff_to_string(c); });
}
inline std::string poly_to_string(const QPoly& p) {
  return p.to_string([](const FieldElem& c) { return coeff_to_string(c); });
}

// SageMath-compatible rendering: variable a_k denotes the root alpha_{k+1}.
inline std::string poly_to_string_sage(const OPoly& p) {
  return p.to_string([](const RingElem& c) { return coeff_to_string(c); }, 0);
}
inline std::string poly_to_string_sage(const QPoly& p) {
  return p.to_string([](const FieldElem& c) { return coeff_to_string(c); }, 0);
}

}  // namespace nilhecke
