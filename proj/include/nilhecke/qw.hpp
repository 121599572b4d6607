// Copyright The nilhecke Authors.
// SPDX-License-Identifier: Apache-2.0
//
// The localized twisted group algebra Q_W in the delta basis, the nil-Hecke
// elements X_w and Y_w, the dual group/Schubert bases, transition
// coefficients c_{w,v} and d_{w,v}, and the Hecke action of Q_W on its dual.
//
// Scalars are fractions whose denominators are multisets of positive roots;
// every denominator arising in the theory has this shape, so the factored
// form is kept throughout and cancellation is exact division of the
// numerator by a root.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "nilhecke/poly.hpp"

namespace nilhecke {

class RootFraction {
 public:
  RootFraction() = default;
  RootFraction(const RootDatum* d, QPoly num) : d_(d), num_(std::move(num)) { reduce(); }
  RootFraction(const RootDatum* d, QPoly num, std::map<int, int> den)
      : d_(d), num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }
  static RootFraction zero(const RootDatum& d) { return RootFraction(&d, QPoly(d.rank())); }
  static RootFraction one(const RootDatum& d) {
    return RootFraction(&d, QPoly::constant(d.rank(), FieldElem::from_rat(d.ring(), 1)));
  }
  static RootFraction from_poly(const RootDatum& d, const OPoly& p) {
    return RootFraction(&d, to_field(p));
  }
  static RootFraction from_poly(const RootDatum& d, QPoly p) { return RootFraction(&d, std::move(p)); }
  // sign / product of roots in the denominator
  static RootFraction inverse_root(const RootDatum& d, int ri) {
    auto [pos, sgn] = d.positive_part(ri);
    QPoly num = QPoly::constant(d.rank(), FieldElem::from_rat(d.ring(), sgn));
    return RootFraction(&d, std::move(num), {{pos, 1}});
  }

  const RootDatum& datum() const { return *d_; }
  const QPoly& numerator() const { return num_; }
  const std::map<int, int>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  std::optional<QPoly> poly_part() const {
    if (!den_.empty()) return std::nullopt;
    return num_;
  }

  friend RootFraction operator+(const RootFraction& a, const RootFraction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // lcm of denominators
    std::map<int, int> lcm = a.den_;
    for (const auto& [r, m] : b.den_) {
      auto& slot = lcm[r];
      slot = std::max(slot, m);
    }
    QPoly na = a.num_, nb = b.num_;
    for (const auto& [r, m] : lcm) {
      int ma = m, mb = m;
      if (auto it = a.den_.find(r); it != a.den_.end()) ma -= it->second;
      if (auto it = b.den_.find(r); it != b.den_.end()) mb -= it->second;
      QPoly root = to_field(root_poly(*a.d_, r));
      for (int k = 0; k < ma; ++k) na *= root;
      for (int k = 0; k < mb; ++k) nb *= root;
    }
    return RootFraction(a.d_, na + nb, std::move(lcm));
  }
  friend RootFraction operator-(const RootFraction& a) {
    RootFraction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RootFraction operator-(const RootFraction& a, const RootFraction& b) { return a + (-b); }
  friend RootFraction operator*(const RootFraction& a, const RootFraction& b) {
    if (a.is_zero() || b.is_zero()) return zero(*a.d_);
    std::map<int, int> den = a.den_;
    for (const auto& [r, m] : b.den_) den[r] += m;
    return RootFraction(a.d_, a.num_ * b.num_, std::move(den));
  }
  RootFraction& operator+=(const RootFraction& b) { return *this = *this + b; }
  RootFraction& operator-=(const RootFraction& b) { return *this = *this - b; }
  RootFraction& operator*=(const RootFraction& b) { return *this = *this * b; }

  RootFraction scaled(const FieldElem& c) const {
    RootFraction r = *this;
    r.num_ = r.num_.scaled(c);
    if (r.num_.is_zero()) r.den_.clear();
    return r;
  }

  // Reduced representations are unique: positive roots are pairwise
  // non-associate primes, so structural equality decides.
  friend bool operator==(const RootFraction& a, const RootFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RootFraction& a, const RootFraction& b) { return !(a == b); }

  RootFraction acted_by(const WeylElement& w) const {
    QPoly num = w.length() == 0 ? num_ : num_.substitute_linear(w.matrix(), [](const RingElem& c) { return FieldElem(c); });
    std::map<int, int> den;
    FieldElem sign = FieldElem::from_rat(d_->ring(), 1);
    bool flip = false;
    for (const auto& [r, m] : den_) {
      RVec img = w.apply(d_->roots()[static_cast<std::size_t>(r)].coords);
      int idx = d_->root_index(img);
      if (idx < 0) throw invariant_error("w does not permute the roots");
      auto [pos, sgn] = d_->positive_part(idx);
      den[pos] += m;
      if (sgn < 0 && (m % 2) == 1) flip = !flip;
    }
    if (flip) num = -num;
    return RootFraction(d_, std::move(num), std::move(den));
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
      QVec form = root_form(*d_, it->first);
      bool erased = false;
      while (it->second > 0 && num_.degree() >= 1) {
        auto q = try_divide_by_linear(num_, form);
        if (!q) break;
        num_ = std::move(*q);
        if (--it->second == 0) {
          it = den_.erase(it);
          erased = true;
          break;
        }
      }
      if (!erased) ++it;
    }
  }

  const RootDatum* d_ = nullptr;
  QPoly num_;
  std::map<int, int> den_;
};

// Elements of Q_W (map group id -> coefficient of delta_w) and of its dual
// in the group basis (map group id -> psi-coordinate).
using QWElement = std::map<int, RootFraction>;
using DualElement = std::map<int, RootFraction>;

namespace detail {
inline void qw_add_term(QWElement& z, int w, const RootFraction& c) {
  if (c.is_zero()) return;
  auto it = z.find(w);
  if (it == z.end()) {
    z.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) z.erase(it);
  }
}
}  // namespace detail

class TwistedAlgebra {
 public:
  explicit TwistedAlgebra(const GroupTable& T) : T_(&T), d_(&T.datum()) {
    y_rows_.resize(static_cast<std::size_t>(T.size()));
    billey_.resize(static_cast<std::size_t>(T.size()));
  }

  const GroupTable& table() const { return *T_; }
  const RootDatum& datum() const { return *d_; }

  RootFraction frac_zero() const { return RootFraction::zero(*d_); }
  RootFraction frac_one() const { return RootFraction::one(*d_); }

  QWElement delta(int w) const { return {{w, frac_one()}}; }
  QWElement scalar(const RootFraction& c) const {
    QWElement z;
    detail::qw_add_term(z, 0, c);
    return z;
  }

  // p delta_w . q delta_v = p w(q) delta_{wv}
  QWElement qw_multiply(const QWElement& a, const QWElement& b) const {
    QWElement out;
    for (const auto& [w, p] : a) {
      const WeylElement& we = T_->element(w);
      for (const auto& [v, q] : b)
        detail::qw_add_term(out, T_->product(w, v), p * q.acted_by(we));
    }
    return out;
  }

  QWElement qw_add(const QWElement& a, const QWElement& b) const {
    QWElement out = a;
    for (const auto& [w, c] : b) detail::qw_add_term(out, w, c);
    return out;
  }

  QWElement qw_negate(const QWElement& a) const {
    QWElement out;
    for (const auto& [w, c] : a) out.emplace(w, -c);
    return out;
  }

  // Y_i = (delta_{s_i} - delta_e)/alpha_i, X_i = -Y_i.
  QWElement element_Y_simple(int i) const {
    RootFraction inv = RootFraction::inverse_root(*d_, simple_root_index(i));
    QWElement z;
    detail::qw_add_term(z, T_->right(0, i), inv);
    detail::qw_add_term(z, 0, -inv);
    return z;
  }
  QWElement element_X_simple(int i) const { return qw_negate(element_Y_simple(i)); }

  // delta-expansion of Y_w, cached per element; Y_{w} = Y_{w s_i} Y_i along
  // the last letter of the canonical word.
  const QWElement& y_row(int w) const {
    auto& slot = y_rows_[static_cast<std::size_t>(w)];
    if (slot) return *slot;
    QWElement out;
    if (w == 0) {
      out = delta(0);
    } else {
      const Word& word = T_->word(w);
      int i = word.back();
      const QWElement& prev = y_row(T_->right(w, i));
      // right-multiplied by Y_i: coefficient of delta_y collects
      //   c_{w', y s_i} / (y s_i)(alpha_i)  -  c_{w', y} / y(alpha_i)
      for (const auto& [x, c] : prev) {
        RootFraction t = c * inverse_root_at(x, i);
        detail::qw_add_term(out, T_->right(x, i), t);
        detail::qw_add_term(out, x, -t);
      }
    }
    slot = std::make_unique<QWElement>(std::move(out));
    return *slot;
  }

  QWElement element_Y(int w) const { return y_row(w); }
  QWElement element_X(int w) const {
    QWElement z = y_row(w);
    if (T_->length(w) % 2 == 1) z = qw_negate(z);
    return z;
  }

  // c_{w,v}: coefficient of delta_v in Y_w.
  RootFraction transition_c(int w, int v) const {
    const QWElement& row = y_row(w);
    auto it = row.find(v);
    return it == row.end() ? frac_zero() : it->second;
  }

  // The subsequence-sum form of c_{w,v}, used to cross-check the
  // delta-expansion: sum over subsequences of the canonical word of w with
  // product v of (-1)^{l(w)-|j|} prod_k beta_{k,j}^{-1}.
  RootFraction transition_c_subsequences(int w, int v) const {
    const Word& word = T_->word(w);
    const int r = static_cast<int>(word.size());
    RootFraction acc = frac_zero();
    // DFS over positions: state = (product element, prefix element for the
    // beta twists, denominator multiset + sign)
    struct Frame {
      int prod, prefix;
      std::map<int, int> den;
      int sign;
    };
    std::function<void(int, Frame&)> rec = [&](int k, Frame& f) {
      if (k == r) {
        if (f.prod != v) return;
        QPoly num = QPoly::constant(d_->rank(), FieldElem::from_rat(d_->ring(), f.sign));
        acc += RootFraction(d_, std::move(num), f.den);
        return;
      }
      int i = word[static_cast<std::size_t>(k)];
      RVec img = T_->element(f.prefix).apply(d_->simple_root(i));
      int idx = d_->root_index(img);
      auto [pos, sgn] = d_->positive_part(idx);
      Frame g = f;
      g.den[pos] += 1;
      if (sgn < 0) g.sign = -g.sign;
      // skip position k: an extra factor (-1)
      {
        Frame h = g;
        h.sign = -h.sign;
        rec(k + 1, h);
      }
      // take position k
      {
        Frame h = g;
        h.prod = T_->right(h.prod, i);
        h.prefix = T_->right(h.prefix, i);
        rec(k + 1, h);
      }
    };
    Frame start{0, 0, {}, 1};
    rec(0, start);
    return acc;
  }

  // Billey's formula: the column d_{., v} for a fixed v, by dynamic
  // programming over the canonical word of v.  d_{u,v} sums the products of
  // beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) over subsequences that are
  // reduced words of u.
  const std::vector<OPoly>& billey_column(int v) const {
    auto& slot = billey_[static_cast<std::size_t>(v)];
    if (slot) return *slot;
    const Word& word = T_->word(v);
    std::vector<OPoly> cur(static_cast<std::size_t>(T_->size()), OPoly(d_->rank()));
    cur[0] = OPoly::constant(d_->rank(), RingElem::from_int(d_->ring(), 1));
    std::vector<char> live(static_cast<std::size_t>(T_->size()), 0);
    live[0] = 1;
    int prefix = 0;
    for (int k = 0; k < static_cast<int>(word.size()); ++k) {
      int i = word[static_cast<std::size_t>(k)];
      RVec img = T_->element(prefix).apply(d_->simple_root(i));
      int idx = d_->root_index(img);
      if (!d_->roots()[static_cast<std::size_t>(idx)].positive)
        throw invariant_error("billey: beta_k not positive on a reduced word");
      OPoly beta = root_poly(*d_, idx);
      // iterate over live states; extensions increase length so process a
      // snapshot
      std::vector<int> snapshot;
      for (int x = 0; x < T_->size(); ++x)
        if (live[static_cast<std::size_t>(x)]) snapshot.push_back(x);
      for (int x : snapshot) {
        int y = T_->right(x, i);
        if (T_->length(y) != T_->length(x) + 1) continue;
        OPoly add = cur[static_cast<std::size_t>(x)] * beta;
        cur[static_cast<std::size_t>(y)] += add;
        live[static_cast<std::size_t>(y)] = 1;
      }
      prefix = T_->right(prefix, i);
    }
    slot = std::make_unique<std::vector<OPoly>>(std::move(cur));
    return *slot;
  }

  OPoly transition_d(int u, int v) const { return billey_column(v)[static_cast<std::size_t>(u)]; }

  // d-matrix by the recursion d_{w, v s_i} = d_{w,v} + [s_i in D_R(w)] v(alpha_i) d_{w s_i, v}.
  // Purely an oracle for the Billey production path.
  std::vector<std::vector<OPoly>> dmatrix_recursion() const {
    const int N = T_->size();
    std::vector<std::vector<OPoly>> D(static_cast<std::size_t>(N),
                                      std::vector<OPoly>(static_cast<std::size_t>(N), OPoly(d_->rank())));
    std::vector<int> order(static_cast<std::size_t>(N));
    for (int x = 0; x < N; ++x) order[static_cast<std::size_t>(x)] = x;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return T_->length(a) < T_->length(b); });
    for (int w = 0; w < N; ++w)
      D[static_cast<std::size_t>(w)][0] = (w == 0) ? OPoly::constant(d_->rank(), RingElem::from_int(d_->ring(), 1)) : OPoly(d_->rank());
    D[0][0] = OPoly::constant(d_->rank(), RingElem::from_int(d_->ring(), 1));
    for (int v : order) {
      if (v == 0) continue;
      int i = T_->word(v).back();
      int vp = T_->right(v, i);  // shorter
      // v(alpha_i) with v = vp here: root vp(alpha_i)
      RVec img = T_->element(vp).apply(d_->simple_root(i));
      int idx = d_->root_index(img);
      OPoly beta = root_poly(*d_, idx);  // positive since l(vp s_i) > l(vp)
      for (int w = 0; w < N; ++w) {
        OPoly val = D[static_cast<std::size_t>(w)][static_cast<std::size_t>(vp)];
        if (T_->right_descent(w, i))
          val += beta * D[static_cast<std::size_t>(T_->right(w, i))][static_cast<std::size_t>(vp)];
        D[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] = (w == 0)
            ? OPoly::constant(d_->rank(), RingElem::from_int(d_->ring(), 1))
            : std::move(val);
      }
    }
    return D;
  }

  // D^t = C^{-1} solved directly from the Y-expansion rows, as a fraction
  // matrix; oracle for small groups.
  std::vector<std::vector<RootFraction>> dmatrix_inversion() const {
    const int N = T_->size();
    std::vector<int> order(static_cast<std::size_t>(N));
    for (int x = 0; x < N; ++x) order[static_cast<std::size_t>(x)] = x;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return T_->length(a) < T_->length(b); });
    // Z = C^{-1}, rows in length order: z_w = (e_w - sum_{x<w} c_{w,x} z_x)/c_{w,w}
    std::vector<std::vector<RootFraction>> Z(static_cast<std::size_t>(N),
                                             std::vector<RootFraction>(static_cast<std::size_t>(N), frac_zero()));
    for (int w : order) {
      std::vector<RootFraction> rhs(static_cast<std::size_t>(N), frac_zero());
      rhs[static_cast<std::size_t>(w)] = frac_one();
      const QWElement& row = y_row(w);
      for (const auto& [x, cwx] : row) {
        if (x == w) continue;
        for (int y = 0; y < N; ++y) {
          if (Z[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)].is_zero()) continue;
          rhs[static_cast<std::size_t>(y)] -= cwx * Z[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        }
      }
      // divide by c_{w,w} = (-1)^{l(w)} / prod inversions
      RootFraction cww = transition_c(w, w);
      // invert: cww = s / prod(roots)  with s = +-1 constant numerator
      auto s = cww.numerator().constant_term(FieldElem::zero(d_->ring()));
      QPoly invnum = QPoly::constant(d_->rank(), FieldElem::from_rat(d_->ring(), 1) / s);
      for (const auto& [r, m] : cww.denominator())
        for (int k = 0; k < m; ++k) invnum *= to_field(root_poly(*d_, r));
      RootFraction inv(d_, std::move(invnum));
      for (int y = 0; y < N; ++y)
        Z[static_cast<std::size_t>(w)][static_cast<std::size_t>(y)] = rhs[static_cast<std::size_t>(y)] * inv;
    }
    // D^t = Z  =>  d_{v,x} = Z[x][v]
    return Z;
  }

  // xi_w = sum_v d_{w,v} psi_v
  DualElement xi(int w) const {
    DualElement f;
    for (int v = 0; v < T_->size(); ++v) {
      const OPoly& dwv = billey_column(v)[static_cast<std::size_t>(w)];
      if (dwv.is_zero()) continue;
      f.emplace(v, RootFraction::from_poly(*d_, dwv));
    }
    return f;
  }

  DualElement psi(int w) const { return {{w, frac_one()}}; }

  // (q delta_v) . psi_x = x v^{-1}(q) psi_{x v^{-1}}, extended additively.
  DualElement hecke_act(const QWElement& z, const DualElement& f) const {
    DualElement out;
    for (const auto& [v, q] : z) {
      int vinv = T_->inverse(v);
      for (const auto& [x, fx] : f) {
        int tgt = T_->product(x, vinv);
        detail::qw_add_term(out, tgt, fx * q.acted_by(T_->element(tgt)));
      }
    }
    return out;
  }

  bool is_parabolic_invariant(const DualElement& f, const std::set<int>& J) const {
    for (int j : J) {
      if (hecke_act(delta(T_->right(0, j)), f) != f) return false;
    }
    return true;
  }

  // Structure constants by localization: p_{u,v}^w = sum_x d_{u,x} d_{v,x} c_{w,x}.
  RootFraction localization_sum(int w, int u, int v) const {
    RootFraction acc = frac_zero();
    const QWElement& crow = y_row(w);
    for (const auto& [x, cwx] : crow) {
      const auto& col = billey_column(x);
      const OPoly& du = col[static_cast<std::size_t>(u)];
      if (du.is_zero()) continue;
      const OPoly& dv = col[static_cast<std::size_t>(v)];
      if (dv.is_zero()) continue;
      acc += RootFraction::from_poly(*d_, du * dv) * cwx;
    }
    return acc;
  }

  // The affine relation X_w p = w(p) X_w + sum_{w' -> w} beta^vee(p) X_{w'}
  // (minus the sum for Y), verified in the delta basis.
  bool affine_relation_holds(int w, const RVec& lambda, bool y_basis) const {
    QPoly lam(d_->rank());
    for (int j = 0; j < d_->rank(); ++j) {
      if (lambda[static_cast<std::size_t>(j)].is_zero()) continue;
      Expo e(static_cast<std::size_t>(d_->rank()), 0);
      e[static_cast<std::size_t>(j)] = 1;
      lam.add_term(e, FieldElem(lambda[static_cast<std::size_t>(j)]));
    }
    auto elem = [&](int x) { return y_basis ? element_Y(x) : element_X(x); };
    QWElement lhs = qw_multiply(elem(w), scalar(RootFraction::from_poly(*d_, lam)));
    // w(lambda) as a polynomial
    RVec wl = T_->element(w).apply(lambda);
    QPoly wlam(d_->rank());
    for (int j = 0; j < d_->rank(); ++j) {
      if (wl[static_cast<std::size_t>(j)].is_zero()) continue;
      Expo e(static_cast<std::size_t>(d_->rank()), 0);
      e[static_cast<std::size_t>(j)] = 1;
      wlam.add_term(e, FieldElem(wl[static_cast<std::size_t>(j)]));
    }
    QWElement rhs = qw_multiply(scalar(RootFraction::from_poly(*d_, wlam)), elem(w));
    for (int ri : d_->positive_roots()) {
      int wp = T_->id_of(WeylElement::mul(*d_, T_->element(w), WeylElement(refl_element(ri))));
      if (T_->length(wp) != T_->length(w) - 1) continue;
      RingElem pair = d_->pairing(ri, lambda);
      if (pair.is_zero()) continue;
      RootFraction c = RootFraction::from_poly(*d_, OPoly::constant(d_->rank(), y_basis ? -pair : pair));
      rhs = qw_add(rhs, qw_multiply(scalar(c), elem(wp)));
    }
    return lhs == rhs;
  }

  // Pointwise product in the psi-coordinates of the dual algebra.
  DualElement dual_multiply(const DualElement& f, const DualElement& g) const {
    DualElement out;
    for (const auto& [x, fx] : f) {
      auto it = g.find(x);
      if (it == g.end()) continue;
      RootFraction prod = fx * it->second;
      if (!prod.is_zero()) out.emplace(x, std::move(prod));
    }
    return out;
  }

  RootFraction inverse_root_at(int x, int i) const {
    // 1 / x(alpha_i)
    RVec img = T_->element(x).apply(d_->simple_root(i));
    int idx = d_->root_index(img);
    return RootFraction::inverse_root(*d_, idx);
  }

  int simple_root_index(int i) const {
    int idx = d_->root_index(d_->simple_root(i));
    if (idx < 0) throw invariant_error("simple root missing from root table");
    return idx;
  }

 private:
  const GroupTable* T_;
  const RootDatum* d_;
  mutable std::vector<std::unique_ptr<QWElement>> y_rows_;
  mutable std::vector<std::unique_ptr<std::vector<OPoly>>> billey_;
};

}  // namespace nilhecke
