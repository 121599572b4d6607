// Copyright The nilhecke Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in the rings Z[tau_m], tau_m = 2cos(pi/m), and their
// fraction fields Q(tau_m).  Elements are stored in the power basis
// 1, tau, ..., tau^{d-1}; the crystallographic case is d = 1.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilhecke {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ring_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invariant violations signal arithmetic bugs, not bad user input.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

// Dense univariate polynomials over Z, coefficient of x^k at index k.
using ZPoly = std::vector<Int>;

inline void zp_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zp_trim(r);
  return r;
}

// Exact division by a monic divisor.
inline ZPoly zp_div_monic(ZPoly num, const ZPoly& den) {
  if (den.empty() || den.back() != 1)
    throw invariant_error("zp_div_monic: divisor not monic");
  if (num.size() < den.size()) {
    zp_trim(num);
    if (!num.empty()) throw invariant_error("zp_div_monic: not divisible");
    return {};
  }
  ZPoly q(num.size() - den.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Int c = num[k + den.size() - 1];
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  zp_trim(num);
  if (!num.empty()) throw invariant_error("zp_div_monic: nonzero remainder");
  return q;
}

// n-th cyclotomic polynomial, by dividing x^n - 1 by the proper cyclotomic
// factors.
inline ZPoly cyclotomic(int n) {
  ZPoly f(static_cast<std::size_t>(n) + 1);
  f[0] = -1;
  f[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) f = zp_div_monic(std::move(f), cyclotomic(d));
  return f;
}

inline Rat zp_eval(const ZPoly& p, const Rat& x) {
  Rat acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + Rat(p[k]);
  return acc;
}

inline int rat_sign(const Rat& x) {
  if (x == 0) return 0;
  return x > 0 ? 1 : -1;
}

}  // namespace detail

// The ring Z[tau_m].  minpoly is the minimal polynomial of tau_m over Q,
// monic with integer coefficients; m = 2 gives Z itself (tau = 0).
class NumberRing {
 public:
  NumberRing(std::vector<Int> minpoly, int m) : minpoly_(std::move(minpoly)), m_(m) {
    if (minpoly_.size() < 2 || minpoly_.back() != 1)
      throw ring_error("NumberRing: minimal polynomial must be monic of degree >= 1");
    build_reduction_rows();
    bracket_root();
  }

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  int m() const { return m_; }
  const std::vector<Int>& minpoly() const { return minpoly_; }

  bool same_as(const NumberRing& o) const {
    return m_ == o.m_ && minpoly_ == o.minpoly_;
  }

  // tau^{degree()+k} expressed in the power basis, 0 <= k < degree()-1.
  const std::vector<Int>& reduction_row(int k) const { return red_[static_cast<std::size_t>(k)]; }

  // Rational enclosure [lo, hi] of tau with hi - lo <= 2^-bits.
  std::pair<Rat, Rat> enclosure(int bits) const {
    std::lock_guard<std::mutex> g(mtx_);
    while (hi_ - lo_ > Rat(1, Int(1) << bits)) {
      Rat mid = (lo_ + hi_) / 2;
      int s = detail::rat_sign(detail::zp_eval(minpoly_, mid));
      if (s == 0) { lo_ = hi_ = mid; break; }
      if (s == sign_hi_) hi_ = mid; else lo_ = mid;
    }
    return {lo_, hi_};
  }

  double embedding_approx() const { return approx_; }

 private:
  void build_reduction_rows() {
    const int d = degree();
    // tau^d = -(c_0 + ... + c_{d-1} tau^{d-1})
    std::vector<Int> row(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) row[static_cast<std::size_t>(j)] = -minpoly_[static_cast<std::size_t>(j)];
    red_.push_back(row);
    for (int k = 1; k < d - 1; ++k) {
      // multiply previous row by tau and reduce
      std::vector<Int> nxt(static_cast<std::size_t>(d));
      const auto& prev = red_.back();
      for (int j = 0; j < d - 1; ++j) nxt[static_cast<std::size_t>(j + 1)] = prev[static_cast<std::size_t>(j)];
      const Int& top = prev[static_cast<std::size_t>(d - 1)];
      if (top != 0)
        for (int j = 0; j < d; ++j) nxt[static_cast<std::size_t>(j)] += top * red_[0][static_cast<std::size_t>(j)];
      red_.push_back(std::move(nxt));
    }
  }

  // Bracket the distinguished root 2cos(pi/m).  It is the largest real root
  // of the minimal polynomial, so [a, 2] works once a exceeds every other
  // root; we locate a by bisecting on sign changes from above.
  void bracket_root() {
    approx_ = 2.0 * std::cos(3.14159265358979323846 / static_cast<double>(m_));
    if (degree() == 0) throw ring_error("NumberRing: degree 0");
    hi_ = Rat(5, 2);
    sign_hi_ = detail::rat_sign(detail::zp_eval(minpoly_, hi_));
    if (sign_hi_ == 0) throw invariant_error("NumberRing: 5/2 cannot be a root");
    // Walk down in steps until the sign flips; all roots lie in [-2, 2].
    Rat step(1, 64);
    Rat lo = hi_ - step;
    while (true) {
      int s = detail::rat_sign(detail::zp_eval(minpoly_, lo));
      if (s == 0) { lo_ = hi_ = lo; return; }
      if (s != sign_hi_) break;
      hi_ = lo;
      lo -= step;
      if (lo < -3) throw invariant_error("NumberRing: no real root found");
    }
    lo_ = lo;
  }

  std::vector<Int> minpoly_;
  int m_;
  std::vector<std::vector<Int>> red_;
  double approx_ = 0.0;
  mutable std::mutex mtx_;
  mutable Rat lo_, hi_;
  int sign_hi_ = 1;
};

using RingPtr = std::shared_ptr<const NumberRing>;

// Minimal polynomial of 2cos(pi/m): substitute y = z + 1/z in the 2m-th
// cyclotomic polynomial.  Chebyshev-style basis change z^k + z^-k = C_k(y)
// with C_0 = 2, C_1 = y, C_{k+1} = y C_k - C_{k-1}.
inline RingPtr minpoly_2cos(int m) {
  if (m < 2) throw ring_error("minpoly_2cos: need m >= 2");
  detail::ZPoly phi = detail::cyclotomic(2 * m);
  const std::size_t D = (phi.size() - 1) / 2;
  detail::ZPoly psi(D + 1);
  detail::ZPoly Cprev{Int(2)};        // C_0
  detail::ZPoly Ccur{Int(0), Int(1)}; // C_1
  // constant term: c_D * 1
  psi[0] = phi[D];
  for (std::size_t k = 1; k <= D; ++k) {
    const detail::ZPoly& Ck = (k == 1) ? Ccur : [&]() -> const detail::ZPoly& {
      // advance the recurrence to C_k
      detail::ZPoly nxt = detail::zp_mul(detail::ZPoly{Int(0), Int(1)}, Ccur);
      for (std::size_t j = 0; j < Cprev.size(); ++j) nxt[j] -= Cprev[j];
      detail::zp_trim(nxt);
      Cprev = std::move(Ccur);
      Ccur = std::move(nxt);
      return Ccur;
    }();
    const Int& c = phi[D + k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < Ck.size(); ++j) psi[j] += c * Ck[j];
  }
  return std::make_shared<NumberRing>(std::move(psi), m);
}

// Z itself, presented as Z[2cos(pi/2)] = Z[0].
inline RingPtr integer_ring() {
  static RingPtr z = minpoly_2cos(2);
  return z;
}

namespace detail {

template <class C>
inline bool coords_all_zero(const C& c) {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

// Multiply power-basis coordinate vectors modulo the minimal polynomial.
template <class C>
inline C coords_mul(const C& a, const C& b, const NumberRing& R) {
  const int d = R.degree();
  std::vector<typename C::value_type> conv(static_cast<std::size_t>(2 * d - 1));
  for (int i = 0; i < d; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < d; ++j)
      conv[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  C out(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) out[static_cast<std::size_t>(j)] = conv[static_cast<std::size_t>(j)];
  for (int k = 0; k < d - 1; ++k) {
    const auto& c = conv[static_cast<std::size_t>(d + k)];
    if (c == 0) continue;
    const auto& row = R.reduction_row(k);
    for (int j = 0; j < d; ++j) out[static_cast<std::size_t>(j)] += c * row[static_cast<std::size_t>(j)];
  }
  return out;
}

// Sign of sum coords[k] tau^k under the distinguished embedding, by interval
// refinement.  Zero is decided exactly by the coordinates.
template <class C>
inline int coords_sign(const C& coords, const NumberRing& R) {
  if (coords_all_zero(coords)) return 0;
  const int d = R.degree();
  if (d == 1) return rat_sign(Rat(coords[0]));
  for (int bits = 32;; bits *= 2) {
    auto [lo, hi] = R.enclosure(bits);
    // tau > 1 for every ring with d >= 2, so powers are monotone.
    Rat plo = 1, phi = 1, slo = Rat(coords[0]), shi = slo;
    for (int k = 1; k < d; ++k) {
      plo *= lo;
      phi *= hi;
      Rat c(coords[static_cast<std::size_t>(k)]);
      if (c >= 0) { slo += c * plo; shi += c * phi; }
      else        { slo += c * phi; shi += c * plo; }
    }
    if (slo > 0) return 1;
    if (shi < 0) return -1;
    if (bits > (1 << 20)) throw invariant_error("coords_sign: no separation (is the minimal polynomial irreducible?)");
  }
}

}  // namespace detail

class FieldElem;

// An element of O_F = Z[tau] in power-basis coordinates.
class RingElem {
 public:
  RingElem() = default;
  RingElem(RingPtr ring, std::vector<Int> coords) : ring_(std::move(ring)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != ring_->degree())
      throw ring_error("RingElem: coordinate length mismatch");
  }
  static RingElem zero(const RingPtr& R) { return RingElem(R, std::vector<Int>(static_cast<std::size_t>(R->degree()))); }
  static RingElem from_int(const RingPtr& R, Int k) {
    auto e = zero(R);
    e.coords_[0] = std::move(k);
    return e;
  }
  // The ring generator tau (for d = 1 this is the integer value of tau).
  static RingElem tau(const RingPtr& R) {
    auto e = zero(R);
    if (R->degree() == 1) e.coords_[0] = -R->minpoly()[0];
    else e.coords_[1] = 1;
    return e;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Int>& coords() const { return coords_; }
  bool is_zero() const { return detail::coords_all_zero(coords_); }
  bool is_one() const {
    if (coords_[0] != 1) return false;
    for (std::size_t k = 1; k < coords_.size(); ++k)
      if (coords_[k] != 0) return false;
    return true;
  }

  friend bool operator==(const RingElem& a, const RingElem& b) {
    a.check(b);
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }
  // Lexicographic order on coordinates; used only as a container key.
  friend bool operator<(const RingElem& a, const RingElem& b) { return a.coords_ < b.coords_; }

  friend RingElem operator+(const RingElem& a, const RingElem& b) {
    a.check(b);
    RingElem r = a;
    for (std::size_t k = 0; k < r.coords_.size(); ++k) r.coords_[k] += b.coords_[k];
    return r;
  }
  friend RingElem operator-(const RingElem& a, const RingElem& b) {
    a.check(b);
    RingElem r = a;
    for (std::size_t k = 0; k < r.coords_.size(); ++k) r.coords_[k] -= b.coords_[k];
    return r;
  }
  friend RingElem operator-(const RingElem& a) {
    RingElem r = a;
    for (auto& c : r.coords_) c = -c;
    return r;
  }
  friend RingElem operator*(const RingElem& a, const RingElem& b) {
    a.check(b);
    return RingElem(a.ring_, detail::coords_mul(a.coords_, b.coords_, *a.ring_));
  }
  RingElem& operator+=(const RingElem& b) { return *this = *this + b; }
  RingElem& operator-=(const RingElem& b) { return *this = *this - b; }
  RingElem& operator*=(const RingElem& b) { return *this = *this * b; }

  int sign() const { return detail::coords_sign(coords_, *ring_); }

  // Multiplication-by-this matrix in the power basis (column j = this * tau^j).
  std::vector<std::vector<Int>> mult_matrix() const {
    const int d = ring_->degree();
    std::vector<std::vector<Int>> M(static_cast<std::size_t>(d), std::vector<Int>(static_cast<std::size_t>(d)));
    std::vector<Int> pow = coords_;
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pow[static_cast<std::size_t>(i)];
      if (j + 1 < d) {
        std::vector<Int> nxt(static_cast<std::size_t>(d));
        for (int i = 0; i < d - 1; ++i) nxt[static_cast<std::size_t>(i + 1)] = pow[static_cast<std::size_t>(i)];
        const Int top = pow[static_cast<std::size_t>(d - 1)];
        if (top != 0)
          for (int i = 0; i < d; ++i) nxt[static_cast<std::size_t>(i)] += top * ring_->reduction_row(0)[static_cast<std::size_t>(i)];
        pow = std::move(nxt);
      }
    }
    return M;
  }

  // Field norm N(this) over Q; an integer for ring elements.
  Int norm() const;

  std::string to_string() const;

  void check(const RingElem& b) const {
    if (!ring_->same_as(*b.ring_)) throw ring_error("ring mismatch");
  }

 private:
  RingPtr ring_;
  std::vector<Int> coords_;
  friend class FieldElem;
};

// An element of the fraction field K = Q(tau) in power-basis coordinates.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(RingPtr ring, std::vector<Rat> coords) : ring_(std::move(ring)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != ring_->degree())
      throw ring_error("FieldElem: coordinate length mismatch");
  }
  static FieldElem zero(const RingPtr& R) { return FieldElem(R, std::vector<Rat>(static_cast<std::size_t>(R->degree()))); }
  static FieldElem from_rat(const RingPtr& R, Rat q) {
    auto e = zero(R);
    e.coords_[0] = std::move(q);
    return e;
  }
  FieldElem(const RingElem& a) : ring_(a.ring()) {
    coords_.reserve(a.coords().size());
    for (const auto& c : a.coords()) coords_.emplace_back(c);
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Rat>& coords() const { return coords_; }
  bool is_zero() const { return detail::coords_all_zero(coords_); }
  bool is_one() const {
    if (coords_[0] != 1) return false;
    for (std::size_t k = 1; k < coords_.size(); ++k)
      if (coords_[k] != 0) return false;
    return true;
  }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
  friend bool operator<(const FieldElem& a, const FieldElem& b) { return a.coords_ < b.coords_; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    FieldElem r = a;
    for (std::size_t k = 0; k < r.coords_.size(); ++k) r.coords_[k] += b.coords_[k];
    return r;
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    FieldElem r = a;
    for (std::size_t k = 0; k < r.coords_.size(); ++k) r.coords_[k] -= b.coords_[k];
    return r;
  }
  friend FieldElem operator-(const FieldElem& a) {
    FieldElem r = a;
    for (auto& c : r.coords_) c = -c;
    return r;
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    return FieldElem(a.ring_, detail::coords_mul(a.coords_, b.coords_, *a.ring_));
  }
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

  // Division via the multiplication matrix of the divisor.
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    if (b.is_zero()) throw ring_error("division by zero");
    const int d = a.ring_->degree();
    if (d == 1) return FieldElem(a.ring_, {a.coords_[0] / b.coords_[0]});
    // Solve M x = a where M is multiplication by b.
    std::vector<std::vector<Rat>> M(static_cast<std::size_t>(d), std::vector<Rat>(static_cast<std::size_t>(d + 1)));
    {
      std::vector<Rat> pow = b.coords_;
      for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pow[static_cast<std::size_t>(i)];
        if (j + 1 < d) {
          std::vector<Rat> nxt(static_cast<std::size_t>(d));
          for (int i = 0; i < d - 1; ++i) nxt[static_cast<std::size_t>(i + 1)] = pow[static_cast<std::size_t>(i)];
          const Rat top = pow[static_cast<std::size_t>(d - 1)];
          if (top != 0)
            for (int i = 0; i < d; ++i) nxt[static_cast<std::size_t>(i)] += top * Rat(a.ring_->reduction_row(0)[static_cast<std::size_t>(i)]);
          pow = std::move(nxt);
        }
      }
    }
    for (int i = 0; i < d; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] = a.coords_[static_cast<std::size_t>(i)];
    // Gaussian elimination with partial (first nonzero) pivoting.
    for (int col = 0, row = 0; col < d && row < d; ++col, ++row) {
      int piv = -1;
      for (int r = row; r < d; ++r)
        if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { piv = r; break; }
      if (piv < 0) throw invariant_error("field division: singular multiplication matrix");
      std::swap(M[static_cast<std::size_t>(row)], M[static_cast<std::size_t>(piv)]);
      Rat inv = M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      for (int c = col; c <= d; ++c) M[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] /= inv;
      for (int r = 0; r < d; ++r) {
        if (r == row) continue;
        Rat f = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (f == 0) continue;
        for (int c = col; c <= d; ++c)
          M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= f * M[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
      }
    }
    std::vector<Rat> x(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
    return FieldElem(a.ring_, std::move(x));
  }
  FieldElem& operator/=(const FieldElem& b) { return *this = *this / b; }

  int sign() const { return detail::coords_sign(coords_, *ring_); }

  // Integer-coordinate witness, if the element lies in O_F.
  std::optional<RingElem> as_integral() const {
    std::vector<Int> out;
    out.reserve(coords_.size());
    for (const auto& q : coords_) {
      if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
      out.push_back(boost::multiprecision::numerator(q));
    }
    return RingElem(ring_, std::move(out));
  }

  std::string to_string() const;

  void check(const FieldElem& b) const {
    if (!ring_->same_as(*b.ring_)) throw ring_error("ring mismatch");
  }

 private:
  RingPtr ring_;
  std::vector<Rat> coords_;
};

// Quotient in O_F; fails (naming the fractional coordinates) if the exact
// quotient leaves the ring.
inline RingElem exact_divide(const RingElem& a, const RingElem& b) {
  if (b.is_zero()) throw ring_error("exact_divide: division by zero");
  FieldElem q = FieldElem(a) / FieldElem(b);
  auto w = q.as_integral();
  if (!w) {
    std::ostringstream os;
    os << "exact_divide: quotient not in O_F, coordinates (";
    for (std::size_t k = 0; k < q.coords().size(); ++k)
      os << (k ? ", " : "") << q.coords()[k];
    os << ")";
    throw ring_error(os.str());
  }
  return *w;
}

namespace detail {

template <class C>
inline std::string coords_to_string(const C& coords, int d) {
  // Renders c0 + c1*tau + c2*tau^2 + ...
  std::ostringstream os;
  bool first = true;
  for (int k = d - 1; k >= 0; --k) {
    const auto& c = coords[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    std::ostringstream term;
    if (k == 0) {
      term << c;
    } else {
      if (c == 1) {}
      else if (c == -1) term << "-";
      else term << c << "*";
      term << "tau";
      if (k > 1) term << "^" << k;
    }
    std::string t = term.str();
    if (first) { os << t; first = false; continue; }
    if (!t.empty() && t[0] == '-') os << " - " << t.substr(1);
    else os << " + " << t;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace detail

inline std::string RingElem::to_string() const {
  return detail::coords_to_string(coords_, ring_->degree());
}

inline std::string FieldElem::to_string() const {
  return detail::coords_to_string(coords_, ring_->degree());
}

inline Int RingElem::norm() const {
  auto M = mult_matrix();
  const int d = ring_->degree();
  // determinant by fraction-free elimination at small d
  std::vector<std::vector<Rat>> A(static_cast<std::size_t>(d), std::vector<Rat>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  Rat det = 1;
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) { std::swap(A[static_cast<std::size_t>(piv)], A[static_cast<std::size_t>(col)]); det = -det; }
    det *= A[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int r = col + 1; r < d; ++r) {
      Rat f = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / A[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int c = col; c < d; ++c)
        A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= f * A[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  if (boost::multiprecision::denominator(det) != 1)
    throw invariant_error("norm: non-integral determinant");
  return boost::multiprecision::numerator(det);
}

}  // namespace nilhecke
