// Copyright The nilhecke Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Root data over O_F: Cartan matrices in Bourbaki labeling for all finite
// families (crystallographic and not), root orbits, coroot pairings,
// reflections and fundamental weights.  All vectors are stored in the
// coordinates of the chosen lattice basis: simple roots for @root data,
// fundamental weights for @weight data.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "nilhecke/numring.hpp"

namespace nilhecke {

enum class Family { A, B, C, D, E, F, G, I2Normalized, I2Polarized, H };
enum class Lattice { Root, Weight };

struct RootDatumSpec {
  Family family = Family::A;
  int rank = 1;
  int m = 0;  // only for I2
  Lattice lattice = Lattice::Root;
};

using RVec = std::vector<RingElem>;
using QVec = std::vector<FieldElem>;
using RMat = std::vector<RVec>;  // row-major

namespace detail {

inline RMat rmat_identity(const RingPtr& R, int n) {
  RMat M(static_cast<std::size_t>(n), RVec(static_cast<std::size_t>(n), RingElem::zero(R)));
  for (int i = 0; i < n; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = RingElem::from_int(R, 1);
  return M;
}

inline RMat rmat_mul(const RMat& A, const RMat& B) {
  const std::size_t n = A.size();
  RMat C(n, RVec(n, RingElem::zero(A[0][0].ring())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (A[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (B[k][j].is_zero()) continue;
        C[i][j] += A[i][k] * B[k][j];
      }
    }
  return C;
}

inline RVec rmat_apply(const RMat& A, const RVec& v) {
  const std::size_t n = A.size();
  RVec out(n, RingElem::zero(A[0][0].ring()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (A[i][j].is_zero() || v[j].is_zero()) continue;
      out[i] += A[i][j] * v[j];
    }
  return out;
}

inline QVec qmat_apply(const RMat& A, const QVec& v) {
  const std::size_t n = A.size();
  QVec out(n, FieldElem::zero(v[0].ring()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (A[i][j].is_zero() || v[j].is_zero()) continue;
      out[i] += FieldElem(A[i][j]) * v[j];
    }
  return out;
}

}  // namespace detail

struct RootInfo {
  RVec coords;            // lattice-basis coordinates
  QVec alpha_coords;      // simple-root coordinates (exact, over K)
  bool positive = false;
  RVec coroot_row;        // beta^vee as a linear functional on lattice coords
  std::vector<int> word;  // beta = s_{word...}(alpha_base), word applied left to right
  int base = 0;           // index of the simple root in the orbit expression
};

class RootDatum {
 public:
  RootDatum(RootDatumSpec spec, std::size_t orbit_cap = 1000000) : spec_(spec) {
    build_ring_and_cartan();
    build_simple_reflections();
    build_roots(orbit_cap);
    build_weights();
  }

  const RootDatumSpec& spec() const { return spec_; }
  const RingPtr& ring() const { return ring_; }
  int rank() const { return spec_.rank; }
  Lattice lattice() const { return spec_.lattice; }
  bool crystallographic() const { return ring_->degree() == 1; }

  // c_{ij} = alpha_j^vee(alpha_i)
  const RMat& cartan() const { return cartan_; }

  // Simple root alpha_i in lattice-basis coordinates.
  const RVec& simple_root(int i) const { return simple_roots_[static_cast<std::size_t>(i)]; }
  // alpha_i^vee as a functional on lattice-basis coordinates.
  const RVec& simple_coroot_row(int i) const { return simple_coroot_rows_[static_cast<std::size_t>(i)]; }
  // Matrix of s_i on lattice-basis coordinates.
  const RMat& simple_reflection(int i) const { return refl_[static_cast<std::size_t>(i)]; }

  RingElem pair_simple(int i, const RVec& v) const {
    RingElem acc = RingElem::zero(ring_);
    for (int j = 0; j < rank(); ++j) acc += simple_coroot_rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
    return acc;
  }
  FieldElem pair_simple(int i, const QVec& v) const {
    FieldElem acc = FieldElem::zero(ring_);
    for (int j = 0; j < rank(); ++j) acc += FieldElem(simple_coroot_rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * v[static_cast<std::size_t>(j)];
    return acc;
  }

  const std::vector<RootInfo>& roots() const { return roots_; }
  const std::vector<int>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  // Index of a root by its lattice coordinates; -1 if not a root.
  int root_index(const RVec& v) const {
    auto it = root_index_.find(key_of(v));
    return it == root_index_.end() ? -1 : it->second;
  }

  // (index of |beta|, sign) for an arbitrary root index.
  std::pair<int, int> positive_part(int ri) const {
    if (roots_[static_cast<std::size_t>(ri)].positive) return {ri, 1};
    RVec neg = roots_[static_cast<std::size_t>(ri)].coords;
    for (auto& c : neg) c = -c;
    int k = root_index(neg);
    if (k < 0) throw invariant_error("root set not closed under negation");
    return {k, -1};
  }

  // beta^vee(lambda) for the root with index ri.
  RingElem pairing(int ri, const RVec& v) const {
    const auto& row = roots_[static_cast<std::size_t>(ri)].coroot_row;
    RingElem acc = RingElem::zero(ring_);
    for (int j = 0; j < rank(); ++j) acc += row[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
    return acc;
  }
  FieldElem pairing(int ri, const QVec& v) const {
    const auto& row = roots_[static_cast<std::size_t>(ri)].coroot_row;
    FieldElem acc = FieldElem::zero(ring_);
    for (int j = 0; j < rank(); ++j) acc += FieldElem(row[static_cast<std::size_t>(j)]) * v[static_cast<std::size_t>(j)];
    return acc;
  }

  // Reflection matrix of an arbitrary root: s_beta = id - beta (beta^vee . )
  RMat reflection(int ri) const {
    const auto& info = roots_[static_cast<std::size_t>(ri)];
    RMat M = detail::rmat_identity(ring_, rank());
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= info.coords[static_cast<std::size_t>(i)] * info.coroot_row[static_cast<std::size_t>(j)];
    return M;
  }

  // omega_i in lattice-basis coordinates (exact over K).
  const QVec& fundamental_weight(int i) const { return fundamental_[static_cast<std::size_t>(i)]; }
  // |lattice_w / lattice_r| = |N(det C)|
  const Int& lattice_index() const { return lattice_index_; }

  // Coxeter exponent m_{ij} read off the Cartan matrix: the m with
  // 4cos^2(pi/m) = c_ij c_ji, certified exactly via the minimal polynomial
  // of 2cos(2pi/m).
  int coxeter_exponent(int i, int j, int cap = 1000) const {
    if (i == j) return 1;
    RingElem prod = cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * cartan_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    if (prod.is_zero()) return 2;
    // numeric candidate
    double val = 0, p = 1;
    for (int k = 0; k < ring_->degree(); ++k) {
      val += static_cast<double>(prod.coords()[static_cast<std::size_t>(k)]) * p;
      p *= ring_->embedding_approx();
    }
    for (int mm = 3; mm <= cap; ++mm) {
      double target = 4.0 * std::pow(std::cos(3.14159265358979323846 / mm), 2);
      if (std::abs(target - val) < 1e-9) {
        if (certify_exponent(prod, mm)) return mm;
      }
    }
    throw ring_error("coxeter_exponent: no m in 2..cap matches");
  }

  std::string describe() const;

  std::string root_to_string(int ri) const {
    // rendered in simple-root coordinates
    const auto& ac = roots_[static_cast<std::size_t>(ri)].alpha_coords;
    std::string out;
    bool first = true;
    for (int j = 0; j < rank(); ++j) {
      if (ac[static_cast<std::size_t>(j)].is_zero()) continue;
      std::string c = ac[static_cast<std::size_t>(j)].to_string();
      std::string term;
      if (c == "1") term = "";
      else if (c == "-1") term = "-";
      else if (c.find_first_of("+- ", 1) != std::string::npos) term = "(" + c + ")*";
      else term = c + "*";
      term += "a" + std::to_string(j + 1);
      if (first) { out = term; first = false; }
      else if (!term.empty() && term[0] == '-') out += " - " + term.substr(1);
      else out += " + " + term;
    }
    return first ? "0" : out;
  }

 private:
  static std::string key_of(const RVec& v) {
    std::string k;
    for (const auto& c : v) {
      for (const auto& x : c.coords()) k += x.str() + ",";
      k += ";";
    }
    return k;
  }

  bool certify_exponent(const RingElem& prod, int mm) const {
    // prod - 2 must equal 2cos(2pi/mm): check its minimal polynomial
    // vanishes and that the embedding value matches numerically.
    RingPtr psi_ring;
    try {
      psi_ring = (mm % 2 == 0) ? minpoly_2cos(mm / 2) : nullptr;
    } catch (...) {
      psi_ring = nullptr;
    }
    // minimal polynomial of 2cos(2pi/mm):
    std::vector<Int> psi;
    if (mm % 2 == 0) psi = minpoly_2cos(mm / 2)->minpoly();
    else {
      // 2cos(2pi/mm) = 2cos(pi k / mm)... use cyclotomic at mm directly
      detail::ZPoly phi = detail::cyclotomic(mm);
      std::size_t D = (phi.size() - 1) / 2;
      detail::ZPoly out(D + 1);
      detail::ZPoly Cprev{Int(2)}, Ccur{Int(0), Int(1)};
      out[0] = phi[D];
      for (std::size_t k = 1; k <= D; ++k) {
        if (k >= 2) {
          detail::ZPoly nxt = detail::zp_mul(detail::ZPoly{Int(0), Int(1)}, Ccur);
          for (std::size_t j = 0; j < Cprev.size(); ++j) nxt[j] -= Cprev[j];
          detail::zp_trim(nxt);
          Cprev = std::move(Ccur);
          Ccur = std::move(nxt);
        }
        if (phi[D + k] == 0) continue;
        for (std::size_t j = 0; j < Ccur.size(); ++j) out[j] += phi[D + k] * Ccur[j];
      }
      psi = std::move(out);
    }
    RingElem q = prod - RingElem::from_int(ring_, 2);
    // evaluate psi at q inside O_F
    RingElem acc = RingElem::zero(ring_);
    for (std::size_t k = psi.size(); k-- > 0;) {
      acc = acc * q + RingElem::from_int(ring_, psi[k]);
    }
    return acc.is_zero();
  }

  void build_ring_and_cartan();
  void build_simple_reflections() {
    const int n = rank();
    refl_.clear();
    for (int i = 0; i < n; ++i) {
      RMat M = detail::rmat_identity(ring_, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
              simple_roots_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
              simple_coroot_rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      refl_.push_back(std::move(M));
    }
  }

  void build_roots(std::size_t cap);
  void build_weights();

  RootDatumSpec spec_;
  RingPtr ring_;
  RMat cartan_;
  std::vector<RVec> simple_roots_;
  std::vector<RVec> simple_coroot_rows_;
  std::vector<RMat> refl_;
  std::vector<RootInfo> roots_;
  std::vector<int> positive_;
  std::map<std::string, int> root_index_;
  std::vector<QVec> fundamental_;
  Int lattice_index_;
};

inline void RootDatum::build_ring_and_cartan() {
  const int n = spec_.rank;
  auto bad = [&](const std::string& why) { return ring_error("invalid root datum: " + why); };
  // integer Cartan entries for the crystallographic families
  std::vector<std::vector<int>> ic(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto chain = [&](int upto) {
    for (int i = 0; i < upto; ++i) ic[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    for (int i = 0; i + 1 < upto; ++i) {
      ic[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
      ic[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
    }
  };
  switch (spec_.family) {
    case Family::A:
      if (n < 1) throw bad("A needs rank >= 1");
      ring_ = integer_ring();
      chain(n);
      break;
    case Family::B:
      if (n < 2) throw bad("B needs rank >= 2");
      ring_ = integer_ring();
      chain(n);
      ic[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = -2;  // alpha_n short
      break;
    case Family::C:
      if (n < 2) throw bad("C needs rank >= 2");
      ring_ = integer_ring();
      chain(n);
      ic[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = -2;  // alpha_n long
      break;
    case Family::D:
      if (n < 4) throw bad("D needs rank >= 4");
      ring_ = integer_ring();
      chain(n - 1);
      ic[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)] = 2;
      ic[static_cast<std::size_t>(n - 3)][static_cast<std::size_t>(n - 1)] = -1;
      ic[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 3)] = -1;
      break;
    case Family::E: {
      if (n < 6 || n > 8) throw bad("E needs rank 6..8");
      ring_ = integer_ring();
      // Bourbaki: chain 1-3-4-5-...-n with 2 attached to 4.
      for (int i = 0; i < n; ++i) ic[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
      auto link = [&](int a, int b) {
        ic[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = -1;
        ic[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = -1;
      };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int v = 4; v < n; ++v) link(v, v + 1);
      break;
    }
    case Family::F:
      if (n != 4) throw bad("F needs rank 4");
      ring_ = integer_ring();
      chain(4);
      ic[1][2] = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      if (n != 2) throw bad("G needs rank 2");
      ring_ = integer_ring();
      ic = {{2, -3}, {-1, 2}};
      break;
    case Family::I2Normalized: {
      if (n != 2) throw bad("I2 has rank 2");
      if (spec_.m < 2) throw bad("I2 needs m >= 2");
      ring_ = minpoly_2cos(spec_.m);
      cartan_.assign(2, RVec(2, RingElem::zero(ring_)));
      cartan_[0][0] = cartan_[1][1] = RingElem::from_int(ring_, 2);
      cartan_[0][1] = cartan_[1][0] = -RingElem::tau(ring_);
      break;
    }
    case Family::I2Polarized: {
      if (n != 2) throw bad("I2 has rank 2");
      if (spec_.m < 2) throw bad("I2 needs m >= 2");
      if (spec_.m % 2 != 0 && spec_.m != 3)
        throw bad("polarized I2(m) exists only for even m or m = 3");
      if (spec_.m == 2) ring_ = integer_ring();
      else if (spec_.m == 3) ring_ = minpoly_2cos(3);
      else ring_ = minpoly_2cos(spec_.m / 2);
      cartan_.assign(2, RVec(2, RingElem::zero(ring_)));
      cartan_[0][0] = cartan_[1][1] = RingElem::from_int(ring_, 2);
      if (spec_.m == 2) {
        // a = b = 0
      } else if (spec_.m == 3) {
        cartan_[0][1] = RingElem::from_int(ring_, -1);
        cartan_[1][0] = RingElem::from_int(ring_, -1);
      } else {
        // tau_m^2 = 2 + tau_{m/2}
        cartan_[0][1] = -(RingElem::from_int(ring_, 2) + RingElem::tau(ring_));
        cartan_[1][0] = RingElem::from_int(ring_, -1);
      }
      break;
    }
    case Family::H: {
      if (n != 3 && n != 4) throw bad("H needs rank 3 or 4");
      ring_ = minpoly_2cos(5);
      cartan_.assign(static_cast<std::size_t>(n), RVec(static_cast<std::size_t>(n), RingElem::zero(ring_)));
      for (int i = 0; i < n; ++i) cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = RingElem::from_int(ring_, 2);
      cartan_[0][1] = cartan_[1][0] = -RingElem::tau(ring_);
      for (int i = 1; i + 1 < n; ++i) {
        cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = RingElem::from_int(ring_, -1);
        cartan_[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = RingElem::from_int(ring_, -1);
      }
      break;
    }
  }
  if (cartan_.empty()) {
    cartan_.assign(static_cast<std::size_t>(n), RVec(static_cast<std::size_t>(n), RingElem::zero(ring_)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = RingElem::from_int(ring_, ic[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }

  // lattice-basis data
  simple_roots_.clear();
  simple_coroot_rows_.clear();
  for (int i = 0; i < n; ++i) {
    RVec root(static_cast<std::size_t>(n), RingElem::zero(ring_));
    RVec crow(static_cast<std::size_t>(n), RingElem::zero(ring_));
    if (spec_.lattice == Lattice::Root) {
      root[static_cast<std::size_t>(i)] = RingElem::from_int(ring_, 1);
      for (int j = 0; j < n; ++j) crow[static_cast<std::size_t>(j)] = cartan_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    } else {
      // alpha_i = sum_j c_{ij} omega_j ; alpha_i^vee(omega_j) = delta_ij
      for (int j = 0; j < n; ++j) root[static_cast<std::size_t>(j)] = cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      crow[static_cast<std::size_t>(i)] = RingElem::from_int(ring_, 1);
    }
    simple_roots_.push_back(std::move(root));
    simple_coroot_rows_.push_back(std::move(crow));
  }
}

inline void RootDatum::build_roots(std::size_t cap) {
  const int n = rank();
  roots_.clear();
  positive_.clear();
  root_index_.clear();

  // Simple-root coordinates need C^t-inversion for weight-basis data; compute
  // alpha-coordinates of a lattice vector exactly over K.
  auto alpha_coords_of = [&](const RVec& v) -> QVec {
    if (spec_.lattice == Lattice::Root) {
      QVec out;
      out.reserve(static_cast<std::size_t>(n));
      for (const auto& c : v) out.emplace_back(c);
      return out;
    }
    // solve (C^t) a = v  i.e.  v_j = sum_i a_i c_{ij}
    std::vector<std::vector<FieldElem>> M(static_cast<std::size_t>(n),
                                          std::vector<FieldElem>(static_cast<std::size_t>(n + 1), FieldElem::zero(ring_)));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = FieldElem(cartan_[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
      M[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)] = FieldElem(v[static_cast<std::size_t>(r)]);
    }
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) { piv = r; break; }
      if (piv < 0) throw invariant_error("Cartan matrix not invertible");
      std::swap(M[static_cast<std::size_t>(col)], M[static_cast<std::size_t>(piv)]);
      FieldElem d = M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (int c = col; c <= n; ++c) M[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= d;
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        FieldElem f = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (f.is_zero()) continue;
        for (int c = col; c <= n; ++c)
          M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= f * M[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      }
    }
    QVec out;
    out.reserve(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) out.push_back(M[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)]);
    return out;
  };

  auto classify = [&](const QVec& ac) -> bool {
    // all coordinates >= 0 -> positive; all <= 0 -> negative; else abort
    bool has_pos = false, has_neg = false;
    for (const auto& c : ac) {
      int s = c.sign();
      if (s > 0) has_pos = true;
      if (s < 0) has_neg = true;
    }
    if (has_pos && has_neg)
      throw invariant_error("root with mixed-sign simple-root coordinates");
    return has_pos;
  };

  struct Pending {
    RVec coords;
    std::vector<int> word;
    int base;
  };
  std::vector<Pending> queue;
  for (int i = 0; i < n; ++i) queue.push_back({simple_roots_[static_cast<std::size_t>(i)], {}, i});

  std::size_t head = 0;
  while (head < queue.size()) {
    Pending cur = queue[head++];
    std::string k = key_of(cur.coords);
    if (root_index_.count(k)) continue;
    if (roots_.size() >= cap) throw ring_error("all_roots: orbit exceeds cap");
    RootInfo info;
    info.coords = cur.coords;
    info.alpha_coords = alpha_coords_of(cur.coords);
    info.positive = classify(info.alpha_coords);
    info.word = cur.word;
    info.base = cur.base;
    // coroot row: alpha_base^vee composed with w^{-1} = s_{w_k} ... s_{w_1}
    {
      RMat winv = detail::rmat_identity(ring_, n);
      for (auto it = cur.word.rbegin(); it != cur.word.rend(); ++it)
        winv = detail::rmat_mul(winv, refl_[static_cast<std::size_t>(*it)]);
      // row = simple_coroot_row(base) * winv
      RVec row(static_cast<std::size_t>(n), RingElem::zero(ring_));
      for (int j = 0; j < n; ++j)
        for (int t = 0; t < n; ++t)
          row[static_cast<std::size_t>(j)] += simple_coroot_rows_[static_cast<std::size_t>(cur.base)][static_cast<std::size_t>(t)] * winv[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
      info.coroot_row = std::move(row);
    }
    int idx = static_cast<int>(roots_.size());
    root_index_[k] = idx;
    roots_.push_back(std::move(info));
    if (roots_[static_cast<std::size_t>(idx)].positive) positive_.push_back(idx);

    for (int i = 0; i < n; ++i) {
      RVec img = detail::rmat_apply(refl_[static_cast<std::size_t>(i)], roots_[static_cast<std::size_t>(idx)].coords);
      if (!root_index_.count(key_of(img))) {
        std::vector<int> w{i};
        w.insert(w.end(), roots_[static_cast<std::size_t>(idx)].word.begin(), roots_[static_cast<std::size_t>(idx)].word.end());
        queue.push_back({std::move(img), std::move(w), roots_[static_cast<std::size_t>(idx)].base});
      }
    }
  }
}

inline void RootDatum::build_weights() {
  const int n = rank();
  fundamental_.clear();
  // omega_i: lattice-basis coordinates.  For weight data it is e_i; for root
  // data solve alpha_j = sum_k c_{jk} omega_k, i.e. omega = C^{-1} alpha.
  if (spec_.lattice == Lattice::Weight) {
    for (int i = 0; i < n; ++i) {
      QVec v(static_cast<std::size_t>(n), FieldElem::zero(ring_));
      v[static_cast<std::size_t>(i)] = FieldElem::from_rat(ring_, 1);
      fundamental_.push_back(std::move(v));
    }
  } else {
    // invert C over K: omega_i = sum_j (C^{-1})_{ij} alpha_j
    std::vector<std::vector<FieldElem>> M(static_cast<std::size_t>(n),
                                          std::vector<FieldElem>(static_cast<std::size_t>(2 * n), FieldElem::zero(ring_)));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = FieldElem(cartan_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      M[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + r)] = FieldElem::from_rat(ring_, 1);
    }
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) { piv = r; break; }
      if (piv < 0) throw invariant_error("Cartan matrix not invertible");
      std::swap(M[static_cast<std::size_t>(col)], M[static_cast<std::size_t>(piv)]);
      FieldElem d = M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (int c = col; c < 2 * n; ++c) M[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= d;
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        FieldElem f = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (f.is_zero()) continue;
        for (int c = col; c < 2 * n; ++c)
          M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= f * M[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      }
    }
    for (int i = 0; i < n; ++i) {
      QVec v;
      v.reserve(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) v.push_back(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)]);
      fundamental_.push_back(std::move(v));
    }
  }
  // determinant of C, then its field norm
  {
    const int d = ring_->degree();
    RingElem det = RingElem::from_int(ring_, 1);
    // fraction-free enough at this size: use field elimination and certify
    std::vector<std::vector<FieldElem>> A(static_cast<std::size_t>(n), std::vector<FieldElem>(static_cast<std::size_t>(n), FieldElem::zero(ring_)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = FieldElem(cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    FieldElem fdet = FieldElem::from_rat(ring_, 1);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) { piv = r; break; }
      if (piv < 0) { fdet = FieldElem::zero(ring_); break; }
      if (piv != col) { std::swap(A[static_cast<std::size_t>(piv)], A[static_cast<std::size_t>(col)]); fdet = -fdet; }
      fdet *= A[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (int r = col + 1; r < n; ++r) {
        FieldElem f = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / A[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        if (f.is_zero()) continue;
        for (int c = col; c < n; ++c)
          A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= f * A[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      }
    }
    auto w = fdet.as_integral();
    if (!w) throw invariant_error("Cartan determinant not integral");
    det = *w;
    Int nrm = det.norm();
    lattice_index_ = nrm < 0 ? -nrm : nrm;
    (void)d;
  }
}

// --- spec-string parsing: A3, B2, I2(7):normalized, H3, suffix @root/@weight

inline RootDatumSpec parse_type_spec(const std::string& s) {
  RootDatumSpec spec;
  std::string body = s;
  auto at = body.find('@');
  if (at != std::string::npos) {
    std::string lat = body.substr(at + 1);
    body = body.substr(0, at);
    if (lat == "root") spec.lattice = Lattice::Root;
    else if (lat == "weight") spec.lattice = Lattice::Weight;
    else throw ring_error("unknown lattice suffix '" + lat + "' (use @root or @weight)");
  }
  if (body.empty()) throw ring_error("empty type spec");
  char fam = body[0];
  if (fam == 'I') {
    // I2(m)[:normalized|:polarized]
    auto open = body.find('('), close = body.find(')');
    if (body.rfind("I2(", 0) != 0 || close == std::string::npos)
      throw ring_error("malformed I2 spec, expected I2(m):normalized or I2(m):polarized");
    spec.rank = 2;
    spec.m = std::stoi(body.substr(open + 1, close - open - 1));
    std::string variant = body.substr(close + 1);
    if (variant.empty() || variant == ":normalized") spec.family = Family::I2Normalized;
    else if (variant == ":polarized") spec.family = Family::I2Polarized;
    else throw ring_error("unknown I2 variant '" + variant + "'");
    return spec;
  }
  static const std::map<char, Family> fams{{'A', Family::A}, {'B', Family::B}, {'C', Family::C},
                                           {'D', Family::D}, {'E', Family::E}, {'F', Family::F},
                                           {'G', Family::G}, {'H', Family::H}};
  auto it = fams.find(fam);
  if (it == fams.end()) throw ring_error(std::string("unknown family '") + fam + "'");
  spec.family = it->second;
  spec.rank = std::stoi(body.substr(1));
  return spec;
}

inline std::string RootDatum::describe() const {
  std::string f;
  switch (spec_.family) {
    case Family::A: f = "A"; break;
    case Family::B: f = "B"; break;
    case Family::C: f = "C"; break;
    case Family::D: f = "D"; break;
    case Family::E: f = "E"; break;
    case Family::F: f = "F"; break;
    case Family::G: f = "G"; break;
    case Family::H: f = "H"; break;
    case Family::I2Normalized: return "I2(" + std::to_string(spec_.m) + "):normalized";
    case Family::I2Polarized: return "I2(" + std::to_string(spec_.m) + "):polarized";
  }
  return f + std::to_string(spec_.rank);
}

}  // namespace nilhecke
