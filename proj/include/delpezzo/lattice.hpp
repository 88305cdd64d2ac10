#pragma once

#include "rational.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace delpezzo {

// A divisor class is its coefficient vector in the basis (H, E_1, ..., E_n).
// Entries are tiny (|entry| <= ~20) so int64 never overflows.
using Vec = std::vector<std::int64_t>;

struct PicardLattice {
  int n = 0;  // number of blown-up points, 0..8

  explicit PicardLattice(int n_) : n(n_) {
    if (n < 0 || n > 8) throw std::invalid_argument("lattice: n must be in [0,8]");
  }

  int rank() const { return n + 1; }

  void check(const Vec& v) const {
    if ((int)v.size() != rank())
      throw std::invalid_argument("lattice: dimension mismatch");
  }

  std::int64_t pairing(const Vec& a, const Vec& b) const {
    check(a);
    check(b);
    std::int64_t s = a[0] * b[0];
    for (int i = 1; i <= n; ++i) s -= a[i] * b[i];
    return s;
  }

  Vec canonical_class() const {
    Vec k(rank(), 1);
    k[0] = -3;
    return k;
  }

  Vec anticanonical_class() const {
    Vec k(rank(), -1);
    k[0] = 3;
    return k;
  }

  std::int64_t anticanonical_degree(const Vec& v) const {
    return pairing(anticanonical_class(), v);
  }

  std::int64_t self_intersection(const Vec& v) const { return pairing(v, v); }
};

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vec vec_scale(std::int64_t c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool vec_is_zero(const Vec& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

// Basis vectors: H = e(0), E_i = e(i).
inline Vec basis_vec(int rank, int i) {
  Vec v(rank, 0);
  v.at(i) = 1;
  return v;
}

// Renders e.g. "2H-E1-E2" from raw coefficients.
inline std::string class_to_string(const Vec& v) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](std::int64_t c, const std::string& sym) {
    if (c == 0) return;
    if (c > 0 && !first) os << "+";
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << c;
    os << sym;
    first = false;
  };
  emit(v[0], "H");
  for (size_t i = 1; i < v.size(); ++i) emit(v[i], "E" + std::to_string(i));
  if (first) os << "0";
  return os.str();
}

// A formal rational combination of divisor classes.
struct RationalDivisor {
  std::vector<std::pair<Vec, Rat>> terms;

  void add(const Vec& cls, const Rat& coeff) { terms.emplace_back(cls, coeff); }

  // Exact rational class sum as a vector of rationals.
  std::vector<Rat> class_sum(int rank) const {
    std::vector<Rat> s(rank, Rat(0));
    for (auto& [cls, c] : terms) {
      if ((int)cls.size() != rank)
        throw std::invalid_argument("rational divisor: dimension mismatch");
      for (int i = 0; i < rank; ++i) s[i] += c * Rat(cls[i]);
    }
    return s;
  }

  Rat coefficient_sum() const {
    Rat s(0);
    for (auto& [cls, c] : terms) s += c;
    return s;
  }
};

inline Rat rational_pairing(const std::vector<Rat>& a, const Vec& b) {
  Rat s = a[0] * Rat(b[0]);
  for (size_t i = 1; i < a.size(); ++i) s -= a[i] * Rat(b[i]);
  return s;
}

}  // namespace delpezzo
