#pragma once

#include "lattice.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace delpezzo {

enum class CurveKind { MinusOne, MinusTwo };

struct CurveClass {
  Vec cls;
  CurveKind kind;
  int id = -1;
};

struct NegativeCurveSet {
  std::vector<CurveClass> minus_one;  // ids 0 .. |E|-1
  std::vector<CurveClass> minus_two;  // ids |E| .. |E|+|A|-1

  const CurveClass& by_id(int id) const {
    if (id >= 0 && id < (int)minus_one.size()) return minus_one[id];
    int j = id - (int)minus_one.size();
    if (j >= 0 && j < (int)minus_two.size()) return minus_two[j];
    throw std::invalid_argument("curve id out of range: " + std::to_string(id));
  }

  int size() const { return (int)(minus_one.size() + minus_two.size()); }

  std::vector<const CurveClass*> all() const {
    std::vector<const CurveClass*> r;
    for (auto& c : minus_one) r.push_back(&c);
    for (auto& c : minus_two) r.push_back(&c);
    return r;
  }
};

namespace detail {

// All integer vectors v of length n+1 with v*v = sq and -K*v = deg.
// DFS over the E-coordinates with a Cauchy-Schwarz feasibility prune:
// the remaining entries must realize sum T with square sum S, needing
// T^2 <= k*S where k entries remain.
inline void enumerate_classes_rec(int n, int pos, std::int64_t sum_left,
                                  std::int64_t sq_left, Vec& cur,
                                  std::vector<Vec>& out) {
  int k = n - pos + 1;  // entries cur[pos..n] still free
  if (k == 0) {
    if (sum_left == 0 && sq_left == 0) out.push_back(cur);
    return;
  }
  if (sq_left < 0) return;
  if (sum_left * sum_left > (std::int64_t)k * sq_left) return;
  std::int64_t bound = 0;
  while (bound * bound <= sq_left) ++bound;
  --bound;
  for (std::int64_t c = -bound; c <= bound; ++c) {
    cur[pos] = c;
    enumerate_classes_rec(n, pos + 1, sum_left - c, sq_left - c * c, cur, out);
  }
  cur[pos] = 0;
}

// v = (a, s_1..s_n); v^2 = a^2 - sum s_i^2 = sq; -K*v = 3a + sum s_i = deg.
inline std::vector<Vec> enumerate_classes(int n, std::int64_t sq,
                                          std::int64_t deg) {
  if (n < 0 || n > 8) throw std::invalid_argument("enumerate: n out of range");
  std::vector<Vec> out;
  // a^2 - sq = sum s_i^2 and sum s_i = deg - 3a; Cauchy-Schwarz bounds a.
  for (std::int64_t a = -12; a <= 12; ++a) {
    std::int64_t sqsum = a * a - sq;
    if (sqsum < 0) continue;
    std::int64_t t = deg - 3 * a;
    if (n == 0) {
      if (sqsum == 0 && t == 0) out.push_back(Vec{a});
      continue;
    }
    if (t * t > (std::int64_t)n * sqsum) continue;
    Vec cur(n + 1, 0);
    cur[0] = a;
    enumerate_classes_rec(n, 1, t, sqsum, cur, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline std::vector<Vec> enumerate_minus_one_candidates(int n) {
  return detail::enumerate_classes(n, -1, 1);
}

inline std::vector<Vec> enumerate_root_candidates(int n) {
  return detail::enumerate_classes(n, -2, 0);
}

inline bool is_root(const PicardLattice& lat, const Vec& v) {
  return lat.self_intersection(v) == -2 && lat.anticanonical_degree(v) == 0;
}

inline bool is_minus_one_class(const PicardLattice& lat, const Vec& v) {
  return lat.self_intersection(v) == -1 && lat.anticanonical_degree(v) == 1;
}

// Saturation closure: all roots that are nonnegative integer combinations of
// the given simple roots. Adding one simple root at a time reaches every
// positive root of the generated subsystem.
inline std::vector<Vec> effective_positive_roots(const PicardLattice& lat,
                                                 const std::vector<Vec>& simple_roots) {
  for (auto& a : simple_roots)
    if (!is_root(lat, a)) throw std::invalid_argument("not a root: " + class_to_string(a));
  std::set<Vec> closure(simple_roots.begin(), simple_roots.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Vec> snapshot(closure.begin(), closure.end());
    for (auto& b : snapshot)
      for (auto& a : simple_roots) {
        Vec s = vec_add(b, a);
        if (is_root(lat, s) && !closure.count(s)) {
          closure.insert(s);
          changed = true;
        }
      }
  }
  return {closure.begin(), closure.end()};
}

inline std::vector<Vec> irreducible_minus_one_classes(const PicardLattice& lat,
                                                      const std::vector<Vec>& simple_roots) {
  auto eff = effective_positive_roots(lat, simple_roots);
  std::vector<Vec> out;
  for (auto& v : enumerate_minus_one_candidates(lat.n)) {
    bool ok = true;
    for (auto& a : eff)
      if (lat.pairing(v, a) < 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(v);
  }
  return out;
}

inline NegativeCurveSet make_negative_curve_set(const PicardLattice& lat,
                                                std::vector<Vec> simple_roots) {
  std::sort(simple_roots.begin(), simple_roots.end());
  NegativeCurveSet s;
  int id = 0;
  for (auto& v : irreducible_minus_one_classes(lat, simple_roots))
    s.minus_one.push_back({v, CurveKind::MinusOne, id++});
  for (auto& a : simple_roots)
    s.minus_two.push_back({a, CurveKind::MinusTwo, id++});
  return s;
}

}  // namespace delpezzo
