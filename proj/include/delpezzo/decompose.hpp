#pragma once

#include "graph.hpp"
#include "lp.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace delpezzo {

struct Decomposition {
  std::vector<std::pair<int, std::int64_t>> terms;  // (curve id, coefficient>0)
  Vec target;

  bool operator==(const Decomposition&) const = default;
};

namespace detail {

// Unique expression of v in the span of the (independent) simple roots.
// Returns the integer coefficient vector when it exists and is a nonnegative
// integer combination; otherwise nullopt.
inline std::optional<std::vector<std::int64_t>> solve_in_root_span(
    const std::vector<Vec>& roots, const Vec& v) {
  size_t k = roots.size();
  size_t dim = v.size();
  // Solve sum x_i roots[i] = v by rational elimination on the transpose.
  std::vector<std::vector<Rat>> M(dim, std::vector<Rat>(k + 1, Rat(0)));
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < k; ++j) M[i][j] = Rat(roots[j][i]);
    M[i][k] = Rat(v[i]);
  }
  size_t row = 0;
  std::vector<int> pivot_col(k, -1);
  for (size_t c = 0; c < k && row < dim; ++c) {
    size_t p = row;
    while (p < dim && M[p][c] == Rat(0)) ++p;
    if (p == dim) continue;
    std::swap(M[row], M[p]);
    Rat pv = M[row][c];
    for (size_t j = 0; j <= k; ++j) M[row][j] /= pv;
    for (size_t i = 0; i < dim; ++i) {
      if (i == row || M[i][c] == Rat(0)) continue;
      Rat f = M[i][c];
      for (size_t j = 0; j <= k; ++j) M[i][j] -= f * M[row][j];
    }
    pivot_col[c] = (int)row;
    ++row;
  }
  std::vector<std::int64_t> x(k, 0);
  for (size_t c = 0; c < k; ++c) {
    if (pivot_col[c] < 0) return std::nullopt;  // dependent set not expected
    Rat val = M[pivot_col[c]][k];
    if (!is_integer(val) || val < Rat(0)) return std::nullopt;
    x[c] = (std::int64_t)val.numerator();
  }
  // Consistency: rows without pivots must be zero.
  for (size_t i = row; i < dim; ++i)
    if (M[i][k] != Rat(0)) return std::nullopt;
  return x;
}

}  // namespace detail

// All effective integer decompositions of L over D(Y). Every (-1)-curve has
// -K-degree 1 and roots have 0, so the (-1)-part is a multiset of exactly
// -K.L curves; the root part is then uniquely determined by linear algebra.
inline std::vector<Decomposition> decompositions_of(const SurfaceSpec& spec,
                                                    const Vec& L) {
  validate_spec(spec);
  PicardLattice lat = spec.lattice();
  std::int64_t m = lat.anticanonical_degree(L);
  if (m < 0) throw SpecError("decompositions_of: -K.L must be nonnegative");
  auto ncs = make_negative_curve_set(lat, spec.simple_roots);
  std::vector<Vec> roots;
  for (auto& a : ncs.minus_two) roots.push_back(a.cls);
  int ecount = (int)ncs.minus_one.size();

  std::vector<Decomposition> out;
  std::vector<int> pick;
  auto emit = [&]() {
    Vec rest = L;
    for (int id : pick) rest = vec_sub(rest, ncs.minus_one[id].cls);
    auto a = detail::solve_in_root_span(roots, rest);
    if (roots.empty() && !vec_is_zero(rest)) return;
    if (!roots.empty() && !a) return;
    Decomposition d;
    d.target = L;
    for (size_t i = 0; i < pick.size();) {
      size_t j = i;
      while (j < pick.size() && pick[j] == pick[i]) ++j;
      d.terms.push_back({pick[i], (std::int64_t)(j - i)});
      i = j;
    }
    if (a)
      for (size_t i = 0; i < roots.size(); ++i)
        if ((*a)[i] > 0) d.terms.push_back({ncs.minus_two[i].id, (*a)[i]});
    std::sort(d.terms.begin(), d.terms.end());
    out.push_back(d);
  };
  auto rec = [&](auto&& self, int start, std::int64_t left) -> void {
    if (left == 0) {
      emit();
      return;
    }
    for (int id = start; id < ecount; ++id) {
      pick.push_back(id);
      self(self, id, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
    return a.terms < b.terms;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

enum class FiberType { Type1, Type2, Type3, NonConforming };

// Shape check against Table-1 patterns for classes with L^2=0, -K.L=2.
inline FiberType classify_fiber_decomposition(const SurfaceSpec& spec,
                                              const DualGraph& g,
                                              const Decomposition& dec) {
  PicardLattice lat = spec.lattice();
  if (lat.self_intersection(dec.target) != 0 ||
      lat.anticanonical_degree(dec.target) != 2)
    throw SpecError("classify_fiber: target is not a fiber class");
  std::vector<int> e1, e2, a1, a2;  // (-1)/(-2) ids by coefficient 1/2
  for (auto& [id, c] : dec.terms) {
    bool mo = g.kind(id) == CurveKind::MinusOne;
    if (c == 1)
      (mo ? e1 : a1).push_back(id);
    else if (c == 2)
      (mo ? e2 : a2).push_back(id);
    else
      return FiberType::NonConforming;
  }
  auto adj = [&](int i, int j) { return g.mult[i][j] == 1; };

  if (e1.size() == 2 && e2.empty() && a2.empty()) {
    // Type 1: path E1 - A_1 - ... - A_l - E2.
    std::vector<int> chain = a1;
    if (chain.empty()) return adj(e1[0], e1[1]) ? FiberType::Type1 : FiberType::NonConforming;
    // Order the roots into a path between the two ends.
    std::vector<int> order;
    int prev = e1[0];
    std::vector<char> used(chain.size(), 0);
    for (size_t step = 0; step < chain.size(); ++step) {
      int next = -1;
      for (size_t i = 0; i < chain.size(); ++i)
        if (!used[i] && adj(prev, chain[i])) {
          if (next != -1) return FiberType::NonConforming;
          next = (int)i;
        }
      if (next == -1) return FiberType::NonConforming;
      used[next] = 1;
      order.push_back(chain[next]);
      prev = chain[next];
    }
    return adj(prev, e1[1]) ? FiberType::Type1 : FiberType::NonConforming;
  }
  if (e2.size() == 1 && e1.empty() && a2.empty() && a1.size() == 2) {
    // Type 2: 2E + A1 + A2 with E meeting both roots.
    if (adj(e2[0], a1[0]) && adj(e2[0], a1[1])) return FiberType::Type2;
    return FiberType::NonConforming;
  }
  if (e2.size() == 1 && e1.empty() && !a2.empty() && a1.size() == 2) {
    // Type 3: 2E + 2A_1 + ... + 2A_l + A_{l+1} + A_{l+2}, fork at A_l.
    std::vector<int> chain = a2;
    int prev = e2[0];
    std::vector<char> used(chain.size(), 0);
    for (size_t step = 0; step < chain.size(); ++step) {
      int next = -1;
      for (size_t i = 0; i < chain.size(); ++i)
        if (!used[i] && adj(prev, chain[i])) {
          if (next != -1) return FiberType::NonConforming;
          next = (int)i;
        }
      if (next == -1) return FiberType::NonConforming;
      used[next] = 1;
      prev = chain[next];
    }
    if (adj(prev, a1[0]) && adj(prev, a1[1])) return FiberType::Type3;
    return FiberType::NonConforming;
  }
  return FiberType::NonConforming;
}

struct DenominatorResult {
  Rat value;                 // n(Y)
  std::vector<Rat> coeffs;   // witness over D(Y) node ids
};

// n(Y): minimize the maximum coefficient over rational decompositions of -K
// as a nonnegative combination of D(Y). Exact epigraph LP (min t, x_i <= t);
// the witness is refined to the lexicographically smallest optimal vector.
inline DenominatorResult denominator(const SurfaceSpec& spec) {
  validate_spec(spec);
  PicardLattice lat = spec.lattice();
  auto ncs = make_negative_curve_set(lat, spec.simple_roots);
  auto all = ncs.all();
  size_t k = all.size();
  if (k == 0) throw SpecError("denominator: D(Y) is empty");
  size_t rank = lat.rank();
  // Variables: x_0..x_{k-1}, t, slack_0..slack_{k-1} for x_i + s_i = t.
  size_t nv = 2 * k + 1;
  auto make_base = [&]() {
    std::vector<std::vector<Rat>> A(rank + k, std::vector<Rat>(nv, Rat(0)));
    std::vector<Rat> b(rank + k, Rat(0));
    Vec mk = lat.anticanonical_class();
    for (size_t r = 0; r < rank; ++r) {
      for (size_t i = 0; i < k; ++i) A[r][i] = Rat(all[i]->cls[r]);
      b[r] = Rat(mk[r]);
    }
    for (size_t i = 0; i < k; ++i) {
      A[rank + i][i] = Rat(1);
      A[rank + i][k] = Rat(-1);
      A[rank + i][k + 1 + i] = Rat(1);
    }
    return std::make_pair(A, b);
  };
  auto [A, b] = make_base();
  std::vector<Rat> c(nv, Rat(0));
  c[k] = Rat(1);
  LPResult r = solve_lp(A, b, c);
  if (r.status != LPResult::Status::Optimal)
    throw SpecError("denominator: -K is not in the nonnegative span of D(Y)");
  Rat t = r.objective;
  // Lexicographic refinement at fixed t: minimize x_0, then x_1, ...
  std::vector<Rat> fixed;
  for (size_t i = 0; i < k; ++i) {
    auto [A2, b2] = make_base();
    // t fixed.
    std::vector<Rat> row(nv, Rat(0));
    row[k] = Rat(1);
    A2.push_back(row);
    b2.push_back(t);
    for (size_t j = 0; j < fixed.size(); ++j) {
      std::vector<Rat> rw(nv, Rat(0));
      rw[j] = Rat(1);
      A2.push_back(rw);
      b2.push_back(fixed[j]);
    }
    std::vector<Rat> ci(nv, Rat(0));
    ci[i] = Rat(1);
    LPResult ri = solve_lp(A2, b2, ci);
    if (ri.status != LPResult::Status::Optimal)
      throw SpecError("denominator: refinement LP failed unexpectedly");
    fixed.push_back(ri.objective);
  }
  return {t, fixed};
}

// Classes standing in for prime divisors of nonnegative square and small
// anticanonical degree: v^2 >= 0, 1 <= -K.v <= bound, v.C >= 0 for all
// C in D(Y). Used to audit slave divisors and as movable boundary pieces.
inline std::vector<Vec> nef_audit_classes(const SurfaceSpec& spec,
                                          std::int64_t deg_bound = 3) {
  PicardLattice lat = spec.lattice();
  auto ncs = make_negative_curve_set(lat, spec.simple_roots);
  auto all = ncs.all();
  std::vector<Vec> out;
  for (std::int64_t deg = 1; deg <= deg_bound; ++deg)
    for (std::int64_t sq = 0; sq <= deg * deg; ++sq)
      for (auto& v : detail::enumerate_classes(lat.n, sq, deg)) {
        bool ok = true;
        for (auto* c : all)
          if (lat.pairing(v, c->cls) < 0) {
            ok = false;
            break;
          }
        if (ok) out.push_back(v);
      }
  std::sort(out.begin(), out.end());
  return out;
}

struct SlaveDivisor {
  std::vector<std::pair<int, Rat>> terms;  // coefficients over D(Y) node ids
};

enum class SlaveMode { Direct, Half };

struct SlaveBoundResult {
  Rat bound;       // certified upper bound on sigma'
  Rat base;        // -K . D_s
  Rat delta;       // correction from zero-pairing (-1)-curves and negative roots
  SlaveMode mode;  // which of the two estimates produced the bound
};

// Certified sigma' upper bound from a slave divisor.
// base = -K.D_s; delta counts the (-1)-curves with D_s.E = 0 plus the total
// negative pairing against (-2)-curves. Two estimates are available:
//   direct:  sigma' <= base + delta, sound when every audit class v has
//            D_s.v >= 1;
//   half:    sum e_j <= base + delta so sigma' <= (d + base + delta)/2,
//            sound when every audit class has D_s.v >= 0.
// The smaller sound estimate wins; no sound estimate is a certificate error.
inline SlaveBoundResult verify_slave_bound(const SurfaceSpec& spec,
                                           const SlaveDivisor& ds) {
  validate_spec(spec);
  PicardLattice lat = spec.lattice();
  auto ncs = make_negative_curve_set(lat, spec.simple_roots);
  size_t rank = lat.rank();
  RationalDivisor rd;
  for (auto& [id, c] : ds.terms) {
    if (c < Rat(0)) throw SpecError("slave divisor: negative coefficient");
    rd.add(ncs.by_id(id).cls, c);
  }
  auto cls = rd.class_sum((int)rank);
  Rat base = rational_pairing(cls, lat.anticanonical_class());
  Rat delta(0);
  for (auto& e : ncs.minus_one) {
    Rat p = rational_pairing(cls, e.cls);
    if (p < Rat(0))
      throw SpecError("slave divisor pairs negatively with the (-1)-curve " +
                      class_to_string(e.cls));
    if (p == Rat(0)) delta += Rat(1);
  }
  for (auto& a : ncs.minus_two) {
    Rat p = rational_pairing(cls, a.cls);
    if (p < Rat(0)) delta -= p;
  }
  bool direct_ok = true, half_ok = true;
  for (auto& v : nef_audit_classes(spec)) {
    Rat p = rational_pairing(cls, v);
    if (p < Rat(1)) direct_ok = false;
    if (p < Rat(0)) half_ok = false;
  }
  Rat direct = base + delta;
  Rat half = (Rat(spec.degree) + base + delta) / Rat(2);
  if (direct_ok && (!half_ok || direct <= half))
    return {direct, base, delta, SlaveMode::Direct};
  if (half_ok) return {half, base, delta, SlaveMode::Half};
  throw SpecError("slave divisor certificate invalid: an audit class pairs negatively");
}

}  // namespace delpezzo
