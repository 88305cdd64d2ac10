#pragma once

#include "complexity.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace delpezzo {

// Randomized but reproducible corpus of valid singular specs: root subsets
// per degree 2..6, rejection-sampled through validate_spec.
inline const std::vector<SurfaceSpec>& corpus_specs() {
  static const std::vector<SurfaceSpec> specs = [] {
    std::vector<SurfaceSpec> v;
    std::mt19937 rng(271828);
    for (int d = 2; d <= 6; ++d) {
      int n = 9 - d;
      auto cands = enumerate_root_candidates(n);
      // Positive representatives only (first nonzero coordinate positive).
      std::erase_if(cands, [](const Vec& c) {
        for (auto x : c) {
          if (x > 0) return false;
          if (x < 0) return true;
        }
        return true;
      });
      std::set<std::vector<Vec>> seen;
      int found = 0;
      for (int attempt = 0; attempt < 40000 && found < 100; ++attempt) {
        int k = 1 + (int)(rng() % (unsigned)n);
        std::vector<Vec> pick;
        std::set<size_t> idx;
        while ((int)idx.size() < k) idx.insert(rng() % cands.size());
        for (size_t i : idx) pick.push_back(cands[i]);
        std::sort(pick.begin(), pick.end());
        if (!seen.insert(pick).second) continue;
        SurfaceSpec s;
        s.degree = d;
        s.simple_roots = pick;
        try {
          validate_spec(s);
        } catch (const SpecError&) {
          continue;
        }
        v.push_back(s);
        ++found;
      }
    }
    return v;
  }();
  return specs;
}

struct CriterionResult {
  int number;
  std::string name;
  bool pass;
  std::string detail;
};

namespace selfcheck {

inline CriterionResult minus_one_counts() {
  const std::size_t want[9] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
  for (int n = 0; n <= 8; ++n) {
    auto got = enumerate_minus_one_candidates(n).size();
    if (got != want[n])
      return {1, "(-1)-class counts", false,
              "n=" + std::to_string(n) + ": got " + std::to_string(got)};
  }
  return {1, "(-1)-class counts", true, ""};
}

inline CriterionResult root_counts() {
  const std::size_t want[9] = {0, 0, 2, 8, 20, 40, 72, 126, 240};
  for (int n = 0; n <= 8; ++n) {
    auto got = enumerate_root_candidates(n).size();
    if (got != want[n])
      return {2, "root counts", false,
              "n=" + std::to_string(n) + ": got " + std::to_string(got)};
  }
  return {2, "root counts", true, ""};
}

inline CriterionResult smooth_values() {
  for (int d = 1; d <= 9; ++d) {
    ComplexityReport r = analyze(smooth_spec(d));
    Rat sig(std::min(d, 12 - d));
    Rat gam(std::max(0, 2 * (6 - d)));
    if (!r.exact() || r.sigma() != sig || r.gamma_lo() != gam)
      return {3, "smooth sigma/gamma", false, "d=" + std::to_string(d)};
  }
  SurfaceSpec q;
  q.degree = 8;
  q.model = Model::P1xP1;
  ComplexityReport r = analyze(q);
  if (!r.exact() || r.sigma() != Rat(4) || r.gamma_lo() != Rat(0))
    return {3, "smooth sigma/gamma", false, "P1xP1"};
  return {3, "smooth sigma/gamma", true, ""};
}

inline CriterionResult tables_golden() {
  for (auto& e : catalog_entries()) {
    SurfaceSpec spec = e.spec();
    ComplexityReport rep = analyze(spec);
    if (!rep.exact() || rep.gamma_lo() != e.gamma)
      return {4, "tree-surface tables", false, e.name + ": gamma mismatch"};
    DualGraph g = build_dual_graph(spec);
    auto iso = find_isomorphism(e, g);
    if (!iso) return {4, "tree-surface tables", false, e.name + ": template not matched"};
    PicardLattice lat = spec.lattice();
    RationalDivisor dk;
    for (size_t i = 0; i < e.dk.size(); ++i)
      dk.add(g.curves.by_id((*iso)[i]).cls, e.dk[i]);
    auto sum = dk.class_sum(lat.rank());
    Vec mk = lat.anticanonical_class();
    for (int r = 0; r < lat.rank(); ++r)
      if (sum[r] != Rat(mk[r]))
        return {4, "tree-surface tables", false, e.name + ": D_K does not resum to -K"};
    if (e.mode == CatalogEntry::Mode::Chained) {
      // sigma = 1 + c (sigma_parent - sigma) for a positive integer c.
      const CatalogEntry* parent = nullptr;
      for (auto& p : catalog_entries())
        if (p.name == e.chain_parent) parent = &p;
      if (!parent)
        return {4, "tree-surface tables", false, e.name + ": chain parent missing"};
      Rat c = (e.sigma() - Rat(1)) / (parent->sigma() - e.sigma());
      if (!is_integer(c) || c <= Rat(0))
        return {4, "tree-surface tables", false, e.name + ": chained bound fails"};
    } else {
      SlaveDivisor ds;
      for (size_t i = 0; i < e.slave.size(); ++i)
        if (e.slave[i] > Rat(0)) ds.terms.push_back({(*iso)[i], e.slave[i]});
      SlaveBoundResult sb = verify_slave_bound(spec, ds);
      if (sb.bound != e.sigma())
        return {4, "tree-surface tables", false,
                e.name + ": slave bound " + to_string(sb.bound) + " != sigma " +
                    to_string(e.sigma())};
    }
    if (!rep.certificate)
      return {4, "tree-surface tables", false, e.name + ": no boundary certificate"};
    std::string why;
    if (!verify_boundary_certificate(spec, *rep.certificate, e.sigma(), &why))
      return {4, "tree-surface tables", false, e.name + ": " + why};
  }
  return {4, "tree-surface tables", true, ""};
}

inline std::vector<const SurfaceSpec*> corpus_and_catalog() {
  static std::vector<SurfaceSpec> cat = [] {
    std::vector<SurfaceSpec> v;
    for (auto& e : catalog_entries())
      if (e.count_minus_two() > 0) v.push_back(e.spec());
    return v;
  }();
  std::vector<const SurfaceSpec*> out;
  for (auto& s : corpus_specs()) out.push_back(&s);
  for (auto& s : cat) out.push_back(&s);
  return out;
}

inline CriterionResult cycle_properties() {
  for (auto* s : corpus_and_catalog()) {
    DualGraph g = build_dual_graph(*s);
    if (!has_cycle(g)) continue;
    auto mn = find_min_content_cycle(g);
    if (!mn || mn->content < s->degree)
      return {5, "cycle content and complement", false,
              "degree " + std::to_string(s->degree) + ": content " +
                  std::to_string(mn ? mn->content : -1)};
    for (auto& cyc : cycles_with_content_at_most(g, s->degree)) {
      try {
        verify_cycle_complement(*s, g, cyc);
      } catch (const SpecError& err) {
        return {5, "cycle content and complement", false, err.what()};
      }
    }
  }
  return {5, "cycle content and complement", true, ""};
}

inline CriterionResult pairing_bounds() {
  for (auto* s : corpus_and_catalog()) {
    PicardLattice lat = s->lattice();
    auto ncs = make_negative_curve_set(lat, s->simple_roots);
    for (size_t i = 0; i < ncs.minus_one.size(); ++i)
      for (size_t j = i + 1; j < ncs.minus_one.size(); ++j) {
        std::int64_t p = lat.pairing(ncs.minus_one[i].cls, ncs.minus_one[j].cls);
        std::int64_t cap = s->degree >= 3 ? 1 : 2;
        if (p > cap)
          return {6, "(-1)-pairing bounds", false,
                  "degree " + std::to_string(s->degree) + " pairing " + std::to_string(p)};
        if (s->degree == 2 && p == 2) {
          Vec sum = vec_add(ncs.minus_one[i].cls, ncs.minus_one[j].cls);
          if (sum != lat.anticanonical_class())
            return {6, "(-1)-pairing bounds", false, "pairing-2 pair does not sum to -K"};
        }
      }
  }
  return {6, "(-1)-pairing bounds", true, ""};
}

inline CriterionResult fiber_decompositions() {
  for (auto* s : corpus_and_catalog()) {
    if (s->degree < 3) continue;
    PicardLattice lat = s->lattice();
    DualGraph g = build_dual_graph(*s);
    for (auto& L : detail::enumerate_classes(lat.n, 0, 2)) {
      // The classification only covers base-point-free classes; a class that
      // meets some curve of D(Y) negatively carries a fixed component and its
      // lattice decompositions are not fiber configurations.
      bool nef = true;
      for (auto* c : g.curves.all())
        if (lat.pairing(L, c->cls) < 0) { nef = false; break; }
      if (!nef) continue;
      for (auto& dec : decompositions_of(*s, L))
        if (classify_fiber_decomposition(*s, g, dec) == FiberType::NonConforming)
          return {7, "fiber decompositions", false,
                  "degree " + std::to_string(s->degree) + " class " + class_to_string(L)};
    }
  }
  return {7, "fiber decompositions", true, ""};
}

inline CriterionResult blowup_induction() {
  for (auto* s : corpus_and_catalog()) {
    int d = s->degree;
    if (d < 4 || d > 6) continue;
    if (!s->annotations.empty()) continue;
    DualGraph g = build_dual_graph(*s);
    auto mn = find_min_content_cycle(g);
    if (!mn || mn->content != d) continue;
    std::vector<PointSpec> points;
    points.push_back({});
    int ne = (int)g.curves.minus_one.size();
    for (int i = 0; i < ne; ++i) points.push_back({{i}});
    for (int i = 0; i < ne; ++i)
      for (int j = i + 1; j < ne; ++j)
        if (g.mult[i][j] >= 1) points.push_back({{i, j}});
    for (auto& p : points) {
      SurfaceSpec z;
      try {
        z = blow_up(*s, p);
      } catch (const SpecError&) {
        continue;  // not a legal point
      }
      DualGraph gz = build_dual_graph(z);
      auto mz = find_min_content_cycle(gz);
      if (!mz || mz->content != d - 1)
        return {8, "blow-up induction", false,
                "degree " + std::to_string(d) + ": no content-" + std::to_string(d - 1) +
                    " cycle after blow-up"};
      ComplexityReport rep = analyze(z, false);
      if (!rep.exact() || rep.sigma() != Rat(d - 1))
        return {8, "blow-up induction", false,
                "degree " + std::to_string(d) + ": sigma after blow-up not " +
                    std::to_string(d - 1)};
    }
  }
  return {8, "blow-up induction", true, ""};
}

inline CriterionResult lct_values() {
  // Tacnode: two (-1)-curves meeting twice with contact order 2.
  {
    SurfaceSpec s = smooth_spec(2);
    PicardLattice lat = s.lattice();
    auto ncs = make_negative_curve_set(lat, s.simple_roots);
    int a = -1, b = -1;
    for (size_t i = 0; i < ncs.minus_one.size() && a < 0; ++i)
      for (size_t j = i + 1; j < ncs.minus_one.size() && a < 0; ++j)
        if (lat.pairing(ncs.minus_one[i].cls, ncs.minus_one[j].cls) == 2) {
          a = (int)i;
          b = (int)j;
        }
    if (a < 0) return {9, "lct values", false, "no tangent pair found on degree 2"};
    IncidenceAnnotation ann;
    ann.point_id = 0;
    ann.members = {{a, 1}, {b, 1}};
    ann.contact = {{a, b, 2}};
    s.annotations.push_back(ann);
    BoundaryDivisor D;
    D.terms.push_back({a, Rat(1)});
    D.terms.push_back({b, Rat(1)});
    if (lct_pair(s, D) != Rat(3, 4))
      return {9, "lct values", false, "tacnode lct != 3/4"};
  }
  // Ordinary triple point: three concurrent lines on the cubic.
  {
    SurfaceSpec s = smooth_spec(3);
    PicardLattice lat = s.lattice();
    auto ncs = make_negative_curve_set(lat, s.simple_roots);
    int ids[3] = {-1, -1, -1};
    int ne = (int)ncs.minus_one.size();
    for (int i = 0; i < ne && ids[0] < 0; ++i)
      for (int j = i + 1; j < ne && ids[0] < 0; ++j)
        for (int k = j + 1; k < ne && ids[0] < 0; ++k)
          if (lat.pairing(ncs.minus_one[i].cls, ncs.minus_one[j].cls) == 1 &&
              lat.pairing(ncs.minus_one[i].cls, ncs.minus_one[k].cls) == 1 &&
              lat.pairing(ncs.minus_one[j].cls, ncs.minus_one[k].cls) == 1) {
            ids[0] = i;
            ids[1] = j;
            ids[2] = k;
          }
    if (ids[0] < 0) return {9, "lct values", false, "no concurrent triple found"};
    IncidenceAnnotation ann;
    ann.point_id = 0;
    ann.members = {{ids[0], 1}, {ids[1], 1}, {ids[2], 1}};
    s.annotations.push_back(ann);
    BoundaryDivisor D;
    for (int id : ids) D.terms.push_back({id, Rat(1)});
    if (lct_pair(s, D) != Rat(2, 3))
      return {9, "lct values", false, "triple point lct != 2/3"};
  }
  // snc node: two transversal curves, no annotation.
  {
    SurfaceSpec s = smooth_spec(3);
    PicardLattice lat = s.lattice();
    auto ncs = make_negative_curve_set(lat, s.simple_roots);
    int a = -1, b = -1;
    for (size_t i = 0; i < ncs.minus_one.size() && a < 0; ++i)
      for (size_t j = i + 1; j < ncs.minus_one.size() && a < 0; ++j)
        if (lat.pairing(ncs.minus_one[i].cls, ncs.minus_one[j].cls) == 1) {
          a = (int)i;
          b = (int)j;
        }
    BoundaryDivisor D;
    D.terms.push_back({a, Rat(1)});
    D.terms.push_back({b, Rat(1)});
    if (lct_pair(s, D) != Rat(1)) return {9, "lct values", false, "snc node lct != 1"};
  }
  return {9, "lct values", true, ""};
}

inline CriterionResult theorem_membership() {
  for (auto* s : corpus_and_catalog()) {
    ComplexityReport rep = analyze(*s, false);
    if (!rep.exact()) continue;
    if (!check_theorem_membership(*s, rep))
      return {10, "theorem membership", false,
              "degree " + std::to_string(s->degree) + " sigma " + to_string(rep.sigma()) +
                  " singularities " + singularity_type(*s)};
  }
  return {10, "theorem membership", true, ""};
}

inline CriterionResult sandwich() {
  for (auto& e : catalog_entries()) {
    if (e.count_minus_two() == 0) continue;
    SurfaceSpec spec = e.spec();
    DenominatorResult den = denominator(spec);
    Rat lo = Rat(1) + Rat(spec.degree - 1) / den.value;
    Rat hi = Rat(spec.degree);  // (d + e)/2 with e = d over D(Y)
    if (!(lo <= e.sigma() && e.sigma() <= hi))
      return {11, "denominator sandwich", false,
              e.name + ": " + to_string(lo) + " <= " + to_string(e.sigma()) +
                  " <= " + to_string(hi) + " fails"};
    // The tabulated decomposition witnesses n(Y) <= max label; on one row
    // (Y_{4,1}) a strictly better decomposition exists, so no equality here.
    Rat maxdk(0);
    for (auto& c : e.dk) maxdk = std::max(maxdk, c);
    if (den.value > maxdk)
      return {11, "denominator sandwich", false,
              e.name + ": n(Y) " + to_string(den.value) + " > max table label " +
                  to_string(maxdk)};
  }
  return {11, "denominator sandwich", true, ""};
}

}  // namespace selfcheck

inline std::vector<CriterionResult> run_acceptance_suite() {
  using namespace selfcheck;
  return {minus_one_counts(), root_counts(),     smooth_values(),
          tables_golden(),    cycle_properties(), pairing_bounds(),
          fiber_decompositions(), blowup_induction(), lct_values(),
          theorem_membership(), sandwich()};
}

}  // namespace delpezzo
