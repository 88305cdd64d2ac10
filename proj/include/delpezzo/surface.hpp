#pragma once

#include "curves.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace delpezzo {

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Model { BlowupOfP2, P1xP1, F2Cone };

inline std::string model_name(Model m) {
  switch (m) {
    case Model::BlowupOfP2: return "blowup";
    case Model::P1xP1: return "p1xp1";
    case Model::F2Cone: return "f2";
  }
  return "?";
}

// Incidence data the lattice cannot see: several curves through one point,
// or a higher-order contact between two curves.
struct IncidenceAnnotation {
  int point_id = 0;
  std::vector<std::pair<int, int>> members;          // (curve id, multiplicity >= 1)
  std::vector<std::array<int, 3>> contact;           // (curve id, curve id, order >= 2)
  std::optional<int> parent;                         // infinitely-near chain

  bool operator==(const IncidenceAnnotation&) const = default;
};

// A point to blow up, identified by the negative curves through it.
struct PointSpec {
  std::vector<int> on_curves;  // ids of (-1)-curves in D(Y); size 0, 1 or 2
};

struct SurfaceSpec {
  int degree = 9;
  Model model = Model::BlowupOfP2;
  std::vector<Vec> simple_roots;
  std::vector<IncidenceAnnotation> annotations;

  int n() const { return 9 - degree; }
  PicardLattice lattice() const { return PicardLattice(n()); }
};

inline SurfaceSpec smooth_spec(int degree) {
  SurfaceSpec s;
  s.degree = degree;
  return s;
}

namespace detail {

// Rational-free linear independence test via fraction-free Gaussian elimination.
inline bool linearly_independent(std::vector<Vec> rows) {
  size_t r = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      std::int64_t a = rows[r][c], b = rows[i][c];
      for (size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] * a - rows[r][j] * b;
    }
    ++r;
  }
  return r == rows.size();
}

struct AdeComponent {
  char family;  // 'A', 'D' or 'E'
  int rank;
};

// Classifies one connected simple-root component by its pairing graph.
// Throws SpecError when the graph is not an ADE diagram.
inline AdeComponent classify_component(const std::vector<int>& nodes,
                                       const std::vector<std::vector<int>>& adj) {
  int k = (int)nodes.size();
  int edges = 0;
  int branch = -1, branch_count = 0;
  for (int v : nodes) {
    int deg = (int)adj[v].size();
    edges += deg;
    if (deg >= 4) throw SpecError("root component has a degree-4 vertex, not ADE");
    if (deg == 3) {
      branch = v;
      ++branch_count;
    }
  }
  edges /= 2;
  if (edges != k - 1) throw SpecError("root component contains a circuit, not ADE");
  if (branch_count > 1) throw SpecError("root component has two branch vertices, not ADE");
  if (branch_count == 0) return {'A', k};
  // Arm lengths from the branch vertex.
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next == -1) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', k};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', k};
  throw SpecError("root component branch shape is not ADE");
}

inline std::vector<AdeComponent> root_components(const PicardLattice& lat,
                                                 const std::vector<Vec>& roots) {
  int k = (int)roots.size();
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::int64_t p = lat.pairing(roots[i], roots[j]);
      if (p != 0 && p != 1)
        throw SpecError("simple-root pairing outside {0,1}: " +
                        class_to_string(roots[i]) + " . " + class_to_string(roots[j]) +
                        " = " + std::to_string(p));
      if (p == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  std::vector<int> comp(k, -1);
  std::vector<AdeComponent> out;
  for (int i = 0; i < k; ++i) {
    if (comp[i] != -1) continue;
    std::vector<int> stack{i}, nodes;
    comp[i] = i;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (int w : adj[v])
        if (comp[w] == -1) {
          comp[w] = i;
          stack.push_back(w);
        }
    }
    out.push_back(classify_component(nodes, adj));
  }
  return out;
}

}  // namespace detail

// Canonical singularity-type string: E before D before A, rank descending,
// with multiplicities, e.g. "A3+2A1"; "smooth" when there are no roots.
inline std::string singularity_type(const SurfaceSpec& spec) {
  if (spec.model == Model::P1xP1) return "smooth";
  if (spec.model == Model::F2Cone) return "A1";
  if (spec.simple_roots.empty()) return "smooth";
  auto comps = detail::root_components(spec.lattice(), spec.simple_roots);
  auto key = [](const detail::AdeComponent& c) {
    int fam = c.family == 'E' ? 0 : c.family == 'D' ? 1 : 2;
    return std::make_pair(fam, -c.rank);
  };
  std::sort(comps.begin(), comps.end(),
            [&](auto& a, auto& b) { return key(a) < key(b); });
  std::ostringstream os;
  for (size_t i = 0; i < comps.size();) {
    size_t j = i;
    while (j < comps.size() && comps[j].family == comps[i].family &&
           comps[j].rank == comps[i].rank)
      ++j;
    if (i) os << "+";
    if (j - i > 1) os << (j - i);
    os << comps[i].family << comps[i].rank;
    i = j;
  }
  return os.str();
}

// Full spec validation; throws SpecError with a diagnostic on any violation.
inline void validate_spec(const SurfaceSpec& spec) {
  if (spec.degree < 1 || spec.degree > 9)
    throw SpecError("degree must be in 1..9");
  if (spec.model == Model::P1xP1 || spec.model == Model::F2Cone) {
    if (spec.degree != 8) throw SpecError("p1xp1/f2 models have degree 8");
    if (!spec.simple_roots.empty())
      throw SpecError("p1xp1/f2 models carry no lattice roots");
    if (!spec.annotations.empty())
      throw SpecError("p1xp1/f2 models carry no annotations");
    return;
  }
  PicardLattice lat = spec.lattice();
  for (auto& a : spec.simple_roots)
    if (!is_root(lat, a))
      throw SpecError("not a (-2)-root: " + class_to_string(a));
  if (!detail::linearly_independent(spec.simple_roots))
    throw SpecError("simple roots are linearly dependent");
  detail::root_components(lat, spec.simple_roots);  // pairings + ADE shape

  if (spec.annotations.empty()) return;
  auto ncs = make_negative_curve_set(lat, spec.simple_roots);
  // Declared intersection contributions must fit into the lattice pairing.
  std::map<std::pair<int, int>, std::int64_t> used;
  for (auto& ann : spec.annotations) {
    if (ann.members.size() < 2)
      throw SpecError("annotation needs at least two member curves");
    for (auto& [id, mult] : ann.members) {
      ncs.by_id(id);
      if (mult < 1) throw SpecError("annotation multiplicity must be >= 1");
    }
    auto declared = [&](int a, int b) -> std::int64_t {
      for (auto& c : ann.contact)
        if ((c[0] == a && c[1] == b) || (c[0] == b && c[1] == a)) {
          if (c[2] < 2) throw SpecError("contact order must be >= 2");
          return c[2];
        }
      return 0;
    };
    for (size_t i = 0; i < ann.members.size(); ++i)
      for (size_t j = i + 1; j < ann.members.size(); ++j) {
        auto [ia, ma] = ann.members[i];
        auto [ib, mb] = ann.members[j];
        std::int64_t contrib = std::max<std::int64_t>((std::int64_t)ma * mb, declared(ia, ib));
        auto key = std::minmax(ia, ib);
        used[{key.first, key.second}] += contrib;
      }
    for (auto& c : ann.contact) {
      bool a_in = false, b_in = false;
      for (auto& [id, mult] : ann.members) {
        a_in |= id == c[0];
        b_in |= id == c[1];
      }
      if (!a_in || !b_in)
        throw SpecError("contact pair must be among the annotation members");
    }
  }
  for (auto& [key, total] : used) {
    std::int64_t p = lat.pairing(ncs.by_id(key.first).cls, ncs.by_id(key.second).cls);
    if (total > p)
      throw SpecError("annotations declare more intersections than the lattice pairing allows for curves " +
                      std::to_string(key.first) + "," + std::to_string(key.second));
  }
}

inline int picard_rank_of_X(const SurfaceSpec& spec) {
  if (spec.model == Model::P1xP1) return 2;
  if (spec.model == Model::F2Cone) return 1;
  return (10 - spec.degree) - (int)spec.simple_roots.size();
}

// Blow up at a point given by the (-1)-curves through it. The new spec loses
// the incidence annotations: curve ids are reassigned on the new surface.
inline SurfaceSpec blow_up(const SurfaceSpec& spec, const PointSpec& p) {
  if (spec.model != Model::BlowupOfP2)
    throw SpecError("blow_up: only the blow-up model supports this move");
  if (spec.degree <= 1) throw SpecError("blow_up: degree 1 is the floor");
  validate_spec(spec);
  PicardLattice lat = spec.lattice();
  auto ncs = make_negative_curve_set(lat, spec.simple_roots);
  if (p.on_curves.size() > 2)
    throw SpecError("blow_up: a point lies on at most two negative curves here");
  std::vector<Vec> through;
  for (int id : p.on_curves) {
    const CurveClass& c = ncs.by_id(id);
    if (c.kind == CurveKind::MinusTwo)
      throw SpecError("blow_up: point must avoid (-2)-curves");
    through.push_back(c.cls);
  }
  if (through.size() == 2 && lat.pairing(through[0], through[1]) < 1)
    throw SpecError("blow_up: the two chosen curves do not meet");

  SurfaceSpec out;
  out.degree = spec.degree - 1;
  int rank = out.n() + 1;
  for (auto& r : spec.simple_roots) {
    Vec v = r;
    v.push_back(0);
    out.simple_roots.push_back(v);
  }
  for (auto& c : through) {
    Vec v = c;
    v.push_back(-1);  // strict transform C - E_new becomes a (-2)-curve
    out.simple_roots.push_back(v);
  }
  (void)rank;
  validate_spec(out);
  return out;
}

// Contract an irreducible (-1)-curve: change exceptional basis so its class
// becomes E_n (reflections in roots H-Ei-Ej-Ek plus coordinate swaps), then
// drop the last coordinate. Roots meeting the curve turn into (-1)-classes
// downstairs and leave the root list.
inline SurfaceSpec contract(const SurfaceSpec& spec, int curve_id) {
  if (spec.model != Model::BlowupOfP2)
    throw SpecError("contract: only the blow-up model supports this move");
  if (spec.degree >= 9) throw SpecError("contract: nothing to contract on P2");
  validate_spec(spec);
  PicardLattice lat = spec.lattice();
  auto ncs = make_negative_curve_set(lat, spec.simple_roots);
  const CurveClass& cc = ncs.by_id(curve_id);
  if (cc.kind != CurveKind::MinusOne)
    throw SpecError("contract: curve is not a (-1)-curve");
  int n = lat.n;

  Vec e = cc.cls;
  std::vector<Vec> roots = spec.simple_roots;
  auto reflect_all = [&](const Vec& alpha) {
    auto refl = [&](Vec& v) {
      std::int64_t t = lat.pairing(v, alpha);
      for (int i = 0; i <= n; ++i) v[i] += t * alpha[i];
    };
    refl(e);
    for (auto& r : roots) refl(r);
  };
  // On n=2 the class H-E1-E2 is not Weyl-equivalent to an exceptional basis
  // vector; contracting it yields a quadric (smooth or the cone, depending on
  // whether the A1 root is present).
  if (n == 2 && e[0] == 1) {
    SurfaceSpec out;
    out.degree = 8;
    out.model = spec.simple_roots.empty() ? Model::P1xP1 : Model::F2Cone;
    return out;
  }
  while (e[0] > 0) {
    if (n < 3)
      throw SpecError("contract: class cannot be normalized in this rank");
    // Indices of the three largest b_i = -e[i]; Cremona step strictly lowers a.
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i) idx.push_back(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return e[a] < e[b]; });
    Vec alpha(n + 1, 0);
    alpha[0] = 1;
    alpha[idx[0]] = alpha[idx[1]] = alpha[idx[2]] = -1;
    if (lat.pairing(e, alpha) >= 0)
      throw SpecError("contract: basis change failed to reduce the class");
    reflect_all(alpha);
  }
  int pos = -1;
  for (int i = 1; i <= n; ++i)
    if (e[i] == 1) pos = i;
  if (pos == -1 || lat.self_intersection(e) != -1)
    throw SpecError("contract: class did not normalize to an exceptional basis vector");
  auto swap_all = [&](int i, int j) {
    std::swap(e[i], e[j]);
    for (auto& r : roots) std::swap(r[i], r[j]);
  };
  if (pos != n) swap_all(pos, n);

  SurfaceSpec out;
  out.degree = spec.degree + 1;
  for (auto& r : roots) {
    std::int64_t hit = -r[n];  // pairing with E_n
    Vec down(r.begin(), r.end() - 1);
    if (hit == 0) {
      out.simple_roots.push_back(down);
    } else if (hit == 1) {
      // becomes a (-1)-curve on the contracted surface; drop from roots
    } else {
      throw SpecError("contract: a simple root meets the curve with multiplicity " +
                      std::to_string(hit));
    }
  }
  validate_spec(out);
  return out;
}

}  // namespace delpezzo
