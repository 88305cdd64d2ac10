#pragma once

#include "surface.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace delpezzo {

struct DualGraph {
  NegativeCurveSet curves;
  std::vector<std::vector<std::int64_t>> mult;  // pairwise pairings, diagonal 0

  int size() const { return curves.size(); }
  CurveKind kind(int i) const { return curves.by_id(i).kind; }
};

inline DualGraph build_dual_graph(const SurfaceSpec& spec) {
  if (spec.model != Model::BlowupOfP2)
    throw SpecError("dual graph: only the blow-up model has lattice curves");
  PicardLattice lat = spec.lattice();
  DualGraph g;
  g.curves = make_negative_curve_set(lat, spec.simple_roots);
  int m = g.size();
  g.mult.assign(m, std::vector<std::int64_t>(m, 0));
  auto all = g.curves.all();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::int64_t p = lat.pairing(all[i]->cls, all[j]->cls);
      g.mult[i][j] = g.mult[j][i] = p;
    }
  return g;
}

struct Cycle {
  std::vector<int> nodes;  // 2-cycle: the double-edge pair; else a closed chain
  int content = 0;

  bool operator==(const Cycle&) const = default;
};

namespace detail {

inline int cycle_content(const DualGraph& g, const std::vector<int>& nodes) {
  int c = 0;
  for (int v : nodes)
    if (g.kind(v) == CurveKind::MinusOne) ++c;
  return c;
}

// Canonical representative under rotation and reflection: lexicographically
// smallest node sequence.
inline std::vector<int> canonical_cycle(std::vector<int> nodes) {
  if (nodes.size() <= 2) {
    std::sort(nodes.begin(), nodes.end());
    return nodes;
  }
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (size_t s = 0; s < nodes.size(); ++s) {
      std::vector<int> cand;
      for (size_t k = 0; k < nodes.size(); ++k)
        cand.push_back(nodes[(s + k) % nodes.size()]);
      if (best.empty() || cand < best) best = cand;
    }
    std::reverse(nodes.begin(), nodes.end());
  }
  return best;
}

// DFS for simple cycles (length >= 3, consecutive pairings exactly 1) with at
// most `budget` (-1)-nodes; the smallest node id on the cycle anchors the
// search so each cycle is visited once per direction.
inline void cycles_up_to_content(const DualGraph& g, int budget,
                                 std::vector<Cycle>& out) {
  int m = g.size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.mult[i][j] >= 2) {
        Cycle c{{i, j}, cycle_content(g, {i, j})};
        if (c.content <= budget) out.push_back(c);
      }
  std::vector<char> used(m, 0);
  std::vector<int> path;
  auto rec = [&](auto&& self, int anchor, int v, int content) -> void {
    for (int w = 0; w < m; ++w) {
      if (g.mult[v][w] != 1) continue;
      if (w == anchor && path.size() >= 3) {
        out.push_back({canonical_cycle(path), cycle_content(g, path)});
        continue;
      }
      if (w <= anchor || used[w]) continue;
      int nc = content + (g.kind(w) == CurveKind::MinusOne ? 1 : 0);
      if (nc > budget) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, anchor, w, nc);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int a = 0; a < m; ++a) {
    used.assign(m, 0);
    used[a] = 1;
    path = {a};
    rec(rec, a, a, g.kind(a) == CurveKind::MinusOne ? 1 : 0);
  }
  // DFS finds each long cycle in both directions; dedupe canonically.
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    return std::tie(a.content, a.nodes) < std::tie(b.content, b.nodes);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace detail

inline bool has_cycle(const DualGraph& g) {
  int m = g.size();
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (g.mult[i][j] >= 2) return true;
      if (g.mult[i][j] == 1) {
        int a = find(i), b = find(j);
        if (a == b) return true;
        parent[a] = b;
      }
    }
  return false;
}

inline bool is_tree(const DualGraph& g) { return !has_cycle(g); }

// Minimum-content cycle; ties broken by shorter length, then by the
// lexicographically smallest canonical node sequence.
inline std::optional<Cycle> find_min_content_cycle(const DualGraph& g) {
  if (!has_cycle(g)) return std::nullopt;
  int max_budget = 0;
  for (int i = 0; i < g.size(); ++i)
    if (g.kind(i) == CurveKind::MinusOne) ++max_budget;
  for (int budget = 0; budget <= max_budget; ++budget) {
    std::vector<Cycle> found;
    detail::cycles_up_to_content(g, budget, found);
    if (found.empty()) continue;
    auto best = std::min_element(found.begin(), found.end(),
                                 [](const Cycle& a, const Cycle& b) {
                                   return std::make_tuple(a.content, a.nodes.size(), a.nodes) <
                                          std::make_tuple(b.content, b.nodes.size(), b.nodes);
                                 });
    return *best;
  }
  return std::nullopt;
}

// All cycles of content at most `budget` (used by property tests).
inline std::vector<Cycle> cycles_with_content_at_most(const DualGraph& g, int budget) {
  std::vector<Cycle> out;
  detail::cycles_up_to_content(g, budget, out);
  return out;
}

// Asserts the cycle identities and, for a content-d cycle, that the classes
// sum to the anticanonical class; returns the sum.
inline Vec verify_cycle_complement(const SurfaceSpec& spec, const DualGraph& g,
                                   const Cycle& I) {
  PicardLattice lat = spec.lattice();
  Vec sum(lat.rank(), 0);
  for (int v : I.nodes) sum = vec_add(sum, g.curves.by_id(v).cls);
  std::int64_t c = detail::cycle_content(g, I.nodes);
  if (lat.self_intersection(sum) != c || lat.anticanonical_degree(sum) != c)
    throw SpecError("cycle identity failed: (sum)^2 or -K.sum != content");
  if (c < spec.degree)
    throw SpecError("model inconsistency: cycle content " + std::to_string(c) +
                    " below degree " + std::to_string(spec.degree));
  if (c == spec.degree && sum != lat.anticanonical_class())
    throw SpecError("content-d cycle does not sum to -K");
  return sum;
}

enum class SncClass { SNC, ConcurrentLines, Tangency, Mixed };

inline SncClass classify_non_snc(const std::vector<IncidenceAnnotation>& anns) {
  bool conc = false, tang = false;
  for (auto& a : anns) {
    if (a.members.size() >= 3) conc = true;
    if (!a.contact.empty()) tang = true;
  }
  if (conc && tang) return SncClass::Mixed;
  if (conc) return SncClass::ConcurrentLines;
  if (tang) return SncClass::Tangency;
  return SncClass::SNC;
}

// DOT rendering: open circles for (-1)-curves, filled for (-2)-curves.
inline std::string to_dot(const DualGraph& g) {
  std::ostringstream os;
  os << "graph dual {\n  node [shape=circle, label=\"\"];\n";
  for (int i = 0; i < g.size(); ++i) {
    const CurveClass& c = g.curves.by_id(i);
    os << "  n" << i << " [style=" << (c.kind == CurveKind::MinusTwo ? "filled" : "solid")
       << ", xlabel=\"" << class_to_string(c.cls) << "\"];\n";
  }
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.mult[i][j] > 0) {
        os << "  n" << i << " -- n" << j;
        if (g.mult[i][j] > 1) os << " [label=\"" << g.mult[i][j] << "\"]";
        os << ";\n";
      }
  os << "}\n";
  return os.str();
}

}  // namespace delpezzo
