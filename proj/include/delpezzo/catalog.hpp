#pragma once

#include "decompose.hpp"

#include <optional>
#include <string>
#include <vector>

namespace delpezzo {

// One tree-type surface: the dual-graph template with its certified data.
// Node labels follow the listed node order; kinds use MinusOne for the open
// nodes and MinusTwo for the filled ones.
struct CatalogEntry {
  std::string name;
  int degree = 0;
  std::vector<CurveKind> kinds;
  std::vector<std::pair<int, int>> edges;
  std::vector<Rat> dk;     // decomposition of -K over the nodes
  std::vector<Rat> slave;  // slave divisor coefficients over the nodes
  Rat gamma{0};
  enum class Mode { Direct, Half, Chained } mode = Mode::Direct;
  std::string chain_parent;   // for Mode::Chained
  std::vector<Vec> roots;     // frozen realization: simple roots in Z^{1,n}

  int rho_x() const { return (10 - degree) - (int)count_minus_two(); }
  Rat sigma() const { return Rat(2 + rho_x()) - gamma; }
  size_t count_minus_two() const {
    size_t k = 0;
    for (auto c : kinds)
      if (c == CurveKind::MinusTwo) ++k;
    return k;
  }

  SurfaceSpec spec() const {
    SurfaceSpec s;
    s.degree = degree;
    s.simple_roots = roots;
    return s;
  }
};

// Kind-respecting exact isomorphism from a template onto a dual graph
// (edges of the template <-> pairing 1, non-edges <-> pairing 0).
// Returns the image curve id of each template node.
inline std::optional<std::vector<int>> find_isomorphism(const CatalogEntry& t,
                                                        const DualGraph& g) {
  int k = (int)t.kinds.size();
  if (g.size() != k) return std::nullopt;
  std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
  for (auto& [a, b] : t.edges) adj[a][b] = adj[b][a] = 1;
  std::vector<int> tdeg(k, 0), gdeg(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (adj[i][j]) ++tdeg[i];
      if (i != j && g.mult[i][j] == 1) ++gdeg[i];
      if (i != j && g.mult[i][j] > 1) return std::nullopt;
    }
  std::vector<int> map(k, -1);
  std::vector<char> used(k, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == k) return true;
    for (int w = 0; w < k; ++w) {
      if (used[w]) continue;
      if (g.kind(w) != t.kinds[v]) continue;
      if (gdeg[w] != tdeg[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if ((g.mult[map[u]][w] == 1) != (bool)adj[u][v]) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

namespace detail {

inline CurveKind K1() { return CurveKind::MinusOne; }
inline CurveKind K2() { return CurveKind::MinusTwo; }

inline std::vector<Rat> rats(std::vector<Rat> v) { return v; }

inline Vec mk(std::initializer_list<std::int64_t> l) { return Vec(l); }

}  // namespace detail

// The tree-surface table. Node data transcribed once; every numeric column is
// re-verified by the build (lattice sums, denominator LP, slave bounds, lc),
// so a transcription slip cannot survive testing.
inline std::vector<CatalogEntry> build_catalog() {
  using detail::mk;
  auto o = CurveKind::MinusOne;
  auto f = CurveKind::MinusTwo;
  std::vector<CatalogEntry> v;
  auto R = [](std::int64_t p, std::int64_t q = 1) { return Rat(BigInt(p), BigInt(q)); };

  {
    CatalogEntry e;
    e.name = "Y_{7,1}";
    e.degree = 7;
    e.kinds = {o, o, o};
    e.edges = {{0, 1}, {1, 2}};
    e.dk = {R(2), R(3), R(2)};
    e.slave = {R(1), R(2), R(1)};
    e.gamma = R(0);
    e.roots = {};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{7,2}";
    e.degree = 7;
    e.kinds = {o, o, f};
    e.edges = {{0, 1}, {1, 2}};
    e.dk = {R(3), R(4), R(2)};
    e.slave = {R(1), R(2), R(1)};
    e.gamma = R(0);
    e.roots = {mk({0, 1, -1})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{6,1}";
    e.degree = 6;
    e.kinds = {o, f, o, f};
    e.edges = {{0, 1}, {1, 2}, {2, 3}};
    e.dk = {R(2), R(3), R(4), R(2)};
    e.slave = {R(1), R(2), R(2), R(1)};
    e.gamma = R(0);
    e.roots = {mk({0, 0, 1, -1}), mk({1, -1, -1, -1})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{6,2}";
    e.degree = 6;
    e.kinds = {o, o, f, o, o};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    e.dk = {R(1), R(2), R(2), R(2), R(1)};
    e.slave = {R(1), R(2), R(2), R(1), R(0)};
    e.gamma = R(0);
    e.roots = {mk({0, 0, 1, -1})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{6,3}";
    e.degree = 6;
    e.kinds = {o, f, f, o};
    e.edges = {{0, 1}, {1, 2}, {1, 3}};
    e.dk = {R(3), R(4), R(2), R(3)};
    e.slave = {R(1), R(2), R(1), R(1)};
    e.gamma = R(1);
    e.roots = {mk({0, 0, 1, -1}), mk({0, 1, -1, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{6,4}";
    e.degree = 6;
    e.kinds = {f, o, f, f};
    e.edges = {{0, 1}, {1, 2}, {2, 3}};
    e.dk = {R(3), R(6), R(4), R(2)};
    e.slave = {R(1), R(2), R(2), R(1)};
    e.gamma = R(0);
    e.roots = {mk({1, -1, -1, -1}), mk({0, 0, 1, -1}), mk({0, 1, -1, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{6,5}";
    e.degree = 6;
    e.kinds = {o, f, o, o};
    e.edges = {{0, 1}, {1, 2}, {1, 3}};
    e.dk = {R(2), R(3), R(2), R(2)};
    e.slave = {R(1), R(2), R(1), R(1)};
    e.gamma = R(1);
    e.roots = {mk({1, -1, -1, -1})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{5,1}";
    e.degree = 5;
    e.kinds = {o, f, f, o, f};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {2, 4}};
    e.dk = {R(2), R(3), R(4), R(3), R(2)};
    e.slave = {R(1), R(2), R(2), R(1), R(1)};
    e.gamma = R(1);
    e.roots = {mk({0, 0, 0, 1, -1}), mk({0, 0, 1, -1, 0}), mk({0, 1, -1, 0, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{5,2}";
    e.degree = 5;
    e.kinds = {f, o, f, f, o, o};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    e.dk = {R(1), R(2), R(2), R(2), R(2), R(1)};
    e.slave = {R(1), R(2), R(2), R(2), R(1), R(0)};
    e.gamma = R(0);
    e.roots = {mk({0, 0, 0, 1, -1}), mk({0, 1, -1, 0, 0}), mk({1, -1, 0, -1, -1})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{5,3}";
    e.degree = 5;
    e.kinds = {o, o, f, f, o, o};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}};
    e.dk = {R(1), R(2), R(2), R(2), R(1), R(1)};
    e.slave = {R(0), R(1), R(2), R(2), R(1), R(1)};
    e.gamma = R(1);
    e.roots = {mk({0, 0, 0, 1, -1}), mk({0, 0, 1, -1, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{5,4}";
    e.degree = 5;
    e.kinds = {f, f, f, o, f};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {2, 4}};
    e.dk = {R(2), R(4), R(6), R(5), R(3)};
    e.slave = {R(1), R(2), R(2), R(1), R(1)};
    e.gamma = R(1);
    e.roots = {mk({0, 1, -1, 0, 0}), mk({0, 0, 1, -1, 0}), mk({0, 0, 0, 1, -1}),
               mk({1, -1, -1, -1, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{4,1}";
    e.degree = 4;
    e.kinds = {o, o, f, f, f, o, f};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}};
    e.dk = {R(0), R(1), R(2), R(3), R(4), R(3), R(2)};
    e.slave = {R(0), R(1), R(2), R(2), R(2), R(1), R(1)};
    e.gamma = R(1);
    e.roots = {mk({0, 0, 0, 0, 1, -1}), mk({0, 0, 0, 1, -1, 0}),
               mk({0, 0, 1, -1, 0, 0}), mk({0, 1, -1, 0, 0, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{4,2}";
    e.degree = 4;
    e.kinds = {o, f, f, f, f, o};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}};
    e.dk = {R(2), R(3), R(4), R(2), R(3), R(2)};
    e.slave = {R(0), R(1), R(2), R(1), R(1), R(0)};
    e.gamma = R(3, 2);
    e.mode = CatalogEntry::Mode::Half;
    e.roots = {mk({0, 0, 0, 0, 1, -1}), mk({0, 0, 0, 1, -1, 0}),
               mk({0, 0, 1, -1, 0, 0}), mk({1, -1, -1, -1, 0, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{4,3}";
    e.degree = 4;
    e.kinds = {f, o, f, f, f, o, o};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}};
    e.dk = {R(1), R(2), R(2), R(2), R(2), R(1), R(1)};
    e.slave = {R(0), R(0), R(1), R(2), R(2), R(1), R(1)};
    e.gamma = R(1);
    e.roots = {mk({0, 0, 0, 0, 1, -1}), mk({0, 0, 1, -1, 0, 0}),
               mk({0, 1, -1, 0, 0, 0}), mk({1, -1, 0, 0, -1, -1})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{4,4}";
    e.degree = 4;
    e.kinds = {f, o, f, f, f, o, f};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
    e.dk = {R(1), R(2), R(2), R(2), R(2), R(2), R(1)};
    e.slave = {R(0), R(0), R(1), R(2), R(2), R(2), R(1)};
    e.gamma = R(0);
    e.roots = {mk({0, 0, 0, 0, 1, -1}), mk({0, 0, 1, -1, 0, 0}),
               mk({0, 1, -1, 0, 0, 0}), mk({1, -1, 0, 0, -1, -1}),
               mk({1, -1, -1, -1, 0, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{4,5}";
    e.degree = 4;
    e.kinds = {o, o, f, f, f, o, o};
    e.edges = {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}};
    e.dk = {R(1), R(1), R(2), R(2), R(2), R(1), R(1)};
    e.slave = {R(0), R(0), R(1), R(2), R(2), R(1), R(1)};
    e.gamma = R(2);
    e.roots = {mk({0, 0, 0, 0, 1, -1}), mk({0, 0, 0, 1, -1, 0}),
               mk({1, -1, -1, -1, 0, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{4,6}";
    e.degree = 4;
    e.kinds = {o, f, f, f, f, f};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}};
    e.dk = {R(4), R(5), R(6), R(3), R(4), R(2)};
    e.slave = {R(1), R(2), R(3), R(3, 2), R(2), R(1)};
    e.gamma = R(3, 2);
    e.roots = {mk({0, 0, 0, 0, 1, -1}), mk({0, 0, 0, 1, -1, 0}),
               mk({1, -1, -1, -1, 0, 0}), mk({0, 0, 1, -1, 0, 0}),
               mk({0, 1, -1, 0, 0, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{3,1}";
    e.degree = 3;
    e.kinds = {o, o, f, f, f, f, f, o};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {6, 7}};
    e.dk = {R(1), R(2), R(2), R(2), R(2), R(1), R(1), R(0)};
    e.slave = {R(0), R(0), R(1), R(2), R(2), R(1), R(1), R(0)};
    e.gamma = R(3, 2);
    e.mode = CatalogEntry::Mode::Half;
    e.roots = {mk({0, 0, 0, 0, 0, 1, -1}), mk({0, 0, 0, 0, 1, -1, 0}),
               mk({0, 0, 0, 1, -1, 0, 0}), mk({0, 0, 1, -1, 0, 0, 0}),
               mk({1, -1, -1, -1, 0, 0, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{3,2}";
    e.degree = 3;
    e.kinds = {o, o, f, f, f, f, f, o};
    e.edges = {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}};
    e.dk = {R(1), R(1), R(2), R(2), R(2), R(2), R(1), R(1)};
    e.slave = {R(0), R(0), R(1), R(2), R(2), R(2), R(1), R(1)};
    e.gamma = R(2);
    e.roots = {mk({0, 0, 0, 0, 0, 1, -1}), mk({0, 0, 0, 0, 1, -1, 0}),
               mk({0, 0, 0, 1, -1, 0, 0}), mk({0, 0, 1, -1, 0, 0, 0}),
               mk({0, 1, -1, 0, 0, 0, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{3,3}";
    e.degree = 3;
    e.kinds = {f, o, f, f, f, f, o, f};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}};
    e.dk = {R(1), R(2), R(2), R(2), R(2), R(2), R(1), R(1)};
    e.slave = {R(0), R(0), R(1), R(2), R(2), R(2), R(1), R(1)};
    e.gamma = R(1);
    e.roots = {mk({0, 0, 0, 0, 0, 1, -1}), mk({1, -1, -1, -1, 0, 0, 0}),
               mk({0, 0, 0, 1, -1, 0, 0}), mk({0, 0, 1, -1, 0, 0, 0}),
               mk({0, 1, -1, 0, 0, 0, 0}), mk({1, -1, 0, 0, 0, -1, -1})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{3,4}";
    e.degree = 3;
    e.kinds = {o, f, f, f, f, f, f};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}};
    e.dk = {R(3), R(4), R(5), R(6), R(3), R(4), R(2)};
    e.slave = {R(1), R(4), R(5), R(6), R(3), R(4), R(2)};
    e.gamma = R(5, 3);
    e.mode = CatalogEntry::Mode::Chained;
    e.chain_parent = "Y_{4,6}";
    e.roots = {mk({0, 0, 0, 0, 0, 1, -1}), mk({0, 0, 0, 0, 1, -1, 0}),
               mk({0, 0, 0, 1, -1, 0, 0}), mk({1, -1, -1, -1, 0, 0, 0}),
               mk({0, 0, 1, -1, 0, 0, 0}), mk({0, 1, -1, 0, 0, 0, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{2,1}";
    e.degree = 2;
    e.kinds = {f, o, f, f, f, f, f, f, o};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {7, 8}};
    e.dk = {R(1), R(2), R(2), R(2), R(2), R(2), R(1), R(1), R(0)};
    e.slave = {R(0), R(0), R(1), R(2), R(2), R(2), R(1), R(1), R(0)};
    e.gamma = R(3, 2);
    e.mode = CatalogEntry::Mode::Half;
    e.roots = {mk({0, 0, 0, 0, 0, 0, 1, -1}), mk({1, -1, 0, 0, 0, 0, -1, -1}),
               mk({0, 1, -1, 0, 0, 0, 0, 0}), mk({0, 0, 1, -1, 0, 0, 0, 0}),
               mk({0, 0, 0, 1, -1, 0, 0, 0}), mk({0, 0, 0, 0, 1, -1, 0, 0}),
               mk({1, -1, -1, -1, 0, 0, 0, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{2,2}";
    e.degree = 2;
    e.kinds = {o, o, f, f, f, f, f, f, o};
    e.edges = {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {7, 8}};
    e.dk = {R(1), R(1), R(2), R(2), R(2), R(2), R(1), R(1), R(0)};
    e.slave = {R(0), R(0), R(1), R(2), R(2), R(2), R(1), R(1), R(0)};
    e.gamma = R(5, 2);
    e.mode = CatalogEntry::Mode::Half;
    e.roots = {mk({0, 0, 0, 0, 0, 0, 1, -1}), mk({0, 0, 0, 0, 0, 1, -1, 0}),
               mk({0, 0, 0, 0, 1, -1, 0, 0}), mk({0, 0, 0, 1, -1, 0, 0, 0}),
               mk({0, 0, 1, -1, 0, 0, 0, 0}), mk({1, -1, -1, -1, 0, 0, 0, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{2,3}";
    e.degree = 2;
    e.kinds = {o, f, f, f, f, f, f, o, f};
    e.edges = {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 8}};
    e.dk = {R(1), R(1), R(2), R(2), R(2), R(2), R(2), R(1), R(1)};
    e.slave = {R(0), R(1, 2), R(1), R(1), R(1), R(1), R(1), R(0), R(1, 2)};
    e.gamma = R(3, 2);
    e.mode = CatalogEntry::Mode::Half;
    e.roots = {mk({0, 0, 0, 0, 0, 1, -1, 0}), mk({0, 0, 0, 0, 0, 0, 1, -1}),
               mk({1, -1, 0, 0, 0, -1, -1, 0}), mk({0, 1, -1, 0, 0, 0, 0, 0}),
               mk({0, 0, 1, -1, 0, 0, 0, 0}), mk({0, 0, 0, 1, -1, 0, 0, 0}),
               mk({1, -1, -1, -1, 0, 0, 0, 0})};
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Y_{2,4}";
    e.degree = 2;
    e.kinds = {o, f, f, f, f, f, f, f};
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {6, 7}};
    e.dk = {R(2), R(3), R(4), R(5), R(6), R(3), R(4), R(2)};
    e.slave = {R(1), R(3), R(4), R(5), R(6), R(3), R(4), R(2)};
    e.gamma = R(11, 6);
    e.mode = CatalogEntry::Mode::Chained;
    e.chain_parent = "Y_{3,4}";
    e.roots = {mk({0, 0, 0, 0, 0, 0, 1, -1}), mk({0, 0, 0, 0, 0, 1, -1, 0}),
               mk({0, 0, 0, 0, 1, -1, 0, 0}), mk({0, 0, 0, 1, -1, 0, 0, 0}),
               mk({1, -1, -1, -1, 0, 0, 0, 0}), mk({0, 0, 1, -1, 0, 0, 0, 0}),
               mk({0, 1, -1, 0, 0, 0, 0, 0})};
    v.push_back(e);
  }
  return v;
}

inline std::vector<CatalogEntry> const& catalog_entries() {
  static const std::vector<CatalogEntry> v = build_catalog();
  return v;
}

inline std::optional<CatalogEntry> match_tree_surface(const SurfaceSpec& spec,
                                                      const DualGraph& g) {
  if (!is_tree(g)) throw SpecError("match_tree_surface: dual graph is not a tree");
  for (auto& e : catalog_entries()) {
    if (e.degree != spec.degree) continue;
    if (find_isomorphism(e, g)) return e;
  }
  return std::nullopt;
}

}  // namespace delpezzo
