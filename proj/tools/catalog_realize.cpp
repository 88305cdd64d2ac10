// Development tool: searches simple-root sets realizing each catalog
// template and prints them as C++ initializers. The published catalog data
// is the frozen output of this search; rerun after editing a template.
#include "delpezzo/catalog.hpp"

#include <iostream>

using namespace delpezzo;

namespace {

// BFS-like ordering of the template's (-2)-nodes so every node after the
// first in its component touches an earlier one (early pairing pruning).
std::vector<int> order_root_nodes(const CatalogEntry& e) {
  int k = (int)e.kinds.size();
  std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
  for (auto& [a, b] : e.edges) adj[a][b] = adj[b][a] = 1;
  std::vector<int> order;
  std::vector<char> seen(k, 0);
  for (int s = 0; s < k; ++s) {
    if (seen[s] || e.kinds[s] != CurveKind::MinusTwo) continue;
    std::vector<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.erase(queue.begin());
      order.push_back(v);
      for (int w = 0; w < k; ++w)
        if (!seen[w] && adj[v][w] && e.kinds[w] == CurveKind::MinusTwo) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
  }
  return order;
}

bool search(const CatalogEntry& e, std::vector<Vec>& result) {
  int n = 9 - e.degree;
  PicardLattice lat(n);
  auto cands = enumerate_root_candidates(n);
  // Keep only lex-positive representatives: effective roots on these
  // surfaces are positive for this chamber choice.
  std::erase_if(cands, [](const Vec& c) {
    for (auto x : c) {
      if (x > 0) return false;
      if (x < 0) return true;
    }
    return true;
  });
  auto order = order_root_nodes(e);
  int k = (int)order.size();
  int kk = (int)e.kinds.size();
  std::vector<std::vector<char>> adj(kk, std::vector<char>(kk, 0));
  for (auto& [a, b] : e.edges) adj[a][b] = adj[b][a] = 1;
  int ocount = 0;
  for (auto kd : e.kinds)
    if (kd == CurveKind::MinusOne) ++ocount;

  std::vector<Vec> chosen(k);
  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos == k) {
      std::vector<Vec> roots(chosen.begin(), chosen.end());
      SurfaceSpec spec;
      spec.degree = e.degree;
      spec.simple_roots = roots;
      try {
        validate_spec(spec);
      } catch (const SpecError&) {
        return false;
      }
      auto g = build_dual_graph(spec);
      if ((int)g.curves.minus_one.size() != ocount) return false;
      if (!find_isomorphism(e, g)) return false;
      result = roots;
      return true;
    }
    for (auto& c : cands) {
      bool ok = true;
      for (int j = 0; j < pos && ok; ++j) {
        if (c == chosen[j]) ok = false;
        std::int64_t p = lat.pairing(c, chosen[j]);
        std::int64_t want = adj[order[pos]][order[j]] ? 1 : 0;
        if (p != want) ok = false;
      }
      if (!ok) continue;
      chosen[pos] = c;
      if (self(self, pos + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return false;
  // Report in template node order, not search order.
  std::vector<Vec> by_node(kk);
  for (int i = 0; i < k; ++i) by_node[order[i]] = chosen[i];
  result.clear();
  for (int i = 0; i < kk; ++i)
    if (e.kinds[i] == CurveKind::MinusTwo) result.push_back(by_node[i]);
  return true;
}

}  // namespace

int main() {
  for (auto& e : catalog_entries()) {
    std::vector<Vec> roots;
    if (e.count_minus_two() == 0) {
      std::cout << e.name << ": {}\n";
      continue;
    }
    if (!search(e, roots)) {
      std::cout << e.name << ": NOT FOUND\n";
      continue;
    }
    std::cout << e.name << ": {";
    for (size_t i = 0; i < roots.size(); ++i) {
      std::cout << (i ? ", " : "") << "mk({";
      for (size_t j = 0; j < roots[i].size(); ++j)
        std::cout << (j ? ", " : "") << roots[i][j];
      std::cout << "})";
    }
    std::cout << "}\n";
  }
  return 0;
}
