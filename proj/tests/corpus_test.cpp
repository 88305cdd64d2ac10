#include <catch2/catch_amalgamated.hpp>

#include "delpezzo/selftest.hpp"

#include <map>

using namespace delpezzo;

TEST_CASE("corpus is populated across degrees") {
  auto& corpus = corpus_specs();
  CHECK(corpus.size() >= 200);
  std::map<int, int> per_degree;
  for (auto& s : corpus) {
    ++per_degree[s.degree];
    CHECK_FALSE(s.simple_roots.empty());
    CHECK_NOTHROW(validate_spec(s));
  }
  for (int d = 2; d <= 6; ++d) CHECK(per_degree[d] > 0);
}

TEST_CASE("analysis invariants hold on every corpus spec") {
  for (auto& s : corpus_specs()) {
    ComplexityReport rep = analyze(s, false);
    CHECK(rep.sigma_lo <= rep.sigma_hi);
    CHECK(rep.sigma_lo >= Rat(1));
    CHECK(rep.sigma_hi <= Rat(s.degree));
    CHECK(rep.rho_x == picard_rank_of_X(s));
    if (rep.exact()) CHECK(check_theorem_membership(s, rep));
    // Exact routes deliver exact values; bounds-only never claims exactness
    // accidentally.
    if (rep.route != Route::BoundsOnly) CHECK(rep.exact());
  }
}

TEST_CASE("sandwich bounds hold on every corpus spec") {
  for (auto& s : corpus_specs()) {
    auto [lo, hi] = sigma_bounds(s);
    CHECK(lo <= hi);
    ComplexityReport rep = analyze(s, false);
    if (rep.exact()) {
      CHECK(lo <= rep.sigma());
      CHECK(rep.sigma() <= hi);
    }
  }
}

TEST_CASE("routes are consistent with the dual graph shape") {
  for (auto& s : corpus_specs()) {
    ComplexityReport rep = analyze(s, false);
    DualGraph g = build_dual_graph(s);
    switch (rep.route) {
      case Route::CycleComplement: {
        auto mn = find_min_content_cycle(g);
        REQUIRE(mn.has_value());
        CHECK(mn->content == s.degree);
        break;
      }
      case Route::TreeCatalog:
        CHECK(is_tree(g));
        break;
      case Route::BoundsOnly:
        // Only trees outside the catalog land here for degrees 2..6.
        CHECK(is_tree(g));
        CHECK_FALSE(match_tree_surface(s, g).has_value());
        break;
      default:
        break;
    }
  }
}

TEST_CASE("analysis with and without certificates agrees on values") {
  int checked = 0;
  for (auto& s : corpus_specs()) {
    if (s.degree != 4 || checked >= 10) continue;  // keep the LP runs bounded
    ComplexityReport a = analyze(s, true);
    ComplexityReport b = analyze(s, false);
    CHECK(a.sigma_lo == b.sigma_lo);
    CHECK(a.sigma_hi == b.sigma_hi);
    CHECK(a.route == b.route);
    ++checked;
  }
  CHECK(checked > 0);
}
