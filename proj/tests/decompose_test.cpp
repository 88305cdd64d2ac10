#include <catch2/catch_amalgamated.hpp>

#include "delpezzo/decompose.hpp"
#include "delpezzo/graph.hpp"

using namespace delpezzo;

namespace {

Vec resum(const NegativeCurveSet& ncs, const Decomposition& d, int rank) {
  Vec s(rank, 0);
  for (auto& [id, c] : d.terms)
    s = vec_add(s, vec_scale(c, ncs.by_id(id).cls));
  return s;
}

}  // namespace

TEST_CASE("fiber class on the smooth degree-6 surface") {
  SurfaceSpec s = smooth_spec(6);
  auto ncs = make_negative_curve_set(s.lattice(), s.simple_roots);
  Vec L{1, -1, 0, 0};  // conic fiber through the first point
  auto decs = decompositions_of(s, L);
  // H-E1 = (H-E1-E2)+E2 = (H-E1-E3)+E3: exactly the two broken fibers.
  CHECK(decs.size() == 2);
  for (auto& d : decs) {
    CHECK(resum(ncs, d, 4) == L);
    CHECK(d.terms.size() == 2);
    for (auto& [id, c] : d.terms) CHECK(c == 1);
  }
}

TEST_CASE("decompositions resum to the target on singular specs") {
  SurfaceSpec s;
  s.degree = 4;
  s.simple_roots = {{0, 1, -1, 0, 0, 0}, {0, 0, 1, -1, 0, 0}};
  auto ncs = make_negative_curve_set(s.lattice(), s.simple_roots);
  Vec K = s.lattice().anticanonical_class();
  auto decs = decompositions_of(s, K);
  CHECK_FALSE(decs.empty());
  for (auto& d : decs) {
    CHECK(resum(ncs, d, 6) == K);
    for (auto& [id, c] : d.terms) CHECK(c >= 1);
  }
  // No duplicates.
  for (size_t i = 0; i < decs.size(); ++i)
    for (size_t j = i + 1; j < decs.size(); ++j) CHECK_FALSE(decs[i] == decs[j]);
}

TEST_CASE("non-effective classes have no decomposition") {
  SurfaceSpec s = smooth_spec(6);
  CHECK_THROWS_AS(decompositions_of(s, Vec{-1, 0, 0, 0}), SpecError);  // -K.L < 0
  CHECK(decompositions_of(s, Vec{0, 0, 1, -1}).empty());  // root, no curve backs it
}

TEST_CASE("fiber decompositions classify into the three shapes") {
  // A1 on degree 6: fiber H-E1 over the root E2-E3.
  SurfaceSpec s;
  s.degree = 6;
  s.simple_roots = {{0, 0, 1, -1}};
  DualGraph g = build_dual_graph(s);
  PicardLattice lat = s.lattice();
  for (auto& L : detail::enumerate_classes(3, 0, 2)) {
    bool nef = true;
    for (auto* c : g.curves.all())
      if (lat.pairing(L, c->cls) < 0) nef = false;
    if (!nef) continue;
    for (auto& d : decompositions_of(s, L)) {
      auto t = classify_fiber_decomposition(s, g, d);
      CHECK(t != FiberType::NonConforming);
    }
  }
}

TEST_CASE("a two-line fiber is type 1 with no roots") {
  SurfaceSpec s = smooth_spec(6);
  DualGraph g = build_dual_graph(s);
  auto decs = decompositions_of(s, Vec{1, -1, 0, 0});
  REQUIRE(decs.size() == 2);
  for (auto& d : decs)
    CHECK(classify_fiber_decomposition(s, g, d) == FiberType::Type1);
}

TEST_CASE("denominator of smooth surfaces") {
  // With N (-1)-curves and full symmetry the minimax coefficient is d/N;
  // on degree 7 the three curves force coefficient 3 on the middle one.
  const std::pair<int, Rat> expect[] = {
      {2, Rat(2, 56)}, {3, Rat(3, 27)}, {4, Rat(4, 16)},
      {5, Rat(5, 10)}, {6, Rat(1)},     {7, Rat(3)}};
  for (auto& [d, v] : expect) CHECK(denominator(smooth_spec(d)).value == v);
}

TEST_CASE("denominator witness decomposes the anticanonical class") {
  SurfaceSpec s;
  s.degree = 4;
  s.simple_roots = {{0, 0, 0, 0, 1, -1}, {0, 0, 0, 1, -1, 0},
                    {0, 0, 1, -1, 0, 0}, {1, -1, -1, -1, 0, 0}};  // D4
  auto r = denominator(s);
  auto ncs = make_negative_curve_set(s.lattice(), s.simple_roots);
  REQUIRE((int)r.coeffs.size() == ncs.size());
  RationalDivisor rd;
  Rat maxc(0);
  for (int i = 0; i < ncs.size(); ++i) {
    CHECK(r.coeffs[i] >= Rat(0));
    rd.add(ncs.by_id(i).cls, r.coeffs[i]);
    maxc = std::max(maxc, r.coeffs[i]);
  }
  CHECK(maxc == r.value);
  auto sum = rd.class_sum(6);
  Vec K = s.lattice().anticanonical_class();
  for (int i = 0; i < 6; ++i) CHECK(sum[i] == Rat(K[i]));
  CHECK(r.value >= Rat(1));
}

TEST_CASE("denominator witness is reproducible") {
  SurfaceSpec s;
  s.degree = 5;
  s.simple_roots = {{0, 1, -1, 0, 0}, {0, 0, 1, -1, 0}};
  auto a = denominator(s);
  auto b = denominator(s);
  CHECK(a.value == b.value);
  CHECK(a.coeffs == b.coeffs);
}

TEST_CASE("nef audit classes pair nonnegatively with every curve") {
  SurfaceSpec s;
  s.degree = 4;
  s.simple_roots = {{0, 1, -1, 0, 0, 0}};
  PicardLattice lat = s.lattice();
  auto ncs = make_negative_curve_set(lat, s.simple_roots);
  auto audit = nef_audit_classes(s);
  CHECK_FALSE(audit.empty());
  for (auto& v : audit) {
    CHECK(lat.self_intersection(v) >= 0);
    std::int64_t deg = lat.anticanonical_degree(v);
    CHECK(deg >= 1);
    CHECK(deg <= 3);
    for (auto* c : ncs.all()) CHECK(lat.pairing(v, c->cls) >= 0);
  }
}

TEST_CASE("slave bound rejects negative coefficients") {
  SurfaceSpec s = smooth_spec(6);
  SlaveDivisor neg;
  neg.terms = {{0, Rat(-1)}};
  CHECK_THROWS_AS(verify_slave_bound(s, neg), SpecError);
}
