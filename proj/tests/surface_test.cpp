#include <catch2/catch_amalgamated.hpp>

#include "delpezzo/surface.hpp"
#include "delpezzo/curves.hpp"

using namespace delpezzo;

TEST_CASE("smooth specs validate at every degree") {
  for (int d = 1; d <= 9; ++d) {
    SurfaceSpec s = smooth_spec(d);
    CHECK_NOTHROW(validate_spec(s));
    CHECK(picard_rank_of_X(s) == 10 - d);
    CHECK(singularity_type(s) == "smooth");
  }
}

TEST_CASE("quadric models validate") {
  SurfaceSpec q;
  q.model = Model::P1xP1;
  q.degree = 8;
  CHECK_NOTHROW(validate_spec(q));
  CHECK(picard_rank_of_X(q) == 2);
  q.model = Model::F2Cone;
  CHECK_NOTHROW(validate_spec(q));
  CHECK(picard_rank_of_X(q) == 1);
  q.degree = 7;
  CHECK_THROWS_AS(validate_spec(q), SpecError);
}

TEST_CASE("bad specs are rejected") {
  SurfaceSpec s;
  s.degree = 0;
  CHECK_THROWS_AS(validate_spec(s), SpecError);
  s.degree = 10;
  CHECK_THROWS_AS(validate_spec(s), SpecError);

  s.degree = 6;
  s.simple_roots = {{0, 1, -1}};  // wrong rank for n=3
  CHECK_THROWS(validate_spec(s));
  s.simple_roots = {{0, 1, 1, 0}};  // not a root
  CHECK_THROWS_AS(validate_spec(s), SpecError);
  s.simple_roots = {{0, 1, -1, 0}, {0, -1, 1, 0}};  // dependent
  CHECK_THROWS_AS(validate_spec(s), SpecError);
  s.simple_roots = {{0, 1, -1, 0}};
  CHECK_NOTHROW(validate_spec(s));
}

TEST_CASE("singularity types read off the root system") {
  SurfaceSpec s;
  s.degree = 6;
  s.simple_roots = {{0, 1, -1, 0}};
  CHECK(singularity_type(s) == "A1");
  s.simple_roots = {{0, 1, -1, 0}, {0, 0, 1, -1}};
  CHECK(singularity_type(s) == "A2");
  s.degree = 4;
  s.simple_roots = {{0, 1, -1, 0, 0, 0}, {0, 0, 1, -1, 0, 0}, {0, 0, 0, 1, -1, 0}};
  CHECK(singularity_type(s) == "A3");
  s.simple_roots = {{0, 0, 0, 0, 1, -1}, {0, 0, 0, 1, -1, 0},
                    {0, 0, 1, -1, 0, 0}, {1, -1, -1, -1, 0, 0}};
  CHECK(singularity_type(s) == "D4");
  s.degree = 6;
  s.simple_roots = {{0, 1, -1, 0}, {1, -1, -1, -1}};
  CHECK(singularity_type(s) == "2A1");
}

TEST_CASE("annotations are range and pairing checked") {
  SurfaceSpec s = smooth_spec(6);  // hexagon of six (-1)-curves
  IncidenceAnnotation ann;
  ann.point_id = 0;
  ann.members = {{0, 1}};
  s.annotations = {ann};
  CHECK_THROWS_AS(validate_spec(s), SpecError);  // needs two members

  PicardLattice lat = s.lattice();
  auto ncs = make_negative_curve_set(lat, s.simple_roots);
  // Find two disjoint curves: declaring a meeting must fail.
  int a = -1, b = -1;
  for (int i = 0; i < ncs.size() && a < 0; ++i)
    for (int j = i + 1; j < ncs.size(); ++j)
      if (lat.pairing(ncs.by_id(i).cls, ncs.by_id(j).cls) == 0) {
        a = i;
        b = j;
        break;
      }
  REQUIRE(a >= 0);
  s.annotations[0].members = {{a, 1}, {b, 1}};
  CHECK_THROWS_AS(validate_spec(s), SpecError);
}

TEST_CASE("blow-up at a general point lowers the degree") {
  SurfaceSpec s = smooth_spec(6);
  SurfaceSpec z = blow_up(s, {});
  CHECK(z.degree == 5);
  CHECK(z.simple_roots.empty());
  CHECK_NOTHROW(validate_spec(z));
}

TEST_CASE("blow-up on a (-1)-curve creates an A1 point") {
  SurfaceSpec s = smooth_spec(6);
  SurfaceSpec z = blow_up(s, {{0}});
  CHECK(z.degree == 5);
  REQUIRE(z.simple_roots.size() == 1);
  CHECK(singularity_type(z) == "A1");
  // The new root is the strict transform: old class minus the new E.
  PicardLattice lat = s.lattice();
  auto ncs = make_negative_curve_set(lat, s.simple_roots);
  Vec expect = ncs.by_id(0).cls;
  expect.push_back(-1);
  CHECK(z.simple_roots[0] == expect);
}

TEST_CASE("blow-up at a crossing of two (-1)-curves") {
  SurfaceSpec s = smooth_spec(6);
  PicardLattice lat = s.lattice();
  auto ncs = make_negative_curve_set(lat, s.simple_roots);
  int a = -1, b = -1;
  for (int i = 0; i < ncs.size() && a < 0; ++i)
    for (int j = i + 1; j < ncs.size(); ++j)
      if (lat.pairing(ncs.by_id(i).cls, ncs.by_id(j).cls) == 1) {
        a = i;
        b = j;
        break;
      }
  REQUIRE(a >= 0);
  SurfaceSpec z = blow_up(s, {{a, b}});
  CHECK(z.simple_roots.size() == 2);
  CHECK(singularity_type(z) == "2A1");
}

TEST_CASE("illegal blow-ups are rejected") {
  SurfaceSpec s;
  s.degree = 6;
  s.simple_roots = {{0, 1, -1, 0}};
  auto ncs = make_negative_curve_set(s.lattice(), s.simple_roots);
  int root_id = ncs.by_id(ncs.size() - 1).id;
  CHECK_THROWS_AS(blow_up(s, {{root_id}}), SpecError);  // on a (-2)-curve

  SurfaceSpec d1 = smooth_spec(1);
  CHECK_THROWS_AS(blow_up(d1, {}), SpecError);  // degree floor
}

TEST_CASE("contract undoes a general blow-up") {
  SurfaceSpec s = smooth_spec(5);
  SurfaceSpec z = blow_up(s, {});  // degree 4, smooth
  // Contract the new exceptional curve E_5 = (0,...,0,1).
  auto ncs = make_negative_curve_set(z.lattice(), z.simple_roots);
  Vec e_new(z.n() + 1, 0);
  e_new.back() = 1;
  int id = -1;
  for (auto* c : ncs.all())
    if (c->cls == e_new) id = c->id;
  REQUIRE(id >= 0);
  SurfaceSpec back = contract(z, id);
  CHECK(back.degree == 5);
  CHECK(back.simple_roots.empty());
}

TEST_CASE("contracting a (-1)-curve meeting a root absorbs it") {
  // Degree 5, A1 from blowing up a point on a line: contracting the new E
  // returns to the smooth degree-6 surface.
  SurfaceSpec s = smooth_spec(6);
  SurfaceSpec z = blow_up(s, {{0}});
  auto ncs = make_negative_curve_set(z.lattice(), z.simple_roots);
  Vec e_new(z.n() + 1, 0);
  e_new.back() = 1;
  int id = -1;
  for (auto* c : ncs.all())
    if (c->cls == e_new) id = c->id;
  REQUIRE(id >= 0);
  SurfaceSpec back = contract(z, id);
  CHECK(back.degree == 6);
  CHECK(back.simple_roots.empty());
}

TEST_CASE("contracting a conic class on degree 7 yields a quadric") {
  SurfaceSpec s = smooth_spec(7);  // n=2, curves E1, E2, H-E1-E2
  auto ncs = make_negative_curve_set(s.lattice(), s.simple_roots);
  int id = -1;
  for (auto* c : ncs.all())
    if (c->cls == Vec{1, -1, -1}) id = c->id;
  REQUIRE(id >= 0);
  SurfaceSpec q = contract(s, id);
  CHECK(q.degree == 8);
  CHECK(q.model == Model::P1xP1);
}
