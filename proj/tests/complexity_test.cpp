#include <catch2/catch_amalgamated.hpp>

#include "delpezzo/complexity.hpp"
#include "delpezzo/catalog.hpp"

using namespace delpezzo;

TEST_CASE("smooth surfaces: sigma = min(d, 12-d) with a verified boundary") {
  for (int d = 1; d <= 9; ++d) {
    SurfaceSpec s = smooth_spec(d);
    ComplexityReport rep = analyze(s);
    REQUIRE(rep.exact());
    CHECK(rep.sigma() == Rat(std::min(d, 12 - d)));
    CHECK(rep.route == Route::Smooth);
    CHECK(rep.rho_x == 10 - d);
    REQUIRE(rep.certificate.has_value());
    std::string why;
    CHECK(verify_boundary_certificate(s, *rep.certificate, rep.sigma(), &why));
    INFO(why);
  }
}

TEST_CASE("quadric models") {
  SurfaceSpec q;
  q.degree = 8;
  q.model = Model::P1xP1;
  ComplexityReport rep = analyze(q);
  CHECK(rep.sigma() == Rat(4));
  CHECK(rep.rho_x == 2);
  CHECK(rep.gamma_lo() == Rat(0));

  q.model = Model::F2Cone;
  rep = analyze(q);
  CHECK(rep.sigma() == Rat(3));
  CHECK(rep.rho_x == 1);
  CHECK(rep.gamma_lo() == Rat(0));
}

TEST_CASE("degree 1 is always sigma = 1") {
  SurfaceSpec s = smooth_spec(1);
  CHECK(analyze(s).sigma() == Rat(1));
  s.simple_roots = {{0, 1, -1, 0, 0, 0, 0, 0, 0}};
  ComplexityReport rep = analyze(s);
  CHECK(rep.sigma() == Rat(1));
  CHECK(rep.gamma_lo() == rep.gamma_hi());
}

TEST_CASE("high degree singular surfaces have gamma 0") {
  SurfaceSpec s;
  s.degree = 7;
  s.simple_roots = {{0, 1, -1}};
  ComplexityReport rep = analyze(s);
  REQUIRE(rep.exact());
  CHECK(rep.route == Route::HighDegree);
  CHECK(rep.rho_x == 2);
  CHECK(rep.sigma() == Rat(4));
  CHECK(rep.gamma_lo() == Rat(0));
}

TEST_CASE("blowing up a point on a line gives a cycle complement") {
  SurfaceSpec s = smooth_spec(5);
  SurfaceSpec z = blow_up(s, {{0}});  // degree 4 with one A1
  ComplexityReport rep = analyze(z);
  REQUIRE(rep.exact());
  CHECK(rep.route == Route::CycleComplement);
  CHECK(rep.sigma() == Rat(4));
  REQUIRE(rep.certificate.has_value());
  // Unit coefficients on a content-4 cycle.
  for (auto& t : rep.certificate->terms) CHECK(t.coeff == Rat(1));
  std::string why;
  CHECK(verify_boundary_certificate(z, *rep.certificate, Rat(4), &why));
}

TEST_CASE("catalog surfaces route through the table") {
  // D4 of degree 4: gamma 3/2, sigma 5/2.
  for (auto& e : catalog_entries()) {
    if (e.name != "Y_{4,2}") continue;
    SurfaceSpec s = e.spec();
    ComplexityReport rep = analyze(s);
    REQUIRE(rep.exact());
    CHECK(rep.route == Route::TreeCatalog);
    CHECK(rep.sigma() == Rat(5, 2));
    CHECK(rep.gamma_lo() == Rat(3, 2));
    REQUIRE(rep.certificate.has_value());
    std::string why;
    CHECK(verify_boundary_certificate(s, *rep.certificate, rep.sigma(), &why));
  }
}

TEST_CASE("certificate verification rejects tampering") {
  SurfaceSpec s = smooth_spec(6);
  ComplexityReport rep = analyze(s);
  REQUIRE(rep.certificate.has_value());
  BoundaryDivisor D = *rep.certificate;
  std::string why;

  BoundaryDivisor wrong_sum = D;
  wrong_sum.terms[0].coeff = Rat(1, 2);
  CHECK_FALSE(verify_boundary_certificate(s, wrong_sum, rep.sigma(), &why));

  BoundaryDivisor short_sum = D;
  short_sum.terms.pop_back();
  CHECK_FALSE(verify_boundary_certificate(s, short_sum, rep.sigma(), &why));

  CHECK_FALSE(verify_boundary_certificate(s, D, rep.sigma() + Rat(1), &why));
}

TEST_CASE("counted coefficient sum ignores (-2)-curves") {
  SurfaceSpec s;
  s.degree = 6;
  s.simple_roots = {{0, 1, -1, 0}};
  auto ncs = make_negative_curve_set(s.lattice(), s.simple_roots);
  int root_id = ncs.size() - 1;
  REQUIRE(ncs.by_id(root_id).kind == CurveKind::MinusTwo);
  BoundaryDivisor D;
  D.terms.push_back({0, Rat(1)});
  D.terms.push_back({root_id, Rat(1)});
  D.terms.push_back({Vec{1, 0, 0, 0}, Rat(1, 2)});  // nef class counts
  CHECK(counted_coefficient_sum(s, D) == Rat(3, 2));
}

TEST_CASE("sigma bounds bracket the exact value") {
  for (auto& e : catalog_entries()) {
    SurfaceSpec s = e.spec();
    auto [lo, hi] = sigma_bounds(s);
    CHECK(lo <= e.sigma());
    CHECK(e.sigma() <= hi);
    CHECK(hi == sigma_upper(s));
  }
}

TEST_CASE("gamma interval accessors") {
  ComplexityReport rep;
  rep.sigma_lo = Rat(2);
  rep.sigma_hi = Rat(3);
  rep.rho_x = 4;
  CHECK_FALSE(rep.exact());
  CHECK_THROWS_AS(rep.sigma(), SpecError);
  CHECK(rep.gamma_lo() == Rat(3));
  CHECK(rep.gamma_hi() == Rat(4));
}

TEST_CASE("theorem membership accepts the catalog and rejects nonsense") {
  for (auto& e : catalog_entries()) {
    SurfaceSpec s = e.spec();
    ComplexityReport rep = analyze(s, false);
    CHECK(check_theorem_membership(s, rep));
  }
  SurfaceSpec s;
  s.degree = 4;
  s.simple_roots = {{0, 1, -1, 0, 0, 0}};
  ComplexityReport fake = analyze(s, false);
  REQUIRE(fake.exact());
  fake.sigma_lo = fake.sigma_hi = Rat(7, 3);  // not a permitted degree-4 value
  CHECK_FALSE(check_theorem_membership(s, fake));
}
