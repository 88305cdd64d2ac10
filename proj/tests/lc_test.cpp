#include <catch2/catch_amalgamated.hpp>

#include "delpezzo/lc.hpp"
#include "delpezzo/curves.hpp"

#include <functional>

using namespace delpezzo;

namespace {

// Ids of pairwise intersecting (-1)-curves with the given mutual pairing.
std::vector<int> meeting_tuple(const SurfaceSpec& s, int count, std::int64_t pairing) {
  PicardLattice lat = s.lattice();
  auto ncs = make_negative_curve_set(lat, s.simple_roots);
  int m = (int)ncs.minus_one.size();
  std::vector<int> pick;
  std::function<bool(int)> grow = [&](int start) {
    if ((int)pick.size() == count) return true;
    for (int i = start; i < m; ++i) {
      bool ok = true;
      for (int j : pick)
        if (lat.pairing(ncs.by_id(i).cls, ncs.by_id(j).cls) != pairing) ok = false;
      if (!ok) continue;
      pick.push_back(i);
      if (grow(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  REQUIRE(grow(0));
  return pick;
}

BoundaryDivisor with_ids(const std::vector<int>& ids, const Rat& c) {
  BoundaryDivisor D;
  for (int id : ids) D.terms.push_back({id, c});
  return D;
}

}  // namespace

TEST_CASE("snc boundary with coefficients 1 is log canonical") {
  SurfaceSpec s = smooth_spec(6);
  auto ncs = make_negative_curve_set(s.lattice(), s.simple_roots);
  BoundaryDivisor D;
  for (int i = 0; i < ncs.size(); ++i) D.terms.push_back({i, Rat(1)});
  auto r = lc_check(s, D);
  CHECK(r.lc);
}

TEST_CASE("coefficients outside (0,1] are rejected") {
  SurfaceSpec s = smooth_spec(6);
  BoundaryDivisor D;
  D.terms.push_back({0, Rat(3, 2)});
  CHECK_THROWS_AS(lc_check(s, D), SpecError);
  D.terms[0].coeff = Rat(0);
  CHECK_THROWS_AS(lc_check(s, D), SpecError);
}

TEST_CASE("three concurrent lines at full coefficient are not log canonical") {
  SurfaceSpec s = smooth_spec(3);
  auto ids = meeting_tuple(s, 3, 1);
  IncidenceAnnotation ann;
  ann.point_id = 0;
  for (int id : ids) ann.members.push_back({id, 1});
  s.annotations = {ann};
  validate_spec(s);

  auto bad = lc_check(s, with_ids(ids, Rat(1)));
  CHECK_FALSE(bad.lc);
  CHECK_FALSE(bad.witness.empty());

  // At coefficient 2/3 the blow-up discrepancy is exactly 1: still lc.
  auto edge = lc_check(s, with_ids(ids, Rat(2, 3)));
  CHECK(edge.lc);

  CHECK(lct_pair(s, with_ids(ids, Rat(1))) == Rat(2, 3));
}

TEST_CASE("a tacnodal pair has threshold 3/4") {
  SurfaceSpec s = smooth_spec(2);
  auto ids = meeting_tuple(s, 2, 2);
  IncidenceAnnotation ann;
  ann.point_id = 0;
  ann.members = {{ids[0], 1}, {ids[1], 1}};
  ann.contact = {{ids[0], ids[1], 2}};
  s.annotations = {ann};
  validate_spec(s);

  CHECK(lct_pair(s, with_ids(ids, Rat(1))) == Rat(3, 4));
  CHECK_FALSE(lc_check(s, with_ids(ids, Rat(1))).lc);
  CHECK(lc_check(s, with_ids(ids, Rat(3, 4))).lc);
}

TEST_CASE("a plain node has threshold 1") {
  SurfaceSpec s = smooth_spec(3);
  auto ids = meeting_tuple(s, 2, 1);
  // No annotation: transverse crossing.
  CHECK(lct_pair(s, with_ids(ids, Rat(1))) == Rat(1));
  CHECK(lc_check(s, with_ids(ids, Rat(1))).lc);
}

TEST_CASE("general members by class are snc against everything") {
  SurfaceSpec s = smooth_spec(6);
  BoundaryDivisor D;
  D.terms.push_back({Vec{1, 0, 0, 0}, Rat(1)});
  D.terms.push_back({0, Rat(1)});
  CHECK(lc_check(s, D).lc);
}

TEST_CASE("threshold scales with support multiplicity") {
  SurfaceSpec s = smooth_spec(3);
  auto ids = meeting_tuple(s, 3, 1);
  IncidenceAnnotation ann;
  ann.point_id = 0;
  for (int id : ids) ann.members.push_back({id, 1});
  s.annotations = {ann};
  // Halving the support coefficients doubles the threshold, capped at 1.
  CHECK(lct_pair(s, with_ids(ids, Rat(1, 2))) == Rat(1));
}

TEST_CASE("lc is monotone in the coefficients") {
  SurfaceSpec s = smooth_spec(3);
  auto ids = meeting_tuple(s, 3, 1);
  IncidenceAnnotation ann;
  ann.point_id = 0;
  for (int id : ids) ann.members.push_back({id, 1});
  s.annotations = {ann};
  Rat t = lct_pair(s, with_ids(ids, Rat(1)));
  CHECK(lc_check(s, with_ids(ids, t)).lc);
  CHECK_FALSE(lc_check(s, with_ids(ids, t + Rat(1, 100))).lc);
}
