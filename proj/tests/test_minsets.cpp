#include <doctest.h>

#include <cmath>
#include <numeric>

#include "henon/harness.hpp"
#include "henon/minsets.hpp"
#include "henon/serial.hpp"

using namespace henon;

namespace {

const HenonMap kAttracting(0.0, 0.1, Polynomial{1.0, 0.0, 0.0});

std::vector<C2Point> grid(double extent, int resolution) {
  SliceSpec s;
  s.extent = extent;
  s.resolution = resolution;
  return slice_points(s);
}

DiscoveryResult discover(const MapDistribution& d, double extent = 1.5, int res = 10) {
  DiscoveryParams dp;
  dp.cluster_eps = 0.01;
  dp.n_record = 100;
  return discover_minimal_sets(d, d.filtration(), grid(extent, res), dp, {4, 0});
}

// Fixed point of a single real map with the given constant term on the diagonal x = y.
double fixed_point(double c, double delta) {
  // y = y^2 + c - delta y  ->  y^2 - (1 + delta) y + c = 0, attracting root.
  const double b = 1.0 + delta;
  return 0.5 * (b - std::sqrt(b * b - 4.0 * c));
}

}  // namespace

TEST_CASE("digraph period") {
  CHECK(digraph_period({{0}}) == 1);
  CHECK(digraph_period({{1}, {2}, {0}}) == 3);
  // 3-cycle plus a chord 0 -> 2 adds a 2-cycle: gcd(3, 2) = 1.
  CHECK(digraph_period({{1, 2}, {2}, {0}}) == 1);
  // 3-cycle plus a detour closing a 6-cycle: gcd(3, 6) = 3.
  CHECK(digraph_period({{1}, {2}, {0, 3}, {4}, {5}, {0}}) == 3);
  CHECK(digraph_period({{1}, {0}, {3}, {2}}) == 0);
  std::vector<int> level;
  CHECK(digraph_period({{1}, {0}}, &level) == 2);
  CHECK(level == std::vector<int>{0, 1});
}

TEST_CASE("point mass with an attracting fixed point") {
  const auto d = MapDistribution::point_mass(kAttracting);
  const DiscoveryResult r = discover(d);
  REQUIRE(r.finite_count() == 1);
  const auto& L = r.sets[0];
  CHECK(L.period == 1);
  CHECK(L.certified);
  CHECK(L.contraction <= 0.35);
  CHECK(L.capture_radius > 0.0);
  for (const auto& p : L.cloud) CHECK(norm(p) < 0.01);
  CHECK(r.sets.back().is_infinity());
  CHECK(r.issues.empty());
}

TEST_CASE("fixed point location matches the quadratic root") {
  const double c = 0.1;
  const auto d = MapDistribution::point_mass(HenonMap(0.0, 0.1, Polynomial{1.0, 0.0, c}));
  const DiscoveryResult r = discover(d);
  REQUIRE(r.finite_count() == 1);
  const double y = fixed_point(c, 0.1);
  for (const auto& p : r.sets[0].cloud) CHECK(distance(p, {Complex(y), Complex(y)}) < 0.01);
}

TEST_CASE("attracting 3-cycle") {
  // Superattracting period-3 parameter of y^2 + c, with a small delta.
  const HenonMap f(0.0, 0.001, Polynomial{1.0, 0.0, -1.7548776662466927});
  const auto d = MapDistribution::point_mass(f);
  DiscoveryParams dp;
  dp.cluster_eps = 0.01;
  dp.n_record = 60;
  const DiscoveryResult r = discover_minimal_sets(d, d.filtration(), grid(2.0, 16), dp, {4, 0});
  REQUIRE(r.finite_count() == 1);
  const auto& L = r.sets[0];
  CHECK(L.period == 3);
  REQUIRE(L.parts.size() == 3);
  CHECK(L.certified);
  for (const auto& part : L.parts) {
    REQUIRE_FALSE(part.empty());
    const C2Point z = L.cloud[part[0]];
    CHECK(distance(f.apply(f.apply(f.apply(z))), z) < 1e-9);
    CHECK(distance(f.apply(z), z) > 0.1);
  }
  MinimalSetDescriptor copy = L;
  CHECK(detect_period(d, copy, 0.01, 64, {4, 0}) == 3);

  // Small noise thickens each cycle point into a blob.
  const auto noisy = MapDistribution::ball(f, 1e-4);
  const DiscoveryResult rn = discover_minimal_sets(noisy, noisy.filtration(), grid(2.0, 16), dp, {4, 0});
  REQUIRE(rn.finite_count() == 1);
  CHECK(rn.sets[0].period == 3);
  CHECK(rn.sets[0].parts.size() == 3);
}

TEST_CASE("expanding fixture fails certification") {
  // Origin is a fixed point of y^2 with delta = 4: eigenvalues +-2i.
  const auto d = MapDistribution::point_mass(HenonMap(0.0, 4.0, Polynomial{1.0, 0.0, 0.0}));
  MinimalSetDescriptor L;
  L.id = 0;
  L.cloud = {C2Point{}};
  L.capture_radius = 0.01;
  const ContractionReport c = certify_attracting(d, L, 16, 30, {1, 0});
  CHECK_FALSE(c.certified);
  CHECK(c.ratio > 1.0);
}

TEST_CASE("all orbits escape") {
  const auto d = MapDistribution::point_mass(HenonMap(0.0, 0.1, Polynomial{1.0, 0.0, 5.0}));
  const DiscoveryResult r = discover(d, 1.0, 6);
  CHECK(r.finite_count() == 0);
  CHECK(r.grid_bounded == 0);
  REQUIRE(r.sets.size() == 1);
  CHECK(r.sets[0].is_infinity());
}

TEST_CASE("basin estimates") {
  const auto d = MapDistribution::finite(
      {kAttracting, HenonMap(0.0, 0.1, Polynomial{1.0, 0.0, 0.05})}, {0.5, 0.5});
  const DiscoveryResult r = discover(d);
  REQUIRE(r.finite_count() == 1);
  const auto& L = r.sets[0];

  const BasinEstimate in = estimate_TL(d, r.sets, L.cloud[0], 200, 2000, {6, 0});
  CHECK(in.probability_of(L.id) == 1.0);
  CHECK(in.unresolved == 0.0);

  const C2Point far{Complex(0.0), Complex(40.0)};
  const BasinEstimate out = estimate_TL(d, r.sets, far, 200, 2000, {6, 0});
  CHECK(out.probability_of(kInfinityId) == 1.0);

  const C2Point mid{Complex(0.6), Complex(0.9)};
  const BasinEstimate e = estimate_TL(d, r.sets, mid, 500, 2000, {6, 0});
  double total = e.unresolved;
  for (double p : e.probabilities) total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("capture map lookups") {
  MinimalSetDescriptor a, b, inf;
  a.id = 0;
  a.cloud = {C2Point{}};
  a.capture_radius = 0.1;
  b.id = 1;
  b.cloud = {C2Point{Complex(1.0), Complex(0.0)}};
  b.capture_radius = 0.1;
  const CaptureMap cap({a, b, inf}, 10.0);
  CHECK(cap.locate({Complex(0.05), Complex(0.0)}) == 0);
  CHECK(cap.locate({Complex(0.97), Complex(0.0)}) == 1);
  CHECK(cap.locate({Complex(0.5), Complex(0.0)}) == -1);
  CHECK(cap.distance_to(0, {Complex(0.05), Complex(0.0)}) == doctest::Approx(0.05));
  CHECK(cap.distance_to(0, {Complex(0.5), Complex(0.0)}) == 0.1);

  MinimalSetDescriptor wide = b;
  wide.capture_radius = 2.0;
  const CaptureMap overlap({a, wide}, 10.0);
  CHECK_THROWS_AS(overlap.locate({Complex(0.05), Complex(0.0)}), LabError);
}

TEST_CASE("parallel basin outcomes match the serial loop") {
  const auto d = MapDistribution::finite(
      {kAttracting, HenonMap(0.0, 0.1, Polynomial{1.0, 0.0, 0.3})}, {0.5, 0.5});
  const DiscoveryResult r = discover(d);
  REQUIRE(r.finite_count() >= 1);
  const CaptureMap cap(r.sets, d.filtration().R);
  const C2Point z{Complex(0.7), Complex(0.8)};
  CHECK(basin_outcomes(d, cap, z, 300, 2000, {3, 0}) == serial::basin_outcomes(d, cap, z, 300, 2000, {3, 0}));
}
