#include <doctest.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <random>

#include "henon/escape.hpp"
#include "henon/serial.hpp"

using namespace henon;

namespace {

const HenonMap kAttracting(0.0, 0.1, Polynomial{1.0, 0.0, 0.0});

FiltrationParams params_of(const HenonMap& f) {
  const std::vector<HenonMap> maps{f};
  return condition_a_radius(maps);
}

Raster make_raster(int w, int h) {
  Raster r;
  r.width = w;
  r.height = h;
  r.cells.assign(static_cast<size_t>(w) * h, RasterCell{});
  return r;
}

double brute_hausdorff(const std::vector<PixelCoord>& a, const std::vector<PixelCoord>& b) {
  auto directed = [](const auto& x, const auto& y) {
    double worst = 0.0;
    for (const auto& p : x) {
      double best = 1e300;
      for (const auto& q : y) best = std::min(best, std::hypot(p.i - q.i, p.j - q.j));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace

TEST_CASE("classify_orbit") {
  const FiltrationParams p = params_of(kAttracting);
  const MapSequence seq = MapSequence::constant(kAttracting);
  CHECK(classify_orbit(seq, {}, p, 1000).status == Verdict::bounded);
  const auto esc = classify_orbit(seq, {Complex(0.0), Complex(2.0 * p.R)}, p, 1000);
  CHECK(esc.status == Verdict::escaped);
  CHECK(esc.step == 0);
  CHECK(classify_orbit(seq, {Complex(0.0), Complex(3.0)}, p, 1000).status == Verdict::escaped);
  CHECK_THROWS_AS(classify_orbit(seq, {}, p, 0), LabError);
}

TEST_CASE("verdicts never flip when the cap grows") {
  const auto d = MapDistribution::finite(
      {kAttracting, HenonMap(0.0, 0.1, Polynomial{1.0, 0.0, 0.3})}, {0.5, 0.5});
  const FiltrationParams p = d.filtration();
  const MapSequence seq = MapSequence::sampled(d, {12, 0});
  SliceSpec s;
  s.extent = 1.2;
  s.resolution = 24;
  for (int j = 0; j < s.resolution; ++j) {
    for (int i = 0; i < s.resolution; ++i) {
      const auto a = classify_orbit(seq, s.pixel(i, j), p, 5);
      const auto b = classify_orbit(seq, s.pixel(i, j), p, 500);
      if (a.status != Verdict::uncertain) {
        CHECK(a.status == b.status);
        CHECK(a.step == b.step);
      }
    }
  }
}

TEST_CASE("green function basics") {
  const FiltrationParams p = params_of(kAttracting);
  const MapSequence seq = MapSequence::constant(kAttracting);
  CHECK(green_plus(seq, {}, p, 1e-6).value == 0.0);
  const auto g = green_plus(seq, {Complex(0.0), Complex(5.0)}, p, 1e-6);
  CHECK(g.value > 0.0);
  CHECK(g.error_bound <= 1e-6);
  CHECK_THROWS_AS(green_plus(seq, {}, p, 0.0), LabError);
}

TEST_CASE("green functional equation") {
  const auto d = MapDistribution::ball(HenonMap(0.0, 0.5, Polynomial{1.0, 0.0, -0.5}), 0.2);
  const FiltrationParams p = d.filtration();
  const MapSequence seq = MapSequence::sampled(d, {21, 0});
  const double tol = 1e-6;
  std::mt19937_64 g(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const C2Point z{Complex(u(g), u(g)), Complex(u(g), u(g))};
    const auto a = green_plus_traced(seq, z, p, tol, 2000);
    if (a.verdict.status != Verdict::escaped) continue;
    const auto b = green_plus(seq.shifted(1), seq.at(0).apply(z), p, tol);
    CHECK(std::abs(b.value - seq.at(0).degree() * a.estimate.value) <= 2.0 * tol);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("green minus mirrors green plus") {
  const HenonMap f(0.0, 0.5, Polynomial{1.0, 0.0, -0.8});
  const FiltrationParams p = params_of(f);
  const MapSequence inv = MapSequence::constant(inverse_as_plus(f));
  const MapSequence fwd = MapSequence::constant(f);
  int decided = 0, agree = 0;
  SliceSpec s;
  s.extent = 2.0;
  s.resolution = 40;
  for (int j = 0; j < s.resolution; ++j) {
    for (int i = 0; i < s.resolution; ++i) {
      const C2Point z = s.pixel(i, j);
      try {
        const bool plus_zero = green_plus(fwd, z, p, 1e-6).value == 0.0;
        const bool minus_zero = green_minus(inv, swap(z), p, 1e-6).value == 0.0;
        ++decided;
        agree += plus_zero == minus_zero;
      } catch (const GreenIndeterminate&) {
      }
    }
  }
  CHECK(decided > 1000);
  CHECK(agree >= 0.99 * decided);
}

TEST_CASE("green partial sums telescope") {
  const HenonMap f(0.0, 1.0, Polynomial{1.0, 0.0, -1.0});
  const FiltrationParams p = params_of(f);
  const MapSequence seq = MapSequence::constant(f);
  const C2Point z{Complex(0.3), Complex(1.1 * p.R)};
  const auto g = green_partial_sums(seq, z, 60);
  // Allow a few ulps of the partial sums on top of the analytic bound.
  for (int k = 1; k + 1 < 60; ++k) {
    CHECK(std::abs(g[k + 1] - g[k]) <= p.c_tel * std::ldexp(1.0, -k) + 16.0 * DBL_EPSILON * g[k]);
  }
}

TEST_CASE("uncertain orbits carry a partial estimate") {
  const HenonMap volume(0.0, 1.0, Polynomial{1.0, 0.0, 0.0});
  const FiltrationParams p = params_of(volume);
  const MapSequence seq = MapSequence::constant(volume);
  const C2Point z{Complex(0.01), Complex(0.0)};
  CHECK(classify_orbit(seq, z, p, 50).status == Verdict::uncertain);
  try {
    green_plus(seq, z, p, 1e-6, 50);
    FAIL("expected GreenIndeterminate");
  } catch (const GreenIndeterminate& e) {
    CHECK(e.code() == ErrorCode::green_indeterminate);
    CHECK(std::isfinite(e.partial().value));
  }
}

TEST_CASE("basin window rasterizes bounded") {
  const FiltrationParams p = params_of(kAttracting);
  SliceSpec s;
  s.extent = 0.2;
  s.resolution = 16;
  const Raster r = raster_slice(MapSequence::constant(kAttracting), s, p, 2000, 1e-6);
  CHECK(r.count(Verdict::bounded) == r.cells.size());
  CHECK(boundary_extract(r).empty());
}

TEST_CASE("parallel raster is bit-identical to the serial loop") {
  const auto d = MapDistribution::ball(HenonMap(0.0, 0.3, Polynomial{1.0, 0.0, -1.0}), 0.05);
  const FiltrationParams p = d.filtration();
  const MapSequence seq = MapSequence::sampled(d, {77, 0});
  SliceSpec s;
  s.extent = 2.0;
  s.resolution = 48;
  const Raster a = raster_slice(seq, s, p, 500, 1e-6);
  const Raster b = serial::raster_slice(seq, s, p, 500, 1e-6);
  CHECK(a.cells == b.cells);
}

TEST_CASE("slice validation") {
  SliceSpec s;
  s.dir2 = s.dir1;
  CHECK_THROWS_AS(s.validate(), LabError);
  SliceSpec t;
  t.resolution = 0;
  CHECK_THROWS_AS(t.validate(), LabError);
}

TEST_CASE("boundary extraction") {
  Raster all = make_raster(6, 5);
  CHECK(boundary_extract(all).empty());
  for (auto& c : all.cells) c.verdict = Verdict::bounded;
  CHECK(boundary_extract(all).empty());
  for (auto& c : all.cells) c.verdict = Verdict::escaped;
  CHECK(boundary_extract(all).empty());

  Raster half = make_raster(6, 5);
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 6; ++i) half.at(i, j).verdict = i < 3 ? Verdict::bounded : Verdict::escaped;
  }
  const auto seam = boundary_extract(half);
  REQUIRE(seam.size() == 5);
  for (int j = 0; j < 5; ++j) CHECK(seam[j] == PixelCoord{2, j});
}

TEST_CASE("hausdorff distance") {
  const std::vector<PixelCoord> a{{1, 1}, {4, 2}};
  CHECK(hausdorff_pixels(a, a, 0.1) == 0.0);
  CHECK(hausdorff_pixels({{0, 0}}, {{3, 4}}, 0.5) == doctest::Approx(2.5));
  std::vector<PixelCoord> c1, c2;
  for (int j = 0; j < 10; ++j) {
    c1.push_back({2, j});
    c2.push_back({9, j});
  }
  CHECK(hausdorff_pixels(c1, c2, 0.25) == doctest::Approx(7 * 0.25));
  CHECK_THROWS_AS(hausdorff_pixels({}, a, 1.0), LabError);

  std::mt19937_64 g(6);
  std::uniform_int_distribution<int> u(0, 30);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PixelCoord> x, y;
    for (int k = 0; k < 1 + trial % 7; ++k) x.push_back({u(g), u(g)});
    for (int k = 0; k < 1 + trial % 5; ++k) y.push_back({u(g), u(g)});
    CHECK(hausdorff_pixels(x, y, 1.0) == doctest::Approx(brute_hausdorff(x, y)).epsilon(1e-12));
  }
}
