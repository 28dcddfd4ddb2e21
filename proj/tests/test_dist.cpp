#include <doctest.h>

#include <cmath>

#include "henon/dist.hpp"
#include "henon/sequence.hpp"

using namespace henon;

namespace {

const HenonMap kSq(0.0, 0.1, Polynomial{1.0, 0.0, 0.0});
const HenonMap kShift(0.0, 0.1, Polynomial{1.0, 0.0, 0.2});

}  // namespace

TEST_CASE("point mass always returns its map") {
  const auto d = MapDistribution::point_mass(kSq);
  CHECK(d.is_point_mass());
  for (std::uint64_t i = 0; i < 50; ++i) CHECK(sample_map(d, {i * 7 + 1, i}, i * 13) == kSq);
}

TEST_CASE("finite weights are validated") {
  CHECK_THROWS_AS(MapDistribution::finite({kSq, kShift}, {0.5, 0.6}), LabError);
  CHECK_THROWS_AS(MapDistribution::finite({kSq, kShift}, {1.0}), LabError);
  CHECK_THROWS_AS(MapDistribution::finite({kSq, kShift}, {1.0, 0.0}), LabError);
  CHECK_THROWS_AS(MapDistribution::finite({}, {}), LabError);
}

TEST_CASE("finite sampling follows the weights") {
  const auto d = MapDistribution::finite({kSq, kShift}, {0.25, 0.75});
  int hits = 0;
  const int n = 40000;
  for (int i = 0; i < n; ++i) hits += sample_map(d, {9, 0}, static_cast<std::uint64_t>(i)) == kSq;
  const double p = static_cast<double>(hits) / n;
  CHECK(std::abs(p - 0.25) < 4.0 * std::sqrt(0.25 * 0.75 / n));
}

TEST_CASE("sampling is a pure function of (seed, stream, index)") {
  const auto d = MapDistribution::ball(kSq, 0.3);
  CHECK(sample_map(d, {5, 2}, 17) == sample_map(d, {5, 2}, 17));
  const auto a = sample_sequence(d, {5, 2}, 10);
  const auto b = sample_sequence(d, {5, 2}, 20);
  for (int k = 0; k < 10; ++k) CHECK(a[k] == b[k]);
  const auto c = sample_sequence(d, {5, 3}, 10);
  bool differ = false;
  for (int k = 0; k < 10; ++k) differ = differ || !(a[k] == c[k]);
  CHECK(differ);
}

TEST_CASE("ball noise stays in the ball and shifts alpha and the constant term") {
  const double r = 0.3;
  const auto d = MapDistribution::ball(kSq, r);
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 5000; ++i) {
    const C2Point ab = ball_offset({4, 0}, i, r);
    worst = std::max(worst, norm(ab));
    const HenonMap f = sample_map(d, {4, 0}, i);
    CHECK(f.alpha() == kSq.alpha() + ab.x);
    CHECK(f.poly().coeff(2) == kSq.poly().coeff(2) + ab.y);
    CHECK(f.delta() == kSq.delta());
  }
  CHECK(worst <= r);
  CHECK(worst > 0.9 * r);
}

TEST_CASE("ball offsets are uniform on the 4-ball") {
  // E|v|^2 = 4/6 r^2 for the uniform 4-ball.
  double m2 = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double v = norm(ball_offset({8, 1}, static_cast<std::uint64_t>(i), 1.0));
    m2 += v * v;
  }
  CHECK(m2 / n == doctest::Approx(2.0 / 3.0).epsilon(0.02));
}

TEST_CASE("support bounds cover ball samples") {
  const auto d = MapDistribution::ball(HenonMap(0.1, 0.5, Polynomial{1.0, 0.0, -0.3}), 0.4);
  const FiltrationParams p = d.filtration();
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::vector<HenonMap> one{sample_map(d, {2, 0}, i)};
    CHECK(condition_a_radius(one).R <= p.R);
  }
}

TEST_CASE("inverse distribution") {
  const auto pm = inverse_distribution(MapDistribution::point_mass(kSq));
  CHECK(pm.finite_support().maps[0] == inverse_as_plus(kSq));
  const auto d = MapDistribution::finite({kSq, kShift}, {0.3, 0.7});
  const auto twice = inverse_distribution(inverse_distribution(d));
  for (int k = 0; k < 2; ++k) {
    const HenonMap& a = twice.finite_support().maps[k];
    const HenonMap& b = d.finite_support().maps[k];
    CHECK(std::abs(a.alpha() - b.alpha()) <= 1e-12);
    CHECK(std::abs(a.delta() - b.delta()) <= 1e-12);
    for (int j = 0; j <= 2; ++j) CHECK(std::abs(a.poly().coeff(j) - b.poly().coeff(j)) <= 1e-12);
    CHECK(twice.finite_support().weights[k] == d.finite_support().weights[k]);
  }
}

TEST_CASE("noise family radius") {
  const NoiseFamily fam(kSq, 0.1, 0.5);
  CHECK(fam.radius_at(0.0) == 0.1);
  CHECK(fam.radius_at(1.0) == 0.5);
  CHECK(fam.radius_at(0.5) == doctest::Approx(0.3));
  for (int k = 0; k < 10; ++k) CHECK(fam.radius_at(k / 10.0) < fam.radius_at((k + 1) / 10.0));
  CHECK(family_at(fam, 0.25).ball_noise().radius == doctest::Approx(0.2));
}

TEST_CASE("support_sample") {
  const auto d = MapDistribution::finite({kSq, kShift}, {0.5, 0.5});
  CHECK(support_sample(d, 64, {1, 0}).size() == 2);
  const auto b = support_sample(MapDistribution::ball(kSq, 0.1), 64, {1, 0});
  CHECK(b.size() == 64);
  CHECK(support_sample(MapDistribution::ball(kSq, 0.1), 64, {1, 0}) == b);
}

TEST_CASE("map sequences") {
  const auto d = MapDistribution::ball(kSq, 0.2);
  const MapSequence s = MapSequence::sampled(d, {3, 0});
  CHECK(s.shifted(5).at(2) == s.at(7));
  const MapSequence t = MapSequence::sampled(d, {3, 1});
  const MapSequence sp = s.spliced(4, t);
  CHECK(sp.at(3) == s.at(3));
  CHECK(sp.at(4) == t.at(4));
  CHECK(s.mirrored().at(6) == inverse_as_plus(s.at(6)));
  const MapSequence p = MapSequence::periodic({kSq, kShift});
  CHECK(p.at(0) == kSq);
  CHECK(p.at(5) == kShift);
  CHECK(MapSequence::constant(kSq).at(1000) == kSq);
  CHECK_THROWS_AS(MapSequence::periodic({}), LabError);
}
