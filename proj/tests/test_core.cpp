#include <doctest.h>

#include <random>

#include "henon/core.hpp"

using namespace henon;

namespace {

Complex rand_c(std::mt19937_64& g, double s) {
  std::uniform_real_distribution<double> u(-s, s);
  return {u(g), u(g)};
}

HenonMap rand_map(std::mt19937_64& g) {
  std::uniform_int_distribution<int> deg(2, 5);
  const int d = deg(g);
  std::vector<Complex> c(static_cast<size_t>(d) + 1);
  for (auto& x : c) x = rand_c(g, 1.0);
  c[0] += Complex(1.5, 0.0);
  Complex delta = rand_c(g, 1.0);
  if (std::abs(delta) < 0.2) delta += 0.5;
  return HenonMap(rand_c(g, 0.5), delta, Polynomial(c));
}

double rel(const C2Point& a, const C2Point& b) { return distance(a, b) / (1.0 + norm(b)); }

}  // namespace

TEST_CASE("eval_map hand evaluations") {
  const HenonMap sq(0.0, 1.0, Polynomial{1.0, 0.0, 0.0});
  CHECK(eval_map(sq, {}) == C2Point{});
  CHECK(eval_map(sq, {Complex(1.0), Complex(2.0)}) == C2Point{Complex(2.0), Complex(3.0)});
  const HenonMap cubic(Complex(0.0, 1.0), 2.0, Polynomial{1.0, 0.0, 0.0, 0.0});
  CHECK(eval_map(cubic, {Complex(0.0), Complex(1.0)}) == C2Point{Complex(1.0, 1.0), Complex(1.0)});
}

TEST_CASE("eval_inverse hand evaluations") {
  const HenonMap sq(0.0, 1.0, Polynomial{1.0, 0.0, 0.0});
  CHECK(eval_inverse(sq, {Complex(2.0), Complex(3.0)}) == C2Point{Complex(1.0), Complex(2.0)});
  const HenonMap sq2(0.0, 2.0, Polynomial{1.0, 0.0, 0.0});
  CHECK(eval_inverse(sq2, {Complex(0.0), Complex(4.0)}) == C2Point{Complex(-2.0), Complex(0.0)});
}

TEST_CASE("overflow is reported") {
  const HenonMap sq(0.0, 1.0, Polynomial{1.0, 0.0, 0.0});
  CHECK_THROWS_AS(eval_map(sq, {Complex(0.0), Complex(1e200)}), LabError);
}

TEST_CASE("roundtrip in both directions") {
  std::mt19937_64 g(1);
  for (int k = 0; k < 2000; ++k) {
    const HenonMap f = rand_map(g);
    const C2Point z{rand_c(g, 3.0), rand_c(g, 3.0)};
    CHECK(rel(eval_inverse(f, eval_map(f, z)), z) <= 1e-9);
    CHECK(rel(eval_map(f, eval_inverse(f, z)), z) <= 1e-9);
  }
}

TEST_CASE("jacobian") {
  const HenonMap sq(0.0, 1.0, Polynomial{1.0, 0.0, 0.0});
  const Matrix2 j = jacobian(sq, {Complex(7.0, 2.0), Complex(0.0)});
  CHECK(j.a == 0.0);
  CHECK(j.b == 1.0);
  CHECK(j.c == -1.0);
  CHECK(j.d == 0.0);
  const Matrix2 j2 = jacobian(HenonMap(0.0, 0.1, Polynomial{1.0, -1.1, 0.0}), {});
  CHECK(j2.c == -0.1);
  CHECK(j2.d == -1.1);

  std::mt19937_64 g(2);
  for (int k = 0; k < 1000; ++k) {
    const HenonMap f = rand_map(g);
    const C2Point z{rand_c(g, 2.0), rand_c(g, 2.0)};
    CHECK(std::abs(jacobian(f, z).det() - f.delta()) <= 1e-12 * std::abs(f.delta()));
  }
}

TEST_CASE("matrix norms") {
  const Matrix2 m{Complex(0.0), Complex(1.0), Complex(-0.1), Complex(0.0)};
  CHECK(m.spectral_radius() == doctest::Approx(std::sqrt(0.1)).epsilon(1e-12));
  CHECK(m.spectral_norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.frobenius() == doctest::Approx(std::sqrt(1.01)).epsilon(1e-12));
}

TEST_CASE("inverse_as_plus") {
  const HenonMap sq(0.0, 1.0, Polynomial{1.0, 0.0, 0.0});
  CHECK(inverse_as_plus(sq) == sq);

  std::mt19937_64 g(3);
  for (int k = 0; k < 100; ++k) {
    const HenonMap f = rand_map(g);
    const HenonMap h = inverse_as_plus(f);
    CHECK(h.degree() == f.degree());
    const C2Point z{rand_c(g, 2.0), rand_c(g, 2.0)};
    CHECK(rel(eval_map(h, z), swap(eval_inverse(f, swap(z)))) <= 1e-12);
    const HenonMap back = inverse_as_plus(h);
    CHECK(std::abs(back.alpha() - f.alpha()) <= 1e-12);
    CHECK(std::abs(back.delta() - f.delta()) <= 1e-12 * std::abs(f.delta()));
    for (int j = 0; j <= f.degree(); ++j) {
      CHECK(std::abs(back.poly().coeff(j) - f.poly().coeff(j)) <= 1e-12 * (1.0 + std::abs(f.poly().coeff(j))));
    }
  }
}

TEST_CASE("condition A radius for the volume-preserving quadratic") {
  const std::vector<HenonMap> maps{HenonMap(0.0, 1.0, Polynomial{1.0, 0.0, 0.0})};
  const FiltrationParams p = condition_a_radius(maps);
  CHECK(p.rho0 == 19.0);
  CHECK(p.R == doctest::Approx(38.0).epsilon(1e-12));
  CHECK(p.rho == 2.0);
  CHECK(std::isfinite(p.c_tel));
  CHECK(std::isfinite(p.c_tel_minus));
}

TEST_CASE("condition A certificate on random packs") {
  std::mt19937_64 g(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int pack = 0; pack < 5; ++pack) {
    std::vector<HenonMap> maps;
    for (int k = 0; k < 3; ++k) maps.push_back(rand_map(g));
    const FiltrationParams p = condition_a_radius(maps);
    for (int k = 0; k < 2000; ++k) {
      const double ay = p.R * (1.0 + 9.0 * u(g));
      const Complex y = std::polar(ay, 2.0 * M_PI * u(g));
      const Complex x = std::polar(ay * u(g), 2.0 * M_PI * u(g));
      for (const auto& f : maps) {
        const C2Point w = eval_map(f, {x, y});
        CHECK(in_v_plus(w, p.R));
        CHECK(std::abs(w.y) > p.rho * ay);
        const C2Point v = eval_inverse(f, {y, x});
        CHECK(in_v_minus(v, p.R));
        CHECK(std::abs(v.x) > p.rho * ay);
      }
    }
  }
}

TEST_CASE("classify_region") {
  CHECK(classify_region({}, 2.0) == Region::d_r);
  CHECK(classify_region({Complex(1.0), Complex(10.0)}, 2.0) == Region::v_plus);
  CHECK(classify_region({Complex(10.0), Complex(1.0)}, 2.0) == Region::v_minus);
  CHECK(classify_region({Complex(2.0), Complex(1.0)}, 2.0) == Region::boundary);
}

TEST_CASE("norm is overflow safe") {
  CHECK(norm({Complex(3e200), Complex(4e200)}) == doctest::Approx(5e200));
}

TEST_CASE("invalid maps are rejected") {
  CHECK_THROWS_AS(HenonMap(0.0, 0.0, Polynomial{1.0, 0.0, 0.0}), LabError);
  CHECK_THROWS_AS(HenonMap(0.0, 1.0, Polynomial{0.0, 1.0, 0.0}), LabError);
}
