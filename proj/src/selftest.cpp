#include <cmath>
#include <functional>

#include "henon/bifurcation.hpp"
#include "henon/harness.hpp"
#include "henon/lyapunov.hpp"
#include "henon/transition.hpp"

namespace henon {

namespace {

HenonMap quadratic(double delta, double c = 0.0) { return HenonMap(0.0, delta, Polynomial{1.0, 0.0, c}); }

bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }
bool close(const C2Point& a, const C2Point& b, double tol = 1e-12) { return close(a.x, b.x, tol) && close(a.y, b.y, tol); }

using Check = std::pair<const char*, std::function<bool()>>;

std::vector<Check> checks() {
  const HenonMap sq = quadratic(1.0);
  const HenonMap attracting = quadratic(0.1);
  return {
      {"map fixes the origin", [=] { return eval_map(sq, {}) == C2Point{}; }},
      {"inverse undoes the map",
       [=] {
         const HenonMap f(Complex(0.3, -0.2), Complex(0.7, 0.1), Polynomial{1.0, Complex(0.0, 0.5), -0.4});
         const C2Point z{Complex(0.4, 0.1), Complex(-0.3, 0.2)};
         return close(eval_inverse(f, eval_map(f, z)), z);
       }},
      {"jacobian at y = 0",
       [=] {
         const Matrix2 j = jacobian(sq, {Complex(5.0), Complex(0.0)});
         return j.a == 0.0 && j.b == 1.0 && j.c == -1.0 && j.d == 0.0;
       }},
      {"conjugated inverse keeps the degree",
       [] {
         const HenonMap f(0.2, 2.0, Polynomial{1.0, 0.0, 0.0, 0.3});
         return inverse_as_plus(f).degree() == f.degree();
       }},
      {"filtration regions",
       [] {
         return classify_region({}, 2.0) == Region::d_r &&
                classify_region({Complex(1.0), Complex(10.0)}, 2.0) == Region::v_plus &&
                classify_region({Complex(10.0), Complex(1.0)}, 2.0) == Region::v_minus;
       }},
      {"point mass samples its map",
       [=] {
         const auto d = MapDistribution::point_mass(attracting);
         return sample_map(d, {7, 3}, 11) == attracting && MapSequence::sampled(d, {1, 0}).at(5) == attracting;
       }},
      {"inverse distribution of a point mass",
       [=] {
         const auto d = inverse_distribution(MapDistribution::point_mass(sq));
         return d.finite_support().maps[0] == inverse_as_plus(sq) && d.finite_support().weights[0] == 1.0;
       }},
      {"family radius endpoints",
       [=] {
         const NoiseFamily fam(sq, 0.1, 0.5);
         return fam.radius_at(0.0) == 0.1 && fam.radius_at(1.0) == 0.5 && std::abs(fam.radius_at(0.5) - 0.3) < 1e-15;
       }},
      {"attracting fixed point is bounded",
       [=] {
         const auto d = MapDistribution::point_mass(attracting);
         const auto v = classify_orbit(MapSequence::constant(attracting), {}, d.filtration(), 1000);
         return v.status == Verdict::bounded;
       }},
      {"green vanishes on a bounded orbit",
       [=] {
         const auto d = MapDistribution::point_mass(attracting);
         return green_plus(MapSequence::constant(attracting), {}, d.filtration(), 1e-6).value == 0.0;
       }},
      {"basin window rasterizes bounded",
       [=] {
         const auto d = MapDistribution::point_mass(attracting);
         SliceSpec s;
         s.extent = 0.1;
         s.resolution = 8;
         const Raster r = raster_slice(MapSequence::constant(attracting), s, d.filtration(), 2000, 1e-6);
         return r.count(Verdict::bounded) == r.cells.size() && boundary_extract(r).empty();
       }},
      {"hausdorff distance of a set to itself",
       [] {
         const std::vector<PixelCoord> a{{0, 0}, {3, 4}};
         return hausdorff_pixels(a, a, 0.5) == 0.0;
       }},
      {"single blob has period 1", [] { return digraph_period({{0}}) == 1; }},
      {"directed 3-cycle has period 3", [] { return digraph_period({{1}, {2}, {0}}) == 3; }},
      {"M preserves constants",
       [=] {
         const auto d = MapDistribution::finite({sq, attracting}, {0.3, 0.7});
         return std::abs(apply_M(d, constant_function(2.5), {}, 10, {1, 0}).value - 2.5) < 1e-15;
       }},
      {"M^0 is the identity",
       [=] {
         const auto d = MapDistribution::point_mass(sq);
         const TestFunction phi{[](const C2Point& z) { return std::abs(z.y); }, "|y|"};
         return iterate_M(d, phi, {Complex(0.0), Complex(0.25)}, 0).value == 0.25;
       }},
      {"identical maps give a zero weight derivative",
       [=] {
         const auto d = MapDistribution::finite({attracting, attracting}, {0.5, 0.5});
         const auto found = discover_minimal_sets(d, d.filtration(), {C2Point{}, C2Point{Complex(0.0), Complex(30.0)}},
                                                  DiscoveryParams{}, {1, 0});
         return weight_derivative_TL(d, found.sets, 0, 0, {}, {1, 0}).value == 0.0;
       }},
      {"grid in V_R+ escapes",
       [=] {
         const auto d = MapDistribution::point_mass(sq);
         const double R = d.filtration().R;
         return escape_stats(d, {C2Point{Complex(0.0), Complex(2.0 * R)}}, 4, 10, {1, 0}).escaped_fraction() == 1.0;
       }},
  };
}

}  // namespace

SelftestResult run_selftest(std::ostream& log) {
  SelftestResult r;
  for (const auto& [name, fn] : checks()) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      log << "  exception: " << e.what() << "\n";
    }
    log << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (ok) {
      ++r.passed;
    } else {
      ++r.failed;
      r.failures.emplace_back(name);
    }
  }
  return r;
}

}  // namespace henon
