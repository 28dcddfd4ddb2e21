#include "henon/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace henon {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
    case ErrorCode::escaped_numeric: return "ESCAPED_NUMERIC";
    case ErrorCode::unsupported_kind: return "UNSUPPORTED_KIND";
    case ErrorCode::green_indeterminate: return "GREEN_INDETERMINATE";
    case ErrorCode::degenerate: return "DEGENERATE";
    case ErrorCode::all_escaped: return "ALL_ESCAPED";
    case ErrorCode::nonconvergent_cluster: return "NONCONVERGENT_CLUSTER";
    case ErrorCode::not_minimal: return "NOT_MINIMAL";
    case ErrorCode::ambiguous_capture: return "AMBIGUOUS_CAPTURE";
    case ErrorCode::rate_unresolved: return "RATE_UNRESOLVED";
    case ErrorCode::series_stall: return "SERIES_STALL";
    case ErrorCode::empty_set: return "EMPTY_SET";
    case ErrorCode::config_error: return "CONFIG_ERROR";
  }
  return "UNKNOWN";
}

double norm(const C2Point& z) { return std::hypot(std::abs(z.x), std::abs(z.y)); }

double distance(const C2Point& a, const C2Point& b) { return norm(a - b); }

bool is_finite(const C2Point& z) {
  return std::isfinite(z.x.real()) && std::isfinite(z.x.imag()) && std::isfinite(z.y.real()) &&
         std::isfinite(z.y.imag());
}

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

Polynomial::Polynomial(std::span<const Complex> leading_first) {
  const int d = static_cast<int>(leading_first.size()) - 1;
  if (d < 2) throw LabError(ErrorCode::invalid_argument, "polynomial degree must be >= 2");
  if (d > kMaxDegree) throw LabError(ErrorCode::invalid_argument, "polynomial degree must be <= 16");
  for (const auto& c : leading_first) {
    if (!finite(c)) throw LabError(ErrorCode::invalid_argument, "polynomial coefficient is not finite");
  }
  if (std::abs(leading_first[0]) == 0.0) {
    throw LabError(ErrorCode::invalid_argument, "leading coefficient must be nonzero");
  }
  std::copy(leading_first.begin(), leading_first.end(), c_.begin());
  degree_ = d;
}

Polynomial Polynomial::shifted_scaled(Complex shift, Complex scale) const {
  // Taylor shift on ascending coefficients b_k (coefficient of w^k).
  std::array<Complex, kMaxDegree + 1> b{};
  for (int k = 0; k <= degree_; ++k) b[k] = c_[degree_ - k];
  for (int i = 0; i < degree_; ++i) {
    for (int k = degree_ - 1; k >= i; --k) b[k] += shift * b[k + 1];
  }
  std::array<Complex, kMaxDegree + 1> out{};
  for (int k = 0; k <= degree_; ++k) out[degree_ - k] = scale * b[k];
  return Polynomial(std::span<const Complex>(out.data(), static_cast<size_t>(degree_) + 1));
}

Polynomial Polynomial::with_constant(Complex c) const {
  Polynomial q = *this;
  q.c_[degree_] = c;
  return q;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.degree_ == b.degree_ && std::equal(a.c_.begin(), a.c_.begin() + a.degree_ + 1, b.c_.begin());
}

HenonMap::HenonMap(Complex alpha, Complex delta, Polynomial poly)
    : alpha_(alpha), delta_(delta), poly_(std::move(poly)) {
  if (!finite(alpha)) throw LabError(ErrorCode::invalid_argument, "alpha is not finite");
  if (!finite(delta)) throw LabError(ErrorCode::invalid_argument, "delta is not finite");
  if (std::abs(delta) == 0.0) throw LabError(ErrorCode::invalid_argument, "delta must be nonzero");
}

double Matrix2::frobenius() const {
  return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
}

double Matrix2::spectral_norm() const {
  const double f2 = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  const double dt = std::abs(det());
  const double disc = std::max(0.0, f2 * f2 - 4.0 * dt * dt);
  return std::sqrt(0.5 * (f2 + std::sqrt(disc)));
}

double Matrix2::spectral_radius() const {
  const Complex tr = a + d;
  const Complex s = std::sqrt(tr * tr - 4.0 * det());
  return std::max(std::abs(0.5 * (tr + s)), std::abs(0.5 * (tr - s)));
}

MapBound MapBound::of(const HenonMap& f, double inflate) {
  MapBound b;
  b.abs_alpha = std::abs(f.alpha()) + inflate;
  b.abs_delta = std::abs(f.delta());
  b.degree = f.degree();
  for (int j = 0; j <= b.degree; ++j) b.abs_coeffs[j] = std::abs(f.poly().coeff(j));
  b.abs_coeffs[b.degree] += inflate;
  return b;
}

C2Point eval_map(const HenonMap& f, const C2Point& z) {
  const C2Point w = f.apply(z);
  if (!is_finite(w)) throw LabError(ErrorCode::escaped_numeric, "forward image overflowed");
  return w;
}

C2Point eval_inverse(const HenonMap& f, const C2Point& z) {
  const C2Point w = f.apply_inverse(z);
  if (!is_finite(w)) throw LabError(ErrorCode::escaped_numeric, "inverse image overflowed");
  return w;
}

Matrix2 jacobian(const HenonMap& f, const C2Point& z) {
  return {Complex(0.0), Complex(1.0), -f.delta(), f.poly().derivative(z.y)};
}

HenonMap inverse_as_plus(const HenonMap& f) {
  const Complex inv_delta = 1.0 / f.delta();
  return HenonMap(-f.alpha(), inv_delta, f.poly().shifted_scaled(-f.alpha(), inv_delta));
}

namespace {

constexpr double kEps = 1e-6;

// sum_{j>=1} |c_j| R^{-j} / |c_0|
double tail_ratio(const std::array<double, Polynomial::kMaxDegree + 1>& c, int d, double R) {
  double s = 0.0;
  double rp = 1.0;
  for (int j = 1; j <= d; ++j) {
    rp /= R;
    s += c[j] * rp;
  }
  return s / c[0];
}

struct GrowthBounds {
  double a1;
  double a2;
};

// a1 |y|^d <= |pi_y h(x,y)| <= a2 |y|^d on the closure of V_R+.
GrowthBounds forward_bounds(const MapBound& b, double R) {
  const double tail = tail_ratio(b.abs_coeffs, b.degree, R);
  const double twist = b.abs_delta * std::pow(R, 1.0 - b.degree);
  return {b.abs_coeffs[0] * (1.0 - tail) - twist, b.abs_coeffs[0] * (1.0 + tail) + twist};
}

// Same bounds for h = s o f^-1 o s, i.e. (y - alpha, (p(y - alpha) - x)/delta).
GrowthBounds mirror_bounds(const MapBound& b, double R) {
  MapBound m;
  m.degree = b.degree;
  m.abs_alpha = b.abs_alpha;
  m.abs_delta = 1.0 / b.abs_delta;
  // |coeffs of p(w - alpha)| <= coeffs of |p|(w + |alpha|), a Taylor shift with nonnegative data.
  std::array<double, Polynomial::kMaxDegree + 1> asc{};
  for (int k = 0; k <= b.degree; ++k) asc[k] = b.abs_coeffs[b.degree - k];
  for (int i = 0; i < b.degree; ++i) {
    for (int k = b.degree - 1; k >= i; --k) asc[k] += b.abs_alpha * asc[k + 1];
  }
  for (int k = 0; k <= b.degree; ++k) m.abs_coeffs[b.degree - k] = asc[k] / b.abs_delta;
  GrowthBounds g = forward_bounds(m, R);
  // Direct route: |y - alpha| >= R_p, so |p(y - alpha)| >= |c_0||y - alpha|^d / 2.
  const double shrink = std::pow(1.0 - b.abs_alpha / R, b.degree);
  const double direct = (b.abs_coeffs[0] * shrink / 2.0 - std::pow(R, 1.0 - b.degree)) / b.abs_delta;
  g.a1 = std::max(g.a1, direct);
  return g;
}

}  // namespace

FiltrationParams condition_a_radius(std::span<const HenonMap> maps, double rho_margin) {
  std::vector<MapBound> bounds;
  bounds.reserve(maps.size());
  for (const auto& f : maps) bounds.push_back(MapBound::of(f));
  return condition_a_radius(bounds, rho_margin);
}

FiltrationParams condition_a_radius(std::span<const MapBound> bounds, double rho_margin) {
  if (bounds.empty()) throw LabError(ErrorCode::invalid_argument, "condition_a_radius needs at least one map");
  if (!(rho_margin >= 1.0)) throw LabError(ErrorCode::invalid_argument, "rho_margin must be >= 1");

  double rho0_base = 0.0;
  for (const auto& b : bounds) {
    rho0_base = std::max({rho0_base, b.abs_delta + 8.0, 16.0 * b.abs_delta + 2.0});
  }
  FiltrationParams out;
  out.rho0 = rho_margin + rho0_base;
  out.rho = 2.0;

  double R = 0.0;
  for (const auto& b : bounds) {
    double tail = 0.0;
    for (int j = 1; j <= b.degree; ++j) tail += b.abs_coeffs[j];
    tail /= b.abs_coeffs[0];
    // Radius beyond which |p(zeta)| >= |c_0||zeta|^d / 2 >= rho_0 |zeta|.
    const double r_poly = std::max({1.0, 2.0 * tail, std::pow(2.0 * out.rho0 / b.abs_coeffs[0], 1.0 / (b.degree - 1))});
    // The inverse clause evaluates p at x - alpha, hence the extra |alpha|.
    R = std::max({R, 1.0 + kEps, 2.0 * b.abs_alpha + kEps, r_poly + b.abs_alpha});
  }
  out.R = R;

  double a1 = std::numeric_limits<double>::infinity(), a2 = 0.0;
  double m1 = std::numeric_limits<double>::infinity(), m2 = 0.0;
  for (const auto& b : bounds) {
    const auto g = forward_bounds(b, R);
    a1 = std::min(a1, g.a1);
    a2 = std::max(a2, g.a2);
    const auto h = mirror_bounds(b, R);
    m1 = std::min(m1, h.a1);
    m2 = std::max(m2, h.a2);
  }
  if (!(a1 > 0.0)) throw LabError(ErrorCode::invalid_argument, "forward growth lower bound is not positive");
  out.c_tel = std::log(std::max({a2, 1.0 / a1, std::sqrt(2.0)}));
  out.c_tel_minus = m1 > 0.0 ? std::log(std::max({m2, 1.0 / m1, std::sqrt(2.0)}))
                             : std::numeric_limits<double>::infinity();
  return out;
}

Region classify_region(const C2Point& z, double R) {
  const double ax = std::abs(z.x), ay = std::abs(z.y);
  if (std::max(R, ax) < ay) return Region::v_plus;
  if (std::max(R, ay) < ax) return Region::v_minus;
  if (std::max(ax, ay) < R) return Region::d_r;
  return Region::boundary;
}

}  // namespace henon
