#pragma once

// Map algebra for generalized Henon-type automorphisms
//   f(x, y) = (y + alpha, p(y) - delta * x)
// together with the escape filtration V_R+, V_R-, D_R and the explicit
// escape radii that certify condition (A).

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "henon/error.hpp"

namespace henon {

using Complex = std::complex<double>;

struct C2Point {
  Complex x;
  Complex y;

  friend bool operator==(const C2Point&, const C2Point&) = default;
};

inline C2Point operator+(const C2Point& a, const C2Point& b) { return {a.x + b.x, a.y + b.y}; }
inline C2Point operator-(const C2Point& a, const C2Point& b) { return {a.x - b.x, a.y - b.y}; }
inline C2Point operator*(double s, const C2Point& a) { return {s * a.x, s * a.y}; }

/// Euclidean norm on C^2, overflow-safe for components up to ~1e300.
double norm(const C2Point& z);
double distance(const C2Point& a, const C2Point& b);
bool is_finite(const C2Point& z);

/// Coordinate swap s(x, y) = (y, x).
inline C2Point swap(const C2Point& z) { return {z.y, z.x}; }

/// Dense polynomial, stored leading-first: p(y) = c_0 y^d + ... + c_d.
class Polynomial {
 public:
  static constexpr int kMaxDegree = 16;

  explicit Polynomial(std::span<const Complex> leading_first);
  Polynomial(std::initializer_list<Complex> leading_first)
      : Polynomial(std::span<const Complex>(leading_first.begin(), leading_first.size())) {}

  int degree() const { return degree_; }
  Complex leading() const { return c_[0]; }
  /// c_j in the leading-first order, 0 <= j <= degree.
  Complex coeff(int j) const { return c_[j]; }
  std::span<const Complex> coeffs() const { return {c_.data(), static_cast<size_t>(degree_) + 1}; }

  /// Horner evaluation.
  Complex operator()(Complex y) const {
    Complex acc = c_[0];
    for (int j = 1; j <= degree_; ++j) acc = acc * y + c_[j];
    return acc;
  }

  Complex derivative(Complex y) const {
    Complex acc = static_cast<double>(degree_) * c_[0];
    for (int j = 1; j < degree_; ++j) acc = acc * y + static_cast<double>(degree_ - j) * c_[j];
    return acc;
  }

  /// Coefficients of q(w) = scale * p(w + shift).
  Polynomial shifted_scaled(Complex shift, Complex scale) const;

  /// Copy with the constant term c_d replaced.
  Polynomial with_constant(Complex c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::array<Complex, kMaxDegree + 1> c_{};
  int degree_ = 0;
};

class HenonMap {
 public:
  HenonMap(Complex alpha, Complex delta, Polynomial poly);

  Complex alpha() const { return alpha_; }
  Complex delta() const { return delta_; }
  const Polynomial& poly() const { return poly_; }
  int degree() const { return poly_.degree(); }

  /// Unchecked forward step; hot loops use this and test magnitudes themselves.
  C2Point apply(const C2Point& z) const { return {z.y + alpha_, poly_(z.y) - delta_ * z.x}; }
  C2Point apply_inverse(const C2Point& z) const {
    const Complex w = z.x - alpha_;
    return {(poly_(w) - z.y) / delta_, w};
  }

  friend bool operator==(const HenonMap& a, const HenonMap& b) = default;

 private:
  Complex alpha_;
  Complex delta_;
  Polynomial poly_;
};

struct Matrix2 {
  Complex a, b, c, d;  // [[a, b], [c, d]]

  Complex det() const { return a * d - b * c; }
  Matrix2 operator*(const Matrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  /// Frobenius norm.
  double frobenius() const;
  /// Operator 2-norm (largest singular value).
  double spectral_norm() const;
  /// Largest eigenvalue modulus.
  double spectral_radius() const;
};

struct FiltrationParams {
  double R = 0.0;
  double rho = 2.0;
  /// Telescoping constant log max{a2, 1/a1, sqrt 2} for forward Green sums.
  double c_tel = 0.0;
  /// Same constant for the swap-conjugated inverse maps (backward Green sums).
  double c_tel_minus = 0.0;
  /// Internal rho_0 used to derive R.
  double rho0 = 0.0;
};

/// Coefficient-magnitude envelope of a set of maps sharing degree, c_0 and delta.
/// Ball noise is represented by inflating |alpha| and |c_d| by the noise radius.
struct MapBound {
  double abs_alpha = 0.0;
  double abs_delta = 0.0;
  int degree = 0;
  std::array<double, Polynomial::kMaxDegree + 1> abs_coeffs{};

  static MapBound of(const HenonMap& f, double inflate = 0.0);
};

enum class Region { v_plus, v_minus, d_r, boundary };

C2Point eval_map(const HenonMap& f, const C2Point& z);
C2Point eval_inverse(const HenonMap& f, const C2Point& z);
Matrix2 jacobian(const HenonMap& f, const C2Point& z);

/// h = s o f^-1 o s written back in Henon form: alpha' = -alpha,
/// delta' = 1/delta, p'(w) = p(w - alpha)/delta.
HenonMap inverse_as_plus(const HenonMap& f);

FiltrationParams condition_a_radius(std::span<const HenonMap> maps, double rho_margin = 1.0);
FiltrationParams condition_a_radius(std::span<const MapBound> bounds, double rho_margin = 1.0);

Region classify_region(const C2Point& z, double R);

inline bool in_v_plus(const C2Point& z, double R) {
  const double ay = std::abs(z.y);
  return ay > R && ay > std::abs(z.x);
}
inline bool in_v_minus(const C2Point& z, double R) {
  const double ax = std::abs(z.x);
  return ax > R && ax > std::abs(z.y);
}
inline bool in_box(const C2Point& z, double R) { return std::abs(z.x) < R && std::abs(z.y) < R; }

}  // namespace henon
