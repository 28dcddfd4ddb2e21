#include "henon/escape.hpp"

#include <cmath>
#include <limits>

namespace henon {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::escaped: return "ESCAPED";
    case Verdict::bounded: return "BOUNDED";
    case Verdict::uncertain: return "UNCERTAIN";
  }
  return "?";
}

namespace {

const double kLogTrap = std::log(kTrapContraction);
const double kLogCeiling = std::log(kNumericCeiling);

// Exact iteration stops once the next polynomial step could overflow.
bool needs_log_mode(double log_abs_y, int degree, double abs_c0) {
  return log_abs_y > kLogCeiling || degree * log_abs_y + std::log(abs_c0) > 650.0;
}

struct Trace {
  OrbitVerdict verdict;
  double log_degree = 0.0;  // log(d_0 ... d_{k-1}) over the traced steps
};

Trace trace(const MapSequence& seq, const C2Point& z, double R, int max_iter) {
  if (max_iter <= 0) throw LabError(ErrorCode::invalid_argument, "max_iter must be positive");
  Trace t;
  C2Point w = z;
  Matrix2 m{Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)};
  double log_deriv = 0.0;
  for (int k = 0;; ++k) {
    if (in_v_plus(w, R)) {
      t.verdict = {Verdict::escaped, k, Direction::plus, w};
      return t;
    }
    if (k >= 1 && log_deriv <= kLogTrap && in_box(w, R)) {
      t.verdict = {Verdict::bounded, k, Direction::plus, w};
      return t;
    }
    if (k == max_iter) break;
    const HenonMap f = seq.at(static_cast<std::uint64_t>(k));
    m = jacobian(f, w) * m;
    const double s = m.frobenius();
    log_deriv += std::log(s);
    m = {m.a / s, m.b / s, m.c / s, m.d / s};
    w = f.apply(w);
    t.log_degree += std::log(static_cast<double>(f.degree()));
    if (!is_finite(w) || norm(w) > kNumericCeiling) {
      t.verdict = {Verdict::uncertain, k + 1, Direction::plus, w};
      return t;
    }
  }
  t.verdict = {Verdict::uncertain, max_iter, Direction::plus, w};
  return t;
}

double positive_log(double x) { return x > 1.0 ? std::log(x) : 0.0; }

GreenResult green_traced(const MapSequence& seq, const C2Point& z, double R, double c_tel, double tol, int max_iter) {
  if (!(tol > 0.0)) throw LabError(ErrorCode::invalid_argument, "tol must be positive");
  const Trace t = trace(seq, z, R, max_iter);
  const OrbitVerdict& v = t.verdict;
  if (v.status == Verdict::bounded) return {v, {0.0, v.step, 0.0}};
  if (v.status == Verdict::uncertain) {
    const double partial = positive_log(norm(v.last_point)) * std::exp(-t.log_degree);
    return {v, {partial, v.step, std::numeric_limits<double>::infinity()}};
  }
  if (!std::isfinite(c_tel)) throw LabError(ErrorCode::invalid_argument, "telescoping constant is not finite");

  int n = v.step;
  double log_degree = t.log_degree;
  C2Point w = v.last_point;
  double ell = std::log(std::abs(w.y));
  bool exact = true;
  while (c_tel * std::ldexp(1.0, 1 - n) > tol) {
    const HenonMap f = seq.at(static_cast<std::uint64_t>(n));
    const double abs_c0 = std::abs(f.poly().leading());
    if (exact && needs_log_mode(ell, f.degree(), abs_c0)) exact = false;
    if (exact) {
      w = f.apply(w);
      ell = std::log(std::abs(w.y));
    } else {
      // |y| > 1e100 in V_R+: the neglected relative correction is below 1e-90.
      ell = f.degree() * ell + std::log(abs_c0);
    }
    log_degree += std::log(static_cast<double>(f.degree()));
    ++n;
  }
  double value = ell * std::exp(-log_degree);
  // Escaped points keep a positive value even when the scale underflows.
  if (!(value > 0.0)) value = std::numeric_limits<double>::denorm_min();
  return {v, {value, n, c_tel * std::ldexp(1.0, 1 - n)}};
}

GreenEstimate green_impl(const MapSequence& seq, const C2Point& z, double R, double c_tel, double tol, int max_iter) {
  const GreenResult g = green_traced(seq, z, R, c_tel, tol, max_iter);
  if (g.verdict.status == Verdict::uncertain) {
    throw GreenIndeterminate(g.estimate, "orbit neither escaped nor trapped within the cap");
  }
  return g.estimate;
}

}  // namespace

OrbitVerdict classify_orbit(const MapSequence& seq, const C2Point& z, const FiltrationParams& params, int max_iter) {
  return trace(seq, z, params.R, max_iter).verdict;
}

GreenResult green_plus_traced(const MapSequence& seq, const C2Point& z, const FiltrationParams& params, double tol,
                              int max_iter) {
  return green_traced(seq, z, params.R, params.c_tel, tol, max_iter);
}

GreenEstimate green_plus(const MapSequence& seq, const C2Point& z, const FiltrationParams& params, double tol,
                         int max_iter) {
  return green_impl(seq, z, params.R, params.c_tel, tol, max_iter);
}

GreenEstimate green_minus(const MapSequence& backward, const C2Point& z, const FiltrationParams& params, double tol,
                          int max_iter) {
  return green_impl(backward.mirrored(), swap(z), params.R, params.c_tel_minus, tol, max_iter);
}

std::vector<double> green_partial_sums(const MapSequence& seq, const C2Point& z, int n_max) {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(std::max(n_max, 0)));
  C2Point w = z;
  double log_degree = 0.0;
  bool exact = true;
  double ell_x = 0.0, ell_y = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const HenonMap f = seq.at(static_cast<std::uint64_t>(n));
    const double abs_c0 = std::abs(f.poly().leading());
    if (exact && std::abs(w.y) > 1.0 && needs_log_mode(std::log(std::abs(w.y)), f.degree(), abs_c0) &&
        in_v_plus(w, 1.0)) {
      exact = false;
      ell_y = std::log(std::abs(w.y));
    }
    if (exact) {
      w = f.apply(w);
    } else {
      ell_x = ell_y;  // x' = y + alpha with |y| > 1e100
      ell_y = f.degree() * ell_y + std::log(abs_c0);
    }
    log_degree += std::log(static_cast<double>(f.degree()));
    double log_norm;
    if (exact) {
      const double nz = norm(w);
      log_norm = nz > 0.0 ? std::log(nz) : -std::numeric_limits<double>::infinity();
    } else {
      log_norm = ell_y + 0.5 * std::log1p(std::exp(2.0 * (ell_x - ell_y)));
    }
    out.push_back(std::max(log_norm, 0.0) * std::exp(-log_degree));
  }
  return out;
}

}  // namespace henon
