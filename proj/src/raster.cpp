#include <algorithm>
#include <cmath>
#include <limits>

#include "henon/escape.hpp"

namespace henon {

void SliceSpec::validate() const {
  if (!(extent > 0.0) || !std::isfinite(extent)) throw LabError(ErrorCode::invalid_argument, "slice extent must be positive");
  if (resolution < 1) throw LabError(ErrorCode::invalid_argument, "slice resolution must be >= 1");
  if (!is_finite(anchor)) throw LabError(ErrorCode::invalid_argument, "slice anchor is not finite");
  if (std::abs(norm(dir1) - 1.0) > 1e-9 || std::abs(norm(dir2) - 1.0) > 1e-9) {
    throw LabError(ErrorCode::invalid_argument, "slice directions must be unit vectors");
  }
  // Real inner product on C^2 = R^4.
  const double dot = dir1.x.real() * dir2.x.real() + dir1.x.imag() * dir2.x.imag() + dir1.y.real() * dir2.y.real() +
                     dir1.y.imag() * dir2.y.imag();
  if (std::abs(dot) > 1.0 - 1e-9) throw LabError(ErrorCode::invalid_argument, "slice directions are not independent");
}

C2Point SliceSpec::pixel(int i, int j) const { return anchor + coord(i) * dir1 + coord(j) * dir2; }

std::size_t Raster::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [v](const RasterCell& c) { return c.verdict == v; }));
}

RasterCell pixel_kernel(const MapSequence& seq, const C2Point& z, const FiltrationParams& params, int max_iter,
                        double tol) {
  const GreenResult g = green_plus_traced(seq, z, params, tol, max_iter);
  return {g.estimate.value, g.verdict.status, g.verdict.step};
}

Raster raster_slice(const MapSequence& seq, const SliceSpec& spec, const FiltrationParams& params, int max_iter,
                    double tol) {
  spec.validate();
  Raster r;
  r.width = r.height = spec.resolution;
  r.cells.resize(static_cast<size_t>(r.width) * r.height);
  const int h = r.height;
#pragma omp parallel for schedule(dynamic, 1)
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < r.width; ++i) r.at(i, j) = pixel_kernel(seq, spec.pixel(i, j), params, max_iter, tol);
  }
  return r;
}

std::vector<PixelCoord> boundary_extract(const Raster& r) {
  std::vector<PixelCoord> out;
  auto escaped = [&](int i, int j) {
    return i >= 0 && j >= 0 && i < r.width && j < r.height && r.at(i, j).verdict == Verdict::escaped;
  };
  for (int j = 0; j < r.height; ++j) {
    for (int i = 0; i < r.width; ++i) {
      if (r.at(i, j).verdict != Verdict::bounded) continue;
      if (escaped(i - 1, j) || escaped(i + 1, j) || escaped(i, j - 1) || escaped(i, j + 1)) out.push_back({i, j});
    }
  }
  return out;
}

namespace {

// Squared 1-D distance transform (lower envelope of parabolas).
void edt_1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  int k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::infinity();
  z[1] = std::numeric_limits<double>::infinity();
  auto cross = [&](int q, int p) { return ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * q - 2.0 * p); };
  for (int q = 1; q < n; ++q) {
    double s = cross(q, v[k]);
    while (s <= z[k]) {
      --k;
      s = cross(q, v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

// Directed Hausdorff max_{a} min_{b} |a - b| in pixel units via an exact EDT of `to`.
double directed(const std::vector<PixelCoord>& from, const std::vector<PixelCoord>& to, int i0, int j0, int w, int h) {
  constexpr double kFar = 1e30;
  std::vector<double> grid(static_cast<size_t>(w) * h, kFar);
  for (const auto& p : to) grid[static_cast<size_t>(p.j - j0) * w + (p.i - i0)] = 0.0;
  const int n = std::max(w, h);
  std::vector<double> f(n), d(n), z(n + 1);
  std::vector<int> v(n);
  f.resize(w);
  d.resize(w);
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) f[i] = grid[static_cast<size_t>(j) * w + i];
    edt_1d(f, d, v, z);
    for (int i = 0; i < w; ++i) grid[static_cast<size_t>(j) * w + i] = d[i];
  }
  f.resize(h);
  d.resize(h);
  for (int i = 0; i < w; ++i) {
    for (int j = 0; j < h; ++j) f[j] = grid[static_cast<size_t>(j) * w + i];
    edt_1d(f, d, v, z);
    for (int j = 0; j < h; ++j) grid[static_cast<size_t>(j) * w + i] = d[j];
  }
  double worst = 0.0;
  for (const auto& p : from) worst = std::max(worst, grid[static_cast<size_t>(p.j - j0) * w + (p.i - i0)]);
  return std::sqrt(worst);
}

}  // namespace

double hausdorff_pixels(const std::vector<PixelCoord>& a, const std::vector<PixelCoord>& b, double pixel_pitch) {
  if (a.empty() || b.empty()) throw LabError(ErrorCode::empty_set, "Hausdorff distance needs nonempty sets");
  int i0 = a[0].i, i1 = a[0].i, j0 = a[0].j, j1 = a[0].j;
  for (const auto* s : {&a, &b}) {
    for (const auto& p : *s) {
      i0 = std::min(i0, p.i);
      i1 = std::max(i1, p.i);
      j0 = std::min(j0, p.j);
      j1 = std::max(j1, p.j);
    }
  }
  const int w = i1 - i0 + 1, h = j1 - j0 + 1;
  return pixel_pitch * std::max(directed(a, b, i0, j0, w, h), directed(b, a, i0, j0, w, h));
}

}  // namespace henon
