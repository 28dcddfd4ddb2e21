#include "henon/cloud_index.hpp"

#include <algorithm>
#include <cmath>

#include "henon/rng.hpp"

namespace henon {

namespace {

double dist2(const C2Point& a, const C2Point& b) {
  const double u = a.x.real() - b.x.real(), v = a.x.imag() - b.x.imag();
  const double w = a.y.real() - b.y.real(), z = a.y.imag() - b.y.imag();
  return u * u + v * v + w * w + z * z;
}

}  // namespace

CloudIndex::CloudIndex(double cell) : cell_(cell) {
  if (!(cell > 0.0) || !std::isfinite(cell)) throw LabError(ErrorCode::invalid_argument, "cloud cell must be positive");
}

void CloudIndex::cell_of(const C2Point& p, std::int64_t c[4]) const {
  const double v[4] = {p.x.real(), p.x.imag(), p.y.real(), p.y.imag()};
  for (int k = 0; k < 4; ++k) c[k] = static_cast<std::int64_t>(std::floor(std::clamp(v[k] / cell_, -1e15, 1e15)));
}

std::uint64_t CloudIndex::key(const std::int64_t c[4]) const {
  std::uint64_t h = 0x2545F4914F6CDD1DULL;
  for (int k = 0; k < 4; ++k) h = mix64(h ^ static_cast<std::uint64_t>(c[k]));
  return h;
}

int CloudIndex::add(const C2Point& p) {
  std::int64_t c[4];
  cell_of(p, c);
  const int idx = static_cast<int>(points_.size());
  points_.push_back(p);
  buckets_[key(c)].push_back(idx);
  return idx;
}

// Calls f on candidates from the 3^4 neighbouring cells until it returns true.
template <typename F>
void CloudIndex::visit(const C2Point& q, F&& f) const {
  std::int64_t c[4];
  cell_of(q, c);
  {
    auto it = buckets_.find(key(c));
    if (it != buckets_.end()) {
      for (int idx : it->second) {
        if (f(idx)) return;
      }
    }
  }
  std::int64_t n[4];
  for (int a = -1; a <= 1; ++a) {
    n[0] = c[0] + a;
    for (int b = -1; b <= 1; ++b) {
      n[1] = c[1] + b;
      for (int d = -1; d <= 1; ++d) {
        n[2] = c[2] + d;
        for (int e = -1; e <= 1; ++e) {
          n[3] = c[3] + e;
          if (a == 0 && b == 0 && d == 0 && e == 0) continue;
          auto it = buckets_.find(key(n));
          if (it == buckets_.end()) continue;
          for (int idx : it->second) {
            if (f(idx)) return;
          }
        }
      }
    }
  }
}

int CloudIndex::nearest_within(const C2Point& q, double r) const {
  int best = -1;
  double best_d = r * r;
  visit(q, [&](int idx) {
    const double d = dist2(points_[idx], q);
    if (d < best_d || (d == best_d && best >= 0 && idx < best)) {
      best_d = d;
      best = idx;
    }
    return false;
  });
  return best;
}

int CloudIndex::first_within(const C2Point& q, double r) const {
  const double r2 = r * r;
  int found = -1;
  visit(q, [&](int idx) {
    if (dist2(points_[idx], q) >= r2) return false;
    found = idx;
    return true;
  });
  return found;
}

std::vector<int> CloudIndex::all_within(const C2Point& q, double r) const {
  const double r2 = r * r;
  std::vector<int> out;
  visit(q, [&](int idx) {
    if (dist2(points_[idx], q) < r2) out.push_back(idx);
    return false;
  });
  // Hash collisions can list a bucket twice.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace henon
