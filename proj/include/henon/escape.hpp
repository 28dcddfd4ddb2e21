#pragma once

#include <vector>

#include "henon/sequence.hpp"

namespace henon {

enum class Verdict { escaped, bounded, uncertain };
enum class Direction { plus, minus };

const char* to_string(Verdict v);

/// ESCAPED and BOUNDED are first-hitting events, so raising the iteration cap
/// can only resolve UNCERTAIN verdicts; it never flips a decided one.
struct OrbitVerdict {
  Verdict status = Verdict::uncertain;
  /// Escape step, trap step, or the cap for UNCERTAIN.
  int step = 0;
  Direction direction = Direction::plus;
  C2Point last_point;
};

/// An orbit counts as trapped once it sits in D_R and the accumulated
/// derivative norm of the composition has fallen below this.
inline constexpr double kTrapContraction = 1e-8;

/// Iterates beyond this magnitude without entering V_R+ are reported UNCERTAIN.
inline constexpr double kNumericCeiling = 1e100;

OrbitVerdict classify_orbit(const MapSequence& seq, const C2Point& z, const FiltrationParams& params, int max_iter);

struct GreenEstimate {
  double value = 0.0;
  int n_used = 0;
  double error_bound = 0.0;
};

/// Thrown for UNCERTAIN orbits; carries the partial estimate log+||z_n|| / deg.
class GreenIndeterminate : public LabError {
 public:
  GreenIndeterminate(GreenEstimate partial, const std::string& what)
      : LabError(ErrorCode::green_indeterminate, what), partial_(partial) {}
  const GreenEstimate& partial() const { return partial_; }

 private:
  GreenEstimate partial_;
};

struct GreenResult {
  OrbitVerdict verdict;
  /// For UNCERTAIN orbits: the partial estimate with an infinite error bound.
  GreenEstimate estimate;
};

/// Non-throwing form of green_plus that also reports the orbit verdict.
GreenResult green_plus_traced(const MapSequence& seq, const C2Point& z, const FiltrationParams& params, double tol,
                              int max_iter);

GreenEstimate green_plus(const MapSequence& seq, const C2Point& z, const FiltrationParams& params, double tol,
                         int max_iter = 2000);

/// `backward` lists gamma_{-1}, gamma_{-2}, ...; evaluated as green_plus of the
/// swap-conjugated inverses at s(z).
GreenEstimate green_minus(const MapSequence& backward, const C2Point& z, const FiltrationParams& params, double tol,
                          int max_iter = 2000);

/// G_n = log+ ||gamma_{n-1,0}(z)|| / (d_0 ... d_{n-1}) for n = 1..n_max, with
/// the log-magnitude recursion taking over past the overflow threshold.
std::vector<double> green_partial_sums(const MapSequence& seq, const C2Point& z, int n_max);

/// Real 2-plane window into C^2: pixel (i, j) sits at anchor + s_i dir1 + t_j dir2.
struct SliceSpec {
  C2Point anchor;
  C2Point dir1{Complex(1.0), Complex(0.0)};
  C2Point dir2{Complex(0.0, 1.0), Complex(0.0)};
  double extent = 1.0;
  int resolution = 64;

  void validate() const;
  double pitch() const { return 2.0 * extent / resolution; }
  double coord(int i) const { return -extent + pitch() * (i + 0.5); }
  C2Point pixel(int i, int j) const;
};

struct RasterCell {
  double green = 0.0;
  Verdict verdict = Verdict::uncertain;
  int n = 0;

  friend bool operator==(const RasterCell&, const RasterCell&) = default;
};

struct Raster {
  int width = 0;
  int height = 0;
  std::vector<RasterCell> cells;

  const RasterCell& at(int i, int j) const { return cells[static_cast<size_t>(j) * width + i]; }
  RasterCell& at(int i, int j) { return cells[static_cast<size_t>(j) * width + i]; }
  std::size_t count(Verdict v) const;
};

/// Per-pixel work shared by the parallel kernel and the serial reference.
RasterCell pixel_kernel(const MapSequence& seq, const C2Point& z, const FiltrationParams& params, int max_iter,
                        double tol);

/// Row-parallel (OpenMP) rasterization; bit-identical to serial::raster_slice.
Raster raster_slice(const MapSequence& seq, const SliceSpec& spec, const FiltrationParams& params, int max_iter,
                    double tol);

struct PixelCoord {
  int i;
  int j;

  friend auto operator<=>(const PixelCoord&, const PixelCoord&) = default;
};

/// BOUNDED pixels 4-adjacent to an ESCAPED pixel, sorted by (j, i).
std::vector<PixelCoord> boundary_extract(const Raster& r);

/// Symmetric Hausdorff distance between pixel sets, in world units.
double hausdorff_pixels(const std::vector<PixelCoord>& a, const std::vector<PixelCoord>& b, double pixel_pitch);

}  // namespace henon
