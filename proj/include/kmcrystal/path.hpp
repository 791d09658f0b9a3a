#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmcrystal/cartan.hpp"

namespace kmcrystal {

/// Piece of a path: it moves with constant velocity `direction` (an integral
/// weight, rank+1 entries with the delta coordinate last) for `length` units
/// of time.
struct PathSegment {
  Rational length;
  std::vector<std::int64_t> direction;

  bool operator==(const PathSegment&) const = default;
};

/// Piecewise-linear path t -> pi(t), t in [0,1], pi(0) = 0, in canonical form:
/// no zero-length pieces and no two adjacent pieces with equal direction.
///
/// Root operators only ever reflect directions, so every direction stays in
/// the Weyl orbit of the generating weight and is integral.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<PathSegment> segments);

  const std::vector<PathSegment>& segments() const noexcept { return segments_; }
  int dimension() const noexcept;

  /// Breakpoints (t, pi(t)) from t = 0 to t = 1.
  std::vector<std::pair<Rational, WeightVector>> breakpoints() const;
  WeightVector endpoint() const;

  /// Values of <h_i, pi(t)> at the breakpoints.
  std::vector<Rational> height_profile(int i) const;

  /// Byte string identifying the canonical form; equal paths have equal keys.
  std::string key() const;

  bool operator==(const Path& o) const { return segments_ == o.segments_; }
  bool operator<(const Path& o) const;

 private:
  void canonicalize();
  std::vector<PathSegment> segments_;
};

struct PathStatistics {
  std::vector<int> eps;
  std::vector<int> phi;
  WeightVector weight;
};

Path straight_path(const WeightVector& lambda);

/// Littelmann lowering operator f_i; nullopt when phi_i = 0.
std::optional<Path> f_op(const CartanData& cd, const Path& pi, int i);

/// Littelmann raising operator e_i; nullopt when eps_i = 0.
std::optional<Path> e_op(const CartanData& cd, const Path& pi, int i);

PathStatistics statistics(const CartanData& cd, const Path& pi);

/// pi1 * pi2: run pi1 on [0,1/2] and then pi2 (translated) on [1/2,1].
Path concatenate(const Path& first, const Path& second);

/// Inverse of concatenate(): splits at t = 1/2 and rescales both halves.
std::pair<Path, Path> split_half(const Path& pi);

}  // namespace kmcrystal
