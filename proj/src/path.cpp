#include "kmcrystal/path.hpp"

#include <algorithm>

namespace kmcrystal {

namespace {

std::vector<std::int64_t> reflect(const std::vector<std::int64_t>& v, const std::vector<std::int64_t>& alpha, int i) {
  const std::int64_t p = v[static_cast<std::size_t>(i)];
  if (p == 0) return v;
  std::vector<std::int64_t> out = v;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= p * alpha[k];
  return out;
}

Rational checked_integral_min(const std::vector<Rational>& h) {
  const Rational m = *std::min_element(h.begin(), h.end());
  if (m.denominator() != 1) {
    throw Error(ErrorKind::NonIntegralPath, "minimum of the height function is " + to_string(m));
  }
  return m;
}

// Returns segments with a breakpoint inserted at time `t` (no-op if t is
// already a breakpoint or lies outside (0,1)).
std::vector<PathSegment> split_at(const std::vector<PathSegment>& segs, const Rational& t) {
  std::vector<PathSegment> out;
  out.reserve(segs.size() + 1);
  Rational start{0};
  for (const auto& s : segs) {
    const Rational end = start + s.length;
    if (start < t && t < end) {
      out.push_back({t - start, s.direction});
      out.push_back({end - t, s.direction});
    } else {
      out.push_back(s);
    }
    start = end;
  }
  return out;
}

// Reflects the directions of all segments lying in [t0, t1]; both times must
// be breakpoints of `segs`.
Path reflect_between(std::vector<PathSegment> segs, const Rational& t0, const Rational& t1,
                     const std::vector<std::int64_t>& alpha, int i) {
  Rational start{0};
  for (auto& s : segs) {
    const Rational end = start + s.length;
    if (start >= t0 && end <= t1) s.direction = reflect(s.direction, alpha, i);
    start = end;
  }
  return Path(std::move(segs));
}

}  // namespace

Path::Path(std::vector<PathSegment> segments) : segments_(std::move(segments)) { canonicalize(); }

void Path::canonicalize() {
  std::vector<PathSegment> out;
  out.reserve(segments_.size());
  for (auto& s : segments_) {
    if (s.length == 0) continue;
    if (!out.empty() && out.back().direction == s.direction) {
      out.back().length += s.length;
    } else {
      out.push_back(std::move(s));
    }
  }
  segments_ = std::move(out);
}

int Path::dimension() const noexcept {
  return segments_.empty() ? 0 : static_cast<int>(segments_.front().direction.size());
}

std::vector<std::pair<Rational, WeightVector>> Path::breakpoints() const {
  std::vector<std::pair<Rational, WeightVector>> out;
  const int dim = dimension();
  std::vector<Rational> point(static_cast<std::size_t>(dim), Rational{0});
  auto as_weight = [](const std::vector<Rational>& p) {
    std::vector<Rational> coords(p.begin(), p.end() - 1);
    return WeightVector(std::move(coords), p.back());
  };
  Rational t{0};
  out.emplace_back(t, as_weight(point));
  for (const auto& s : segments_) {
    t += s.length;
    for (int k = 0; k < dim; ++k) point[k] += s.length * s.direction[k];
    out.emplace_back(t, as_weight(point));
  }
  return out;
}

WeightVector Path::endpoint() const { return breakpoints().back().second; }

std::vector<Rational> Path::height_profile(int i) const {
  std::vector<Rational> h;
  h.reserve(segments_.size() + 1);
  Rational value{0};
  h.push_back(value);
  for (const auto& s : segments_) {
    value += s.length * s.direction[static_cast<std::size_t>(i)];
    h.push_back(value);
  }
  return h;
}

std::string Path::key() const {
  std::string k;
  auto put = [&k](std::int64_t x) { k.append(reinterpret_cast<const char*>(&x), sizeof x); };
  for (const auto& s : segments_) {
    put(s.length.numerator());
    put(s.length.denominator());
    for (auto d : s.direction) put(d);
  }
  return k;
}

bool Path::operator<(const Path& o) const {
  return std::lexicographical_compare(
      segments_.begin(), segments_.end(), o.segments_.begin(), o.segments_.end(),
      [](const PathSegment& a, const PathSegment& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.direction < b.direction;
      });
}

Path straight_path(const WeightVector& lambda) {
  return Path({PathSegment{Rational{1}, weight_to_ints(lambda)}});
}

std::optional<Path> f_op(const CartanData& cd, const Path& pi, int i) {
  const auto h = pi.height_profile(i);
  const Rational m = checked_integral_min(h);
  if (h.back() - m < 1) return std::nullopt;

  const auto& segs = pi.segments();
  // t0: last time the minimum is attained (always a breakpoint).
  std::size_t k0 = h.size() - 1;
  while (h[k0] != m) --k0;
  Rational t0{0};
  for (std::size_t k = 0; k < k0; ++k) t0 += segs[k].length;

  // t1: first time after t0 where the height reaches m + 1.
  Rational t = t0, t1{-1};
  for (std::size_t k = k0; k < segs.size(); ++k) {
    if (h[k + 1] >= m + 1) {
      const auto slope = segs[k].direction[static_cast<std::size_t>(i)];
      t1 = t + (m + 1 - h[k]) / Rational(slope);
      break;
    }
    t += segs[k].length;
  }
  return reflect_between(split_at(segs, t1), t0, t1, simple_root_ints(cd, i), i);
}

std::optional<Path> e_op(const CartanData& cd, const Path& pi, int i) {
  const auto h = pi.height_profile(i);
  const Rational m = checked_integral_min(h);
  if (m > -1) return std::nullopt;

  const auto& segs = pi.segments();
  // t1: first time the minimum is attained.
  std::size_t k1 = 0;
  while (h[k1] != m) ++k1;
  std::vector<Rational> times(h.size(), Rational{0});
  for (std::size_t k = 0; k < segs.size(); ++k) times[k + 1] = times[k] + segs[k].length;
  const Rational t1 = times[k1];

  // t0: last time before t1 where the height equals m + 1.
  Rational t0{-1};
  for (std::size_t k = k1; k-- > 0;) {
    if (h[k] >= m + 1) {
      const auto slope = segs[k].direction[static_cast<std::size_t>(i)];
      t0 = times[k] + (m + 1 - h[k]) / Rational(slope);
      break;
    }
  }
  return reflect_between(split_at(segs, t0), t0, t1, simple_root_ints(cd, i), i);
}

PathStatistics statistics(const CartanData& cd, const Path& pi) {
  PathStatistics st;
  st.weight = pi.endpoint();
  for (int i = 0; i < cd.rank(); ++i) {
    const auto h = pi.height_profile(i);
    const Rational m = checked_integral_min(h);
    const Rational top = h.back() - m;
    if (top.denominator() != 1) throw Error(ErrorKind::NonIntegralPath, "path endpoint is not integral");
    st.eps.push_back(static_cast<int>(-m.numerator()));
    st.phi.push_back(static_cast<int>(top.numerator()));
  }
  return st;
}

Path concatenate(const Path& first, const Path& second) {
  std::vector<PathSegment> segs;
  const Rational half(1, 2);
  // Half the time at twice the speed.
  auto doubled = [](std::vector<std::int64_t> d) {
    for (auto& x : d) x *= 2;
    return d;
  };
  for (const auto& s : first.segments()) segs.push_back({s.length * half, doubled(s.direction)});
  for (const auto& s : second.segments()) segs.push_back({s.length * half, doubled(s.direction)});
  return Path(std::move(segs));
}

std::pair<Path, Path> split_half(const Path& pi) {
  const Rational half(1, 2);
  const auto segs = split_at(pi.segments(), half);
  std::vector<PathSegment> a, b;
  Rational start{0};
  for (const auto& s : segs) {
    auto d = s.direction;
    for (auto& x : d) x /= 2;
    (start < half ? a : b).push_back({s.length * 2, std::move(d)});
    start += s.length;
  }
  return {Path(std::move(a)), Path(std::move(b))};
}

}  // namespace kmcrystal
