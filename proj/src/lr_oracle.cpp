// Classical Littlewood-Richardson rule for gl_{n+1}, used as an independent
// check of the crystal-theoretic decomposition in type A.

#include <algorithm>
#include <functional>

#include "kmcrystal/series.hpp"

namespace kmcrystal {

namespace {

using Partition = std::vector<int>;

Partition to_partition(int n, const WeightVector& w) {
  if (w.rank() != n) throw Error(ErrorKind::NotTypeA, "weight rank does not match A_" + std::to_string(n));
  if (!w.is_integral()) throw Error(ErrorKind::NotDominant, w.str() + " is not integral");
  Partition p(static_cast<std::size_t>(n), 0);
  int acc = 0;
  for (int k = n - 1; k >= 0; --k) {
    const auto c = w.lambda[k].numerator();
    if (c < 0) throw Error(ErrorKind::NotDominant, w.str() + " is not dominant");
    acc += static_cast<int>(c);
    p[k] = acc;
  }
  return p;
}

// Reading word of the skew part, rows top to bottom, right to left, checked
// for the lattice (Yamanouchi) property.
bool is_lattice(const std::vector<std::vector<int>>& counts, int labels) {
  std::vector<int> seen(static_cast<std::size_t>(labels + 1), 0);
  for (const auto& row : counts) {
    for (int l = labels; l >= 1; --l) {
      for (int c = 0; c < row[l]; ++c) {
        ++seen[l];
        if (l > 1 && seen[l] > seen[l - 1]) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<WeightVector> lr_oracle_type_a(int n, const WeightVector& lambda, const WeightVector& mu) {
  if (n < 1) throw Error(ErrorKind::NotTypeA, "A_n needs n >= 1");
  const Partition outer_start = to_partition(n, lambda);
  const Partition content = to_partition(n, mu);
  const int rows = n + 1;
  const int labels = n;

  Partition shape(static_cast<std::size_t>(rows), 0);
  std::copy(outer_start.begin(), outer_start.end(), shape.begin());
  // counts[r][l]: boxes labelled l in row r of the skew part.
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(labels + 1), 0));
  std::vector<WeightVector> out;

  // Adds the horizontal strip of label `l` row by row, starting at row `r`.
  std::function<void(int, int, int, const Partition&)> add_strip;
  add_strip = [&](int l, int r, int remaining, const Partition& before) {
    if (r == rows) {
      if (remaining != 0) return;
      if (l == labels) {
        if (!is_lattice(counts, labels)) return;
        WeightVector w(n);
        for (int i = 0; i < n; ++i) w.lambda[i] = shape[i] - shape[i + 1];
        out.push_back(std::move(w));
        return;
      }
      const Partition next = shape;
      add_strip(l + 1, 0, content[l], next);
      return;
    }
    // Label l may only occur in rows r >= l-1 (0-based) of an LR tableau.
    const int cap = (r == 0) ? remaining : std::min(remaining, before[r - 1] - shape[r]);
    const int max_here = (r < l - 1) ? 0 : cap;
    for (int k = 0; k <= max_here; ++k) {
      shape[r] += k;
      counts[r][l] += k;
      add_strip(l, r + 1, remaining - k, before);
      shape[r] -= k;
      counts[r][l] -= k;
    }
  };
  const Partition start = shape;  // a copy: `before` must not alias `shape`
  add_strip(1, 0, content[0], start);

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kmcrystal
