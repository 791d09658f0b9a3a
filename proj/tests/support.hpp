#pragma once

// Independent oracles and invariant checkers shared by the unit tests and the
// acceptance binary. Nothing here reuses the algorithm it is checking.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kmcrystal/modified.hpp"
#include "kmcrystal/series.hpp"

namespace kmtest {

using namespace kmcrystal;

inline WeightVector W(std::vector<std::int64_t> coords, std::int64_t delta = 0) {
  return WeightVector::from_ints(coords, delta);
}

/// Smallest positive integral d with d_i a_ij = d_j a_ji, by exhaustive search.
inline std::vector<int> brute_symmetrizer(const IntMatrix& a, int bound = 6) {
  const int n = static_cast<int>(a.size());
  std::vector<int> d(static_cast<std::size_t>(n), 1);
  std::vector<int> best;
  std::function<void(int)> go = [&](int k) {
    if (k == n) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (d[i] * a[i][j] != d[j] * a[j][i]) return;
      if (best.empty() || std::accumulate(d.begin(), d.end(), 0) < std::accumulate(best.begin(), best.end(), 0)) {
        best = d;
      }
      return;
    }
    for (int v = 1; v <= bound; ++v) {
      d[k] = v;
      go(k + 1);
    }
  };
  go(0);
  return best;
}

/// Smallest positive integer vector x with x A = 0, by exhaustive search.
inline std::vector<int> brute_left_null(const IntMatrix& a, int bound = 4) {
  const int n = static_cast<int>(a.size());
  std::vector<int> x(static_cast<std::size_t>(n), 1);
  std::vector<int> found;
  std::function<bool(int)> go = [&](int k) {
    if (k == n) {
      for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int i = 0; i < n; ++i) s += x[i] * a[i][j];
        if (s != 0) return false;
      }
      found = x;
      return true;
    }
    for (int v = 1; v <= bound; ++v) {
      x[k] = v;
      if (go(k + 1)) return true;
    }
    return false;
  };
  go(0);
  return found;
}

/// All weights reachable from the straight path by root operators, with the
/// lexicographically least word (j_1..j_l), b = f_{j_1}...f_{j_l} u, found by
/// enumerating every word. Works on paths only, never on graph edges.
/// Returns nullopt if more than `word_cap` words would be needed.
inline std::optional<std::map<std::string, MinWord>> brute_min_words(const CartanData& cd, const WeightVector& origin,
                                                                     bool highest, std::size_t word_cap = 3000000) {
  // words_at[key] = every word reaching that path
  std::map<std::string, std::vector<MinWord>> current;
  std::map<std::string, Path> paths;
  const Path start = straight_path(origin);
  current[start.key()] = {MinWord{}};
  paths[start.key()] = start;
  std::map<std::string, MinWord> best;
  best[start.key()] = {};
  std::size_t total = 1;
  while (!current.empty()) {
    std::map<std::string, std::vector<MinWord>> next;
    for (const auto& [key, words] : current) {
      const Path& p = paths.at(key);
      for (int j = 0; j < cd.rank(); ++j) {
        auto q = highest ? f_op(cd, p, j) : e_op(cd, p, j);
        if (!q) continue;
        const std::string qk = q->key();
        paths.emplace(qk, *q);
        auto& bucket = next[qk];
        for (const auto& w : words) {
          MinWord nw;
          nw.reserve(w.size() + 1);
          nw.push_back(j);
          nw.insert(nw.end(), w.begin(), w.end());
          bucket.push_back(std::move(nw));
          if (++total > word_cap) return std::nullopt;
        }
      }
    }
    for (const auto& [key, words] : next) best[key] = *std::min_element(words.begin(), words.end());
    current = std::move(next);
  }
  return best;
}

/// A1 string oracle: B(k Lambda_1) is a single string of k+1 nodes.
inline int sl2_dimension(int k) { return k + 1; }

inline bool finite_int(const ExtInt& x) { return !x.is_neg_inf(); }

/// Violations of the crystal axioms visible on a generated graph: phi - eps
/// equals the pairing, e and f are mutually inverse, strings have length
/// eps + phi, and weights move by simple roots.
inline std::vector<std::string> crystal_violations(const CrystalGraph& g) {
  std::vector<std::string> out;
  const CartanData& cd = g.cartan;
  auto complain = [&](int v, const std::string& what) {
    if (out.size() < 20) out.push_back("node " + std::to_string(v) + ": " + what);
  };
  for (int v = 0; v < g.size(); ++v) {
    const auto& node = g.nodes[v];
    for (int i = 0; i < g.rank(); ++i) {
      if (node.phi[i] - node.eps[i] != integral_pairing(cd, i, node.weight)) complain(v, "phi - eps != pairing");
      const int f = g.f(v, i), e = g.e(v, i);
      if (f >= 0) {
        if (g.e(f, i) != v) complain(v, "e_i f_i != id");
        if (!(g.nodes[f].weight == node.weight - simple_root(cd, i))) complain(v, "f_i does not lower by alpha_i");
        if (g.nodes[f].eps[i] != node.eps[i] + 1 || g.nodes[f].phi[i] != node.phi[i] - 1) {
          complain(v, "f_i does not shift eps/phi by one");
        }
      }
      if (e >= 0 && g.f(e, i) != v) complain(v, "f_i e_i != id");
      if (f == kNoEdge && node.phi[i] != 0) complain(v, "f_i undefined but phi_i > 0");
      if (e == kNoEdge && node.eps[i] != 0) complain(v, "e_i undefined but eps_i > 0");
      if (f >= 0 && node.phi[i] == 0) complain(v, "f_i defined but phi_i = 0");
      if (e >= 0 && node.eps[i] == 0) complain(v, "e_i defined but eps_i = 0");
    }
  }
  return out;
}

/// Violations of the filtration invariants: supports f-closed and nested,
/// the last support is everything, strict jumps exactly at maximal pivots,
/// and the new nodes of each jump form a copy of B(lambda + wt b).
inline std::vector<std::string> series_violations(const CartanData& cd, const SeriesResult& s) {
  std::vector<std::string> out;
  const CrystalGraph& g = s.product.graph;
  std::vector<bool> prev(static_cast<std::size_t>(g.size()), false);
  std::size_t prev_size = 0;
  for (std::size_t k = 0; k < s.steps.size(); ++k) {
    const auto& step = s.steps[k];
    std::vector<bool> in(static_cast<std::size_t>(g.size()), false);
    for (int v : step.support) in[v] = true;
    for (int v = 0; v < g.size(); ++v) {
      if (prev[v] && !in[v]) out.push_back("step " + std::to_string(k) + " is not nested");
      if (!in[v]) continue;
      for (int i = 0; i < g.rank(); ++i) {
        const int w = g.f(v, i);
        if (w >= 0 && !in[w]) out.push_back("step " + std::to_string(k) + " is not f-closed");
      }
    }
    const bool jump = step.support.size() > prev_size;
    if (jump != step.quotient.has_value()) out.push_back("step " + std::to_string(k) + " jump/quotient mismatch");
    if (step.quotient) {
      std::vector<bool> fresh(static_cast<std::size_t>(g.size()), false);
      for (int v : step.support) fresh[v] = !prev[v];
      const int root = s.product.node_id({0, step.pivot});
      const CrystalGraph irr = generate_highest(cd, *step.quotient);
      const int fresh_count = static_cast<int>(std::count(fresh.begin(), fresh.end(), true));
      if (fresh_count != irr.size() || canonical_form(g, root, &fresh) != canonical_form(irr, 0)) {
        out.push_back("step " + std::to_string(k) + " new nodes are not B(" + step.quotient->str() + ")");
      }
    }
    prev = std::move(in);
    prev_size = step.support.size();
  }
  if (!s.steps.empty() && prev_size != static_cast<std::size_t>(g.size())) out.push_back("last support is not everything");
  return out;
}

/// Dominant integral weights of a finite type with dim V(lambda) <= bound,
/// coordinates searched up to `coord_bound`.
inline std::vector<WeightVector> dominant_grid(const CartanData& cd, const BigInt& bound, int coord_bound) {
  std::vector<WeightVector> out;
  std::vector<std::int64_t> c(static_cast<std::size_t>(cd.rank()), 0);
  std::function<void(int)> go = [&](int k) {
    if (k == cd.rank()) {
      const WeightVector w = W(c);
      if (weyl_dimension(cd, w) <= bound) out.push_back(w);
      return;
    }
    for (int v = 0; v <= coord_bound; ++v) {
      c[k] = v;
      go(k + 1);
    }
  };
  go(0);
  return out;
}

/// The crystal generated from the concatenation of straight paths by root
/// operators, compared node by node with the tensor rule on B(lambda) (x) B(mu):
/// same statistics and the same e/f action. Returns a list of mismatches.
inline std::vector<std::string> concatenation_mismatches(const CartanData& cd, const CrystalGraph& left,
                                                         const CrystalGraph& right, const TensorProduct& product) {
  std::vector<std::string> out;
  std::unordered_map<std::string, int> lid, rid;
  for (int v = 0; v < left.size(); ++v) lid.emplace(left.paths[v].key(), v);
  for (int v = 0; v < right.size(); ++v) rid.emplace(right.paths[v].key(), v);
  auto id_of = [&](const Path& p) -> int {
    auto [a, b] = split_half(p);
    auto ia = lid.find(a.key());
    auto ib = rid.find(b.key());
    if (ia == lid.end() || ib == rid.end()) return -1;
    return product.node_id({ia->second, ib->second});
  };
  for (int a = 0; a < left.size(); ++a) {
    for (int b = 0; b < right.size(); ++b) {
      const Path p = concatenate(left.paths[a], right.paths[b]);
      const int v = product.node_id({a, b});
      if (id_of(p) != v) {
        out.push_back("split of a concatenation does not recover its factors");
        continue;
      }
      const auto st = statistics(cd, p);
      const auto& node = product.graph.nodes[v];
      if (st.eps != node.eps || st.phi != node.phi || !(st.weight == node.weight)) {
        out.push_back("statistics differ at " + std::to_string(v));
      }
      for (int i = 0; i < cd.rank(); ++i) {
        const auto f = f_op(cd, p, i);
        const auto e = e_op(cd, p, i);
        const int fv = f ? id_of(*f) : kNoEdge;
        const int ev = e ? id_of(*e) : kNoEdge;
        if (fv != product.graph.f(v, i)) out.push_back("f_" + std::to_string(i) + " differs at " + std::to_string(v));
        if (ev != product.graph.e(v, i)) out.push_back("e_" + std::to_string(i) + " differs at " + std::to_string(v));
      }
    }
  }
  return out;
}

}  // namespace kmtest
