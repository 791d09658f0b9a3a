#include "kmcrystal/series.hpp"

#include <algorithm>
#include <sstream>

namespace kmcrystal {

namespace {

void require_generated(const CrystalGraph& g) {
  if (g.orientation == Orientation::Tensor) {
    throw Error(ErrorKind::InvalidArgument, "min words are defined on highest or lowest weight crystals");
  }
}

// Raising direction towards the origin: e for highest crystals, f for lowest.
int toward_origin(const CrystalGraph& g, int v, int i) {
  return g.orientation == Orientation::Highest ? g.e(v, i) : g.f(v, i);
}

// wt a < wt b, read off the depth vectors.
bool weight_less(const CrystalGraph& g, int a, int b) {
  const auto& da = g.nodes[a].depth.coords;
  const auto& db = g.nodes[b].depth.coords;
  const auto& deeper = g.orientation == Orientation::Highest ? da : db;
  const auto& shallower = g.orientation == Orientation::Highest ? db : da;
  bool strict = false;
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (deeper[i] < shallower[i]) return false;
    if (deeper[i] > shallower[i]) strict = true;
  }
  return strict;
}

void add_closure(const CrystalGraph& g, int root, bool forward, std::vector<bool>& in, std::vector<int>& support) {
  if (in[root]) return;
  std::vector<int> todo{root};
  in[root] = true;
  while (!todo.empty()) {
    const int v = todo.back();
    todo.pop_back();
    support.push_back(v);
    for (int i = 0; i < g.rank(); ++i) {
      const int w = forward ? g.f(v, i) : g.e(v, i);
      if (w < 0 || in[w]) continue;
      in[w] = true;
      todo.push_back(w);
    }
  }
}

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool all_none(const CrystalGraph& g, int v, bool raising) {
  for (int i = 0; i < g.rank(); ++i) {
    if ((raising ? g.e(v, i) : g.f(v, i)) != kNoEdge) return false;
  }
  return true;
}

}  // namespace

std::string format_word(const CartanData& cd, const MinWord& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ',';
    os << cd.label(w[k]);
  }
  os << ')';
  return os.str();
}

std::vector<MinWord> min_words(const CrystalGraph& g) {
  require_generated(g);
  std::vector<MinWord> words(static_cast<std::size_t>(g.size()));
  // Ids are assigned layer by layer, so the parent of v always precedes v.
  for (int v = 1; v < g.size(); ++v) {
    for (int j = 0; j < g.rank(); ++j) {
      const int parent = toward_origin(g, v, j);
      if (parent < 0) continue;
      MinWord w;
      w.reserve(words[parent].size() + 1);
      w.push_back(j);
      w.insert(w.end(), words[parent].begin(), words[parent].end());
      words[v] = std::move(w);
      break;
    }
  }
  return words;
}

MinWord min_word(const CrystalGraph& g, int node) {
  require_generated(g);
  MinWord w;
  for (int v = node; v != 0;) {
    int j = 0;
    while (j < g.rank() && toward_origin(g, v, j) < 0) ++j;
    if (j == g.rank()) throw Error(ErrorKind::TruncationBoundary, "node is not connected to the origin");
    w.push_back(j);
    v = toward_origin(g, v, j);
  }
  return w;
}

std::strong_ordering compare(const CrystalGraph& g, int b1, int b2) {
  const int l1 = g.depth_sum(b1), l2 = g.depth_sum(b2);
  const bool highest = g.orientation == Orientation::Highest;
  if (l1 != l2) return highest ? l2 <=> l1 : l1 <=> l2;
  const MinWord w1 = min_word(g, b1), w2 = min_word(g, b2);
  return highest ? w2 <=> w1 : w1 <=> w2;
}

std::string to_string(OrderMode m) { return m == OrderMode::MinWord ? "minword" : "weightgraded"; }

OrderMode order_mode_from_string(const std::string& s) {
  if (s == "minword") return OrderMode::MinWord;
  if (s == "weightgraded") return OrderMode::WeightGraded;
  throw Error(ErrorKind::InvalidArgument, "unknown order '" + s + "'");
}

NodeLess make_order(const CrystalGraph& g, OrderMode mode) {
  require_generated(g);
  auto words = std::make_shared<const std::vector<MinWord>>(min_words(g));
  std::vector<int> depth;
  for (int v = 0; v < g.size(); ++v) depth.push_back(g.depth_sum(v));
  const bool highest = g.orientation == Orientation::Highest;
  // Weight-graded: same grading by depth, ties broken the opposite way.
  const bool reversed_ties = mode == OrderMode::WeightGraded;
  return [words, depth = std::move(depth), highest, reversed_ties](int a, int b) {
    if (depth[a] != depth[b]) return highest ? depth[a] > depth[b] : depth[a] < depth[b];
    const auto& wa = (*words)[a];
    const auto& wb = (*words)[b];
    return (highest != reversed_ties) ? wa > wb : wa < wb;
  };
}

std::vector<int> descending(const CrystalGraph& g, const NodeLess& less) {
  std::vector<int> ids(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) ids[v] = v;
  std::sort(ids.begin(), ids.end(), [&less](int a, int b) { return less(b, a); });
  return ids;
}

void validate_order(const CrystalGraph& g, const NodeLess& less) {
  const int n = g.size();
  std::vector<int> below(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    if (less(a, a)) throw Error(ErrorKind::OrderNotWeightMonotone, "order is not irreflexive");
    for (int b = a + 1; b < n; ++b) {
      const bool ab = less(a, b), ba = less(b, a);
      if (ab == ba) throw Error(ErrorKind::OrderNotWeightMonotone, "order is not total and antisymmetric");
      ++below[ab ? b : a];
      if (weight_less(g, a, b) && !ab) {
        throw Error(ErrorKind::OrderNotWeightMonotone, "wt b1 < wt b2 but b1 is not below b2");
      }
      if (weight_less(g, b, a) && !ba) {
        throw Error(ErrorKind::OrderNotWeightMonotone, "wt b2 < wt b1 but b2 is not below b1");
      }
    }
  }
  // A transitive tournament has pairwise distinct in-degrees.
  std::vector<int> sorted = below;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k) {
    if (sorted[k] != k) throw Error(ErrorKind::OrderNotWeightMonotone, "order is not transitive");
  }
}

std::vector<int> dominant_elements(const CartanData& cd, const WeightVector& lambda, const CrystalGraph& b_mu) {
  if (!is_dominant(cd, lambda)) throw Error(ErrorKind::NotDominant, lambda.str() + " is not dominant integral");
  std::vector<int> out;
  for (int v : descending(b_mu, make_order(b_mu, OrderMode::MinWord))) {
    bool ok = true;
    for (int i = 0; i < cd.rank() && ok; ++i) ok = b_mu.nodes[v].eps[i] <= integral_pairing(cd, i, lambda);
    if (ok) out.push_back(v);
  }
  return out;
}

SeriesResult filtration_from_graphs(const CartanData& cd, std::shared_ptr<const CrystalGraph> left,
                                    std::shared_ptr<const CrystalGraph> right, const NodeLess& less) {
  if (!left->complete || !right->complete) {
    throw Error(ErrorKind::InvalidArgument, "series needs complete crystals");
  }
  SeriesResult r;
  r.left = std::move(left);
  r.right = std::move(right);
  validate_order(*r.right, less);
  r.pivot_order = descending(*r.right, less);
  r.product = tensor_crystal(cd, {r.left, r.right});
  const WeightVector& lambda = r.left->origin_weight;

  const CrystalGraph& g = r.product.graph;
  std::vector<bool> in(static_cast<std::size_t>(g.size()), false);
  std::vector<int> support;
  for (int b : r.pivot_order) {
    const int t = r.product.node_id({0, b});
    add_closure(g, t, true, in, support);
    FiltrationStep step;
    step.pivot = b;
    step.support = sorted_copy(support);
    if (all_none(g, t, true)) {
      step.quotient = lambda + r.right->nodes[b].weight;
      r.factors.push_back({b, *step.quotient, static_cast<int>(support.size())});
    }
    r.steps.push_back(std::move(step));
  }
  return r;
}

SeriesResult filtration_with_order(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                                   const std::function<NodeLess(const CrystalGraph&)>& make_less, int threads) {
  auto left = share(generate_highest(cd, lambda, std::nullopt, threads));
  auto right = share(generate_highest(cd, mu, std::nullopt, threads));
  const NodeLess less = make_less(*right);
  return filtration_from_graphs(cd, std::move(left), std::move(right), less);
}

SeriesResult filtration(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu, OrderMode order,
                        int threads) {
  return filtration_with_order(
      cd, lambda, mu, [order](const CrystalGraph& g) { return make_order(g, order); }, threads);
}

std::vector<SeriesFactor> composition_series(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                                             OrderMode order) {
  return filtration(cd, lambda, mu, order).factors;
}

std::vector<SeriesFactor> custom_order_series(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                                              const std::function<NodeLess(const CrystalGraph&)>& make_less) {
  return filtration_with_order(cd, lambda, mu, make_less).factors;
}

std::vector<WeightVector> lr_decompose(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu) {
  if (!is_dominant(cd, lambda)) throw Error(ErrorKind::NotDominant, lambda.str() + " is not dominant integral");
  const CrystalGraph b_mu = generate_highest(cd, mu);
  std::vector<WeightVector> out;
  for (int b : dominant_elements(cd, lambda, b_mu)) out.push_back(lambda + b_mu.nodes[b].weight);
  std::sort(out.begin(), out.end());
  return out;
}

MixedFiltration mixed_filtration(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                                 MixedSide side, int depth, std::optional<int> margin, int threads) {
  MixedFiltration m;
  m.highest = share(generate_highest(cd, lambda, depth, threads));
  m.lowest = share(generate_lowest(cd, -mu, depth, threads));
  m.product = tensor_crystal(cd, {m.highest, m.lowest});
  const CrystalGraph& g = m.product.graph;
  const bool left = side == MixedSide::LeftLambda;

  const WeightVector& bound = left ? lambda : mu;
  int default_margin = 0;
  for (int i = 0; i < cd.rank(); ++i) default_margin = std::max<int>(default_margin, static_cast<int>(integral_pairing(cd, i, bound)));
  m.margin = margin.value_or(default_margin + 1);
  const bool complete = m.highest->complete && m.lowest->complete;

  // Pivots indexed by B(-mu) ascending (left) or B(lambda) descending (right);
  // supports grow as we walk that list backwards.
  const CrystalGraph& indexed = left ? *m.lowest : *m.highest;
  const std::vector<int> desc = descending(indexed, make_order(indexed, OrderMode::MinWord));
  std::vector<int> pivots = desc;
  if (left) std::reverse(pivots.begin(), pivots.end());

  std::vector<bool> in(static_cast<std::size_t>(g.size()), false);
  std::vector<int> support;
  std::vector<FiltrationStep> steps(pivots.size());
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const int b = pivots[k];
    const int t = left ? m.product.node_id({0, b}) : m.product.node_id({b, 0});
    add_closure(g, t, left, in, support);
    FiltrationStep& step = steps[k];
    step.pivot = b;
    step.support = sorted_copy(support);
    if (all_none(g, t, left)) {
      step.quotient = (left ? lambda : -mu) + indexed.nodes[b].weight;
    }
  }
  for (auto& step : steps) {
    if (complete || indexed.depth_sum(step.pivot) <= depth - m.margin) m.steps.push_back(std::move(step));
  }
  return m;
}

}  // namespace kmcrystal
