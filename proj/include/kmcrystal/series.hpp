#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kmcrystal/tensor.hpp"

namespace kmcrystal {

/// Lexicographically least operator word producing a node from the origin
/// (f-words for highest crystals, e-words for lowest ones). Letters are
/// internal indices 0..n-1.
using MinWord = std::vector<int>;

/// "(1,2,2,1)" with labels shifted by cd.label_base; "()" for the origin.
std::string format_word(const CartanData& cd, const MinWord& w);

MinWord min_word(const CrystalGraph& g, int node);

/// Min words of every node, computed layer by layer.
std::vector<MinWord> min_words(const CrystalGraph& g);

/// Total order on a highest (lowest) crystal: shallower nodes are larger
/// (smaller), ties broken by min word, smaller word = larger (smaller) node.
std::strong_ordering compare(const CrystalGraph& g, int b1, int b2);

/// Strict "less than" on node ids of one crystal.
using NodeLess = std::function<bool(int, int)>;

enum class OrderMode { MinWord, WeightGraded };

std::string to_string(OrderMode m);
OrderMode order_mode_from_string(const std::string& s);

/// The comparator for a built-in order on `g`; captures its own min words.
NodeLess make_order(const CrystalGraph& g, OrderMode mode);

/// Node ids sorted from largest to smallest under `less`.
std::vector<int> descending(const CrystalGraph& g, const NodeLess& less);

/// Throws OrderNotWeightMonotone unless `less` is a strict total order on g
/// with wt b1 < wt b2 => b1 < b2.
void validate_order(const CrystalGraph& g, const NodeLess& less);

/// b in B(mu) with eps_i(b) <= <h_i, lambda> for all i, in descending order.
std::vector<int> dominant_elements(const CartanData& cd, const WeightVector& lambda, const CrystalGraph& b_mu);

struct FiltrationStep {
  int pivot = 0;                          ///< node of B(mu) (or B(lambda), B(-mu))
  std::vector<int> support;               ///< sorted tensor node ids
  std::optional<WeightVector> quotient;   ///< highest (lowest) weight of the new layer
};

struct SeriesFactor {
  int pivot = 0;
  WeightVector highest_weight;
  int support_size = 0;
};

/// Everything a series computation produces: the tensor crystal
/// B(lambda) (x) B(mu), the filtration and its strict jumps.
struct SeriesResult {
  std::shared_ptr<const CrystalGraph> left;
  std::shared_ptr<const CrystalGraph> right;
  TensorProduct product;
  std::vector<int> pivot_order;
  std::vector<FiltrationStep> steps;
  std::vector<SeriesFactor> factors;
};

/// Ascending filtration F_lambda(b) of V(lambda) (x) V(mu), one step per b
/// in descending order of B(mu).
SeriesResult filtration(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                        OrderMode order = OrderMode::MinWord, int threads = 1);

/// Same, with a caller-supplied order on B(mu) (validated first).
SeriesResult filtration_with_order(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                                   const std::function<NodeLess(const CrystalGraph&)>& make_less, int threads = 1);

/// Same, on already generated complete crystals B(lambda) and B(mu).
SeriesResult filtration_from_graphs(const CartanData& cd, std::shared_ptr<const CrystalGraph> left,
                                    std::shared_ptr<const CrystalGraph> right, const NodeLess& less);

std::vector<SeriesFactor> composition_series(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                                             OrderMode order = OrderMode::MinWord);

std::vector<SeriesFactor> custom_order_series(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                                              const std::function<NodeLess(const CrystalGraph&)>& make_less);

/// Multiset {lambda + wt b : b lambda-dominant}, sorted.
std::vector<WeightVector> lr_decompose(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu);

/// Classical Littlewood-Richardson rule for type A_n via LR tableaux.
std::vector<WeightVector> lr_oracle_type_a(int n, const WeightVector& lambda, const WeightVector& mu);

enum class MixedSide { LeftLambda, RightMinusMu };

struct MixedFiltration {
  std::shared_ptr<const CrystalGraph> highest;  ///< truncated B(lambda)
  std::shared_ptr<const CrystalGraph> lowest;   ///< truncated B(-mu)
  TensorProduct product;
  std::vector<FiltrationStep> steps;
  int margin = 0;
};

/// Descending filtrations of V(lambda) (x) V(-mu) on depth-truncated crystals.
/// With incomplete factors, only steps whose pivot depth is at most
/// depth - margin are reported; margin defaults to max_i <h_i, lambda> + 1
/// (resp. max_i <h_i, mu> + 1 for the right side).
MixedFiltration mixed_filtration(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                                 MixedSide side, int depth, std::optional<int> margin = std::nullopt,
                                 int threads = 1);

}  // namespace kmcrystal
