#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "kmcrystal/crystal_graph.hpp"

namespace kmcrystal {

/// Integer extended by -infinity, the statistics of T_mu. Arithmetic
/// saturates at -infinity.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design of the algebra
  static constexpr ExtInt neg_inf() {
    ExtInt x;
    x.neg_inf_ = true;
    return x;
  }

  constexpr bool is_neg_inf() const noexcept { return neg_inf_; }
  std::int64_t value() const;

  friend constexpr ExtInt operator+(ExtInt a, std::int64_t b) { return a.neg_inf_ ? a : ExtInt(a.value_ + b); }
  friend constexpr ExtInt operator-(ExtInt a, std::int64_t b) { return a.neg_inf_ ? a : ExtInt(a.value_ - b); }
  friend constexpr ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(ExtInt a, ExtInt b) {
    if (a.neg_inf_) return !b.neg_inf_;
    if (b.neg_inf_) return false;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return !(a < b); }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return !(b < a); }

 private:
  bool neg_inf_ = false;
  std::int64_t value_ = 0;
};

/// One-element crystal t_mu with eps = phi = -infinity.
struct TMarker {
  WeightVector shift;
};

using TensorFactor = std::variant<std::shared_ptr<const CrystalGraph>, TMarker>;

/// b_1 (x) ... (x) b_r, bracketed from the left.
struct TensorNode {
  std::vector<int> components;  ///< node id per factor (0 for markers)
  std::vector<ExtInt> eps;
  std::vector<ExtInt> phi;
  WeightVector weight;
};

struct TensorStatistics {
  std::vector<ExtInt> eps;
  std::vector<ExtInt> phi;
  WeightVector weight;
};

TensorNode make_tensor_node(const CartanData& cd, const std::vector<TensorFactor>& factors,
                            std::vector<int> components);

TensorStatistics tensor_statistics(const CartanData& cd, const std::vector<TensorFactor>& factors,
                                   const TensorNode& node);

/// e_i on a tensor node: acts on the left part iff phi_i(left) >= eps_i(right).
/// Throws TruncationBoundary when the selected factor's edge leaves its
/// truncated graph.
std::optional<TensorNode> tensor_e(const CartanData& cd, const std::vector<TensorFactor>& factors,
                                   const TensorNode& node, int i);

/// f_i: acts on the left part iff phi_i(left) > eps_i(right).
std::optional<TensorNode> tensor_f(const CartanData& cd, const std::vector<TensorFactor>& factors,
                                   const TensorNode& node, int i);

/// Product crystal over all tuples of factor nodes, ids in lexicographic
/// order of the component tuple (first factor most significant). At least
/// one factor must be a graph.
struct TensorProduct {
  std::vector<TensorFactor> factors;
  CrystalGraph graph;

  int node_id(const std::vector<int>& components) const;
};

TensorProduct tensor_crystal(const CartanData& cd, std::vector<TensorFactor> factors);

/// Nodes whose e_i are all undefined.
std::vector<int> maximal_vectors(const CrystalGraph& g);

/// Nodes whose f_i are all undefined.
std::vector<int> minimal_vectors(const CrystalGraph& g);

inline std::shared_ptr<const CrystalGraph> share(CrystalGraph g) {
  return std::make_shared<const CrystalGraph>(std::move(g));
}

}  // namespace kmcrystal
