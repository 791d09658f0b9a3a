#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmcrystal/cartan.hpp"
#include "kmcrystal/path.hpp"

namespace kmcrystal {

enum class Orientation { Highest, Lowest, Tensor };

std::string to_string(Orientation o);

/// Edge states stored in CrystalGraph edge tables. Non-negative values are
/// node ids.
inline constexpr int kNoEdge = -1;      ///< operator undefined (gives 0)
inline constexpr int kBeyondEdge = -2;  ///< operator defined, target outside the truncation

struct CrystalNode {
  int id = 0;
  WeightVector weight;
  RootVector depth;  ///< weight = origin -/+ sum depth_i alpha_i
  std::vector<int> eps;
  std::vector<int> phi;
};

/// A generated crystal: nodes with statistics and i-colored edges.
///
/// Highest orientation: generated from the origin by f; Lowest: by e;
/// Tensor: product crystal (see tensor.hpp), where `components` records the
/// factor node of each tensor node.
struct CrystalGraph {
  CartanData cartan;
  WeightVector origin_weight;
  Orientation orientation = Orientation::Highest;
  std::vector<CrystalNode> nodes;
  std::vector<int> f_edges;  ///< nodes.size() * rank, row-major
  std::vector<int> e_edges;
  std::optional<int> truncation_depth;  ///< nullopt = unbounded
  bool complete = true;
  std::vector<Path> paths;                   ///< path model graphs only
  std::vector<std::vector<int>> components;  ///< tensor graphs only

  int rank() const noexcept { return cartan.rank(); }
  int size() const noexcept { return static_cast<int>(nodes.size()); }
  int f(int node, int i) const { return f_edges[static_cast<std::size_t>(node) * rank() + i]; }
  int e(int node, int i) const { return e_edges[static_cast<std::size_t>(node) * rank() + i]; }
  int& f_ref(int node, int i) { return f_edges[static_cast<std::size_t>(node) * rank() + i]; }
  int& e_ref(int node, int i) { return e_edges[static_cast<std::size_t>(node) * rank() + i]; }
  int depth_sum(int node) const { return static_cast<int>(nodes[node].depth.height()); }
};

/// Closure of the straight path to lambda under f, layered by depth.
/// depth_limit = nullopt means unbounded (finite types only).
CrystalGraph generate_highest(const CartanData& cd, const WeightVector& lambda,
                              std::optional<int> depth_limit = std::nullopt, int threads = 1);

/// Closure of the straight path to nu (antidominant) under e.
CrystalGraph generate_lowest(const CartanData& cd, const WeightVector& nu,
                             std::optional<int> depth_limit = std::nullopt, int threads = 1);

/// Nodes reachable from `root` by f (forward = true) or e, restricted to
/// `allowed` when given.
std::vector<int> closure(const CrystalGraph& g, std::span<const int> roots, bool forward,
                         const std::vector<bool>* allowed = nullptr);

/// Serialization of the colored graph induced on `subset`, visiting nodes in
/// BFS order from `root` (colors ascending, f then e). Two connected
/// crystals are isomorphic as colored graphs with matching statistics iff
/// their forms from corresponding roots agree.
std::string canonical_form(const CrystalGraph& g, int root, const std::vector<bool>* subset = nullptr);

/// Number of nodes per weight.
std::vector<std::pair<WeightVector, int>> weight_counts(const CrystalGraph& g);

}  // namespace kmcrystal
