#pragma once

#include <optional>
#include <string>

#include "kmcrystal/tensor.hpp"

namespace kmcrystal {

enum class InfinitySide { Plus, Minus };

/// Depth-d slice of B(infinity) (Plus) or B(-infinity) (Minus), realized
/// inside B(+-Lambda_ref) with min_i <h_i, Lambda_ref> >= d + 1. The stored
/// graph already carries the shifted statistics:
///   Plus:  wt = wt - Lambda_ref, eps unchanged, phi -= <h_i, Lambda_ref>
///   Minus: wt = wt + Lambda_ref, phi unchanged, eps -= <h_i, Lambda_ref>
struct InfinitySlice {
  InfinitySide side = InfinitySide::Plus;
  int depth = 0;
  WeightVector reference;
  std::shared_ptr<const CrystalGraph> graph;
};

/// Reference defaults to (depth + 1) * (Lambda_1 + ... + Lambda_n).
InfinitySlice infinity_slice(const CartanData& cd, InfinitySide side, int depth,
                             std::optional<WeightVector> reference = std::nullopt, int threads = 1);

/// B(infinity) (x) T_mu (x) B(-infinity), both slices truncated at `depth`.
TensorProduct modified_crystal(const CartanData& cd, const WeightVector& mu, int depth, int threads = 1);

struct MultiplicityReport {
  int count_direct = 0;
  int count_closed_form = 0;
  BigInt oracle = 0;
  int depth = 0;
  bool agree() const { return BigInt(count_direct) == oracle && BigInt(count_closed_form) == oracle; }
};

/// Counts maximal vectors of weight lambda in the modified crystal of mu
/// three ways. Requires height(lambda - mu) <= depth - 1.
MultiplicityReport verify_multiplicity(const CartanData& cd, const WeightVector& mu, const WeightVector& lambda,
                                       int depth, int threads = 1);

enum class LevelCase { Positive, Negative, ZeroTrivial, ZeroNonTrivial };

std::string to_string(LevelCase c);

/// Predicted structure of V(lambda) (x) V(-mu) for affine types.
struct AffineClassification {
  Rational level;
  LevelCase level_case = LevelCase::Positive;
  std::string W, N, M, U;  ///< "0", "full", "trivial" or "unspecified"
  std::string statement;
};

AffineClassification classify_affine(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu);

}  // namespace kmcrystal
