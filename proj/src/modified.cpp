#include "kmcrystal/modified.hpp"

namespace kmcrystal {

InfinitySlice infinity_slice(const CartanData& cd, InfinitySide side, int depth, std::optional<WeightVector> reference,
                             int threads) {
  if (depth < 0) throw Error(ErrorKind::InvalidArgument, "negative slice depth");
  // One step of headroom: edges leaving depth `depth` must exist exactly
  // when they do in B(+-infinity), so that they surface as boundary edges.
  WeightVector ref = reference.value_or(Rational(depth + 1) * rho(cd));
  for (int i = 0; i < cd.rank(); ++i) {
    if (pairing(cd, i, ref) < depth + 1) {
      throw Error(ErrorKind::DepthInsufficient, "reference weight " + ref.str() + " is too small for depth " +
                                                    std::to_string(depth));
    }
  }
  CrystalGraph g = side == InfinitySide::Plus ? generate_highest(cd, ref, depth, threads)
                                              : generate_lowest(cd, -ref, depth, threads);
  for (auto& node : g.nodes) {
    for (int i = 0; i < cd.rank(); ++i) {
      const int shift = static_cast<int>(integral_pairing(cd, i, ref));
      (side == InfinitySide::Plus ? node.phi[i] : node.eps[i]) -= shift;
    }
    if (side == InfinitySide::Plus) {
      node.weight -= ref;
    } else {
      node.weight += ref;
    }
  }
  g.origin_weight = WeightVector(cd.rank());
  return InfinitySlice{side, depth, std::move(ref), share(std::move(g))};
}

TensorProduct modified_crystal(const CartanData& cd, const WeightVector& mu, int depth, int threads) {
  if (!mu.is_integral()) throw Error(ErrorKind::InvalidArgument, mu.str() + " is not a lattice weight");
  const InfinitySlice plus = infinity_slice(cd, InfinitySide::Plus, depth, std::nullopt, threads);
  const InfinitySlice minus = infinity_slice(cd, InfinitySide::Minus, depth, std::nullopt, threads);
  return tensor_crystal(cd, {plus.graph, TMarker{mu}, minus.graph});
}

MultiplicityReport verify_multiplicity(const CartanData& cd, const WeightVector& mu, const WeightVector& lambda,
                                       int depth, int threads) {
  if (!is_dominant(cd, lambda)) throw Error(ErrorKind::NotDominant, lambda.str() + " is not dominant integral");
  RootVector gap;
  try {
    gap = root_coordinates(cd, lambda - mu);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInRootLattice) throw;
    throw Error(ErrorKind::NotInQPlus, "lambda - mu is not in the root lattice");
  }
  if (!gap.is_nonnegative()) throw Error(ErrorKind::NotInQPlus, "lambda - mu is not in Q+");
  if (gap.height() > depth - 1) {
    throw Error(ErrorKind::DepthInsufficient, "need depth >= " + std::to_string(gap.height() + 1));
  }

  MultiplicityReport r;
  r.depth = depth;

  const TensorProduct product = modified_crystal(cd, mu, depth, threads);
  for (int v : maximal_vectors(product.graph)) {
    if (product.graph.nodes[v].weight == lambda) ++r.count_direct;
  }

  const auto& minus = *std::get<std::shared_ptr<const CrystalGraph>>(product.factors[2]);
  const WeightVector target = lambda - mu;
  for (const auto& node : minus.nodes) {
    if (!(node.weight == target)) continue;
    bool ok = true;
    for (int i = 0; i < cd.rank() && ok; ++i) ok = node.phi[i] <= integral_pairing(cd, i, lambda);
    if (ok) ++r.count_closed_form;
  }

  if (cd.is_finite()) {
    r.oracle = weight_multiplicity(cd, lambda, mu);
  } else {
    const CrystalGraph b_lambda = generate_highest(cd, lambda, static_cast<int>(gap.height()), threads);
    int count = 0;
    for (const auto& node : b_lambda.nodes) count += node.weight == mu ? 1 : 0;
    r.oracle = count;
  }
  return r;
}

std::string to_string(LevelCase c) {
  switch (c) {
    case LevelCase::Positive: return "positive";
    case LevelCase::Negative: return "negative";
    case LevelCase::ZeroTrivial: return "zero-trivial";
    case LevelCase::ZeroNonTrivial: return "zero-nontrivial";
  }
  return "positive";
}

AffineClassification classify_affine(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu) {
  if (!cd.is_affine()) throw Error(ErrorKind::NotAffine, "classification applies to affine types");
  if (!is_dominant(cd, lambda)) throw Error(ErrorKind::NotDominant, lambda.str() + " is not dominant integral");
  if (!is_dominant(cd, mu)) throw Error(ErrorKind::NotDominant, mu.str() + " is not dominant integral");
  const WeightVector diff = lambda - mu;
  AffineClassification c;
  c.level = level(cd, diff);
  if (c.level > 0) {
    c.level_case = LevelCase::Positive;
    c.W = c.N = "0";
    c.M = c.U = "full";
    c.statement = "W(λ,−μ)=N(λ,−μ)=0 and M(λ,−μ)=U(λ,−μ)=V(λ)⊗V(−μ)";
  } else if (c.level < 0) {
    c.level_case = LevelCase::Negative;
    c.W = c.N = "full";
    c.M = c.U = "0";
    c.statement = "W(λ,−μ)=N(λ,−μ)=V(λ)⊗V(−μ) and M(λ,−μ)=U(λ,−μ)=0";
  } else {
    bool in_p0 = true;
    for (int i = 0; i < cd.rank() && in_p0; ++i) in_p0 = pairing(cd, i, diff) == 0;
    if (in_p0) {
      c.level_case = LevelCase::ZeroTrivial;
      c.M = c.N = "trivial";
      c.W = c.U = "unspecified";
      c.statement = "M(λ,−μ)=N(λ,−μ) is a 1-dimensional trivial module";
    } else {
      c.level_case = LevelCase::ZeroNonTrivial;
      c.W = c.U = "full";
      c.M = c.N = "0";
      c.statement = "W(λ,−μ)=U(λ,−μ)=V(λ)⊗V(−μ) and M(λ,−μ)=N(λ,−μ)=0";
    }
  }
  return c;
}

}  // namespace kmcrystal
