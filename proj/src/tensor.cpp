#include "kmcrystal/tensor.hpp"

namespace kmcrystal {

namespace {

struct FactorStats {
  std::vector<ExtInt> eps;
  std::vector<ExtInt> phi;
  WeightVector weight;
};

FactorStats factor_stats(const CartanData& cd, const TensorFactor& f, int component) {
  FactorStats s;
  if (const auto* marker = std::get_if<TMarker>(&f)) {
    s.eps.assign(static_cast<std::size_t>(cd.rank()), ExtInt::neg_inf());
    s.phi = s.eps;
    s.weight = marker->shift;
    return s;
  }
  const auto& node = std::get<std::shared_ptr<const CrystalGraph>>(f)->nodes.at(static_cast<std::size_t>(component));
  s.eps.assign(node.eps.begin(), node.eps.end());
  s.phi.assign(node.phi.begin(), node.phi.end());
  s.weight = node.weight;
  return s;
}

// Statistics of b_1 (x) b_2 from those of the two factors.
FactorStats combine(const CartanData& cd, const FactorStats& left, const FactorStats& right) {
  FactorStats out;
  out.weight = left.weight + right.weight;
  for (int i = 0; i < cd.rank(); ++i) {
    const std::int64_t wl = integral_pairing(cd, i, left.weight);
    const std::int64_t wr = integral_pairing(cd, i, right.weight);
    out.eps.push_back(max(left.eps[i], right.eps[i] - wl));
    out.phi.push_back(max(right.phi[i], left.phi[i] + wr));
  }
  return out;
}

struct Prefixes {
  std::vector<FactorStats> factor;  // per factor
  std::vector<FactorStats> prefix;  // prefix[k] = stats of b_1 (x) ... (x) b_{k+1}
};

Prefixes prefixes(const CartanData& cd, const std::vector<TensorFactor>& factors, const std::vector<int>& comps) {
  Prefixes p;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    p.factor.push_back(factor_stats(cd, factors[k], comps[k]));
    p.prefix.push_back(k == 0 ? p.factor[0] : combine(cd, p.prefix[k - 1], p.factor[k]));
  }
  return p;
}

// Index of the factor the operator acts on.
std::size_t select_factor(const Prefixes& p, int i, bool raising) {
  for (std::size_t k = p.factor.size(); k-- > 1;) {
    const ExtInt phi_left = p.prefix[k - 1].phi[i];
    const ExtInt eps_right = p.factor[k].eps[i];
    const bool left = raising ? phi_left >= eps_right : phi_left > eps_right;
    if (!left) return k;
  }
  return 0;
}

// Edge state of the selected factor: target id, kNoEdge or kBeyondEdge.
int factor_edge(const TensorFactor& f, int component, int i, bool raising) {
  if (std::holds_alternative<TMarker>(f)) return kNoEdge;
  const auto& g = *std::get<std::shared_ptr<const CrystalGraph>>(f);
  return raising ? g.e(component, i) : g.f(component, i);
}

std::optional<TensorNode> act(const CartanData& cd, const std::vector<TensorFactor>& factors, const TensorNode& node,
                              int i, bool raising) {
  const Prefixes p = prefixes(cd, factors, node.components);
  const std::size_t k = select_factor(p, i, raising);
  const int target = factor_edge(factors[k], node.components[k], i, raising);
  if (target == kNoEdge) return std::nullopt;
  if (target == kBeyondEdge) {
    throw Error(ErrorKind::TruncationBoundary, "operator leaves the truncated factor " + std::to_string(k));
  }
  std::vector<int> comps = node.components;
  comps[k] = target;
  return make_tensor_node(cd, factors, std::move(comps));
}

}  // namespace

std::int64_t ExtInt::value() const {
  if (neg_inf_) throw Error(ErrorKind::InvalidArgument, "statistic is -infinity");
  return value_;
}

TensorNode make_tensor_node(const CartanData& cd, const std::vector<TensorFactor>& factors,
                            std::vector<int> components) {
  if (factors.empty() || components.size() != factors.size()) {
    throw Error(ErrorKind::InvalidArgument, "tensor node needs one component per factor");
  }
  const Prefixes p = prefixes(cd, factors, components);
  TensorNode node;
  node.components = std::move(components);
  node.eps = p.prefix.back().eps;
  node.phi = p.prefix.back().phi;
  node.weight = p.prefix.back().weight;
  return node;
}

TensorStatistics tensor_statistics(const CartanData& cd, const std::vector<TensorFactor>& factors,
                                   const TensorNode& node) {
  const Prefixes p = prefixes(cd, factors, node.components);
  return {p.prefix.back().eps, p.prefix.back().phi, p.prefix.back().weight};
}

std::optional<TensorNode> tensor_e(const CartanData& cd, const std::vector<TensorFactor>& factors,
                                   const TensorNode& node, int i) {
  return act(cd, factors, node, i, true);
}

std::optional<TensorNode> tensor_f(const CartanData& cd, const std::vector<TensorFactor>& factors,
                                   const TensorNode& node, int i) {
  return act(cd, factors, node, i, false);
}

int TensorProduct::node_id(const std::vector<int>& components) const {
  int id = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    int size = 1;
    if (const auto* g = std::get_if<std::shared_ptr<const CrystalGraph>>(&factors[k])) size = (*g)->size();
    id = id * size + components[k];
  }
  return id;
}

TensorProduct tensor_crystal(const CartanData& cd, std::vector<TensorFactor> factors) {
  std::vector<int> sizes;
  bool any_graph = false;
  bool complete = true;
  for (const auto& f : factors) {
    if (const auto* g = std::get_if<std::shared_ptr<const CrystalGraph>>(&f)) {
      if (!((*g)->cartan == cd)) throw Error(ErrorKind::InvalidArgument, "tensor factors use different Cartan data");
      sizes.push_back((*g)->size());
      complete = complete && (*g)->complete;
      any_graph = true;
    } else {
      sizes.push_back(1);
    }
  }
  if (!any_graph) throw Error(ErrorKind::InvalidArgument, "tensor product needs at least one crystal factor");

  const int n = cd.rank();
  std::size_t total = 1;
  for (int s : sizes) total *= static_cast<std::size_t>(s);

  TensorProduct tp;
  tp.factors = std::move(factors);
  CrystalGraph& g = tp.graph;
  g.cartan = cd;
  g.orientation = Orientation::Tensor;
  g.complete = complete;
  g.nodes.reserve(total);
  g.components.reserve(total);
  g.f_edges.assign(total * static_cast<std::size_t>(n), kNoEdge);
  g.e_edges.assign(total * static_cast<std::size_t>(n), kNoEdge);

  std::vector<int> comps(tp.factors.size(), 0);
  for (std::size_t id = 0; id < total; ++id) {
    {
      std::size_t rest = id;
      for (std::size_t k = tp.factors.size(); k-- > 0;) {
        comps[k] = static_cast<int>(rest % static_cast<std::size_t>(sizes[k]));
        rest /= static_cast<std::size_t>(sizes[k]);
      }
    }
    const Prefixes p = prefixes(cd, tp.factors, comps);
    CrystalNode node;
    node.id = static_cast<int>(id);
    node.weight = p.prefix.back().weight;
    node.depth = RootVector(n);
    for (std::size_t k = 0; k < tp.factors.size(); ++k) {
      if (const auto* fg = std::get_if<std::shared_ptr<const CrystalGraph>>(&tp.factors[k])) {
        const auto& d = (*fg)->nodes[comps[k]].depth.coords;
        for (int i = 0; i < n; ++i) node.depth.coords[i] += d[i];
      }
    }
    for (int i = 0; i < n; ++i) {
      node.eps.push_back(static_cast<int>(p.prefix.back().eps[i].value()));
      node.phi.push_back(static_cast<int>(p.prefix.back().phi[i].value()));
      for (bool raising : {true, false}) {
        const std::size_t k = select_factor(p, i, raising);
        const int target = factor_edge(tp.factors[k], comps[k], i, raising);
        int state = target;
        if (target >= 0) {
          std::vector<int> moved = comps;
          moved[k] = target;
          state = tp.node_id(moved);
        }
        (raising ? g.e_ref(static_cast<int>(id), i) : g.f_ref(static_cast<int>(id), i)) = state;
      }
    }
    g.nodes.push_back(std::move(node));
    g.components.push_back(comps);
  }
  g.origin_weight = g.nodes.front().weight;
  return tp;
}

std::vector<int> maximal_vectors(const CrystalGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v) {
    bool maximal = true;
    for (int i = 0; i < g.rank() && maximal; ++i) maximal = g.e(v, i) == kNoEdge;
    if (maximal) out.push_back(v);
  }
  return out;
}

std::vector<int> minimal_vectors(const CrystalGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v) {
    bool minimal = true;
    for (int i = 0; i < g.rank() && minimal; ++i) minimal = g.f(v, i) == kNoEdge;
    if (minimal) out.push_back(v);
  }
  return out;
}

}  // namespace kmcrystal
