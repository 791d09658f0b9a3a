#include "kmcrystal/crystal_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace kmcrystal {

namespace {

// Runs body(k) for k in [0, count) on up to `threads` workers. Each k writes
// only its own output slot, so results do not depend on scheduling.
template <class Body>
void parallel_for(std::size_t count, int threads, Body body) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < count; k += workers) body(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

CrystalGraph generate(const CartanData& cd, const WeightVector& origin, std::optional<int> depth_limit, int threads,
                      Orientation orientation) {
  if (!depth_limit && !cd.is_finite()) {
    throw Error(ErrorKind::UnboundedInfiniteType, "unbounded generation requires a finite type; pass a depth limit");
  }
  if (depth_limit && *depth_limit < 0) throw Error(ErrorKind::InvalidArgument, "negative depth limit");
  const bool lowering = orientation == Orientation::Highest;
  const int n = cd.rank();

  CrystalGraph g;
  g.cartan = cd;
  g.origin_weight = origin;
  g.orientation = orientation;
  g.truncation_depth = depth_limit;
  g.complete = true;

  std::unordered_map<std::string, int> index;
  auto add_node = [&](Path p, RootVector depth) {
    const int id = g.size();
    auto st = statistics(cd, p);
    index.emplace(p.key(), id);
    g.nodes.push_back(CrystalNode{id, std::move(st.weight), std::move(depth), std::move(st.eps), std::move(st.phi)});
    g.paths.push_back(std::move(p));
    g.f_edges.insert(g.f_edges.end(), static_cast<std::size_t>(n), kNoEdge);
    g.e_edges.insert(g.e_edges.end(), static_cast<std::size_t>(n), kNoEdge);
    return id;
  };
  add_node(straight_path(origin), RootVector(n));

  std::vector<int> layer{0};
  for (int level = 0; !layer.empty(); ++level) {
    std::vector<std::optional<Path>> results(layer.size() * static_cast<std::size_t>(n));
    parallel_for(results.size(), threads, [&](std::size_t k) {
      const Path& p = g.paths[layer[k / n]];
      const int i = static_cast<int>(k % n);
      results[k] = lowering ? f_op(cd, p, i) : e_op(cd, p, i);
    });

    if (depth_limit && level == *depth_limit) {
      for (std::size_t k = 0; k < results.size(); ++k) {
        if (!results[k]) continue;
        const int src = layer[k / n];
        const int i = static_cast<int>(k % n);
        (lowering ? g.f_ref(src, i) : g.e_ref(src, i)) = kBeyondEdge;
        g.complete = false;
      }
      break;
    }

    // New paths of the next layer, ordered canonically so ids are deterministic.
    std::map<Path, std::pair<int, int>> fresh;  // path -> (first parent, color)
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (results[k]) fresh.emplace(*results[k], std::pair{layer[k / n], static_cast<int>(k % n)});
    }
    std::vector<int> next;
    next.reserve(fresh.size());
    for (auto& [path, origin_edge] : fresh) {
      RootVector depth = g.nodes[origin_edge.first].depth;
      depth.coords[origin_edge.second] += 1;
      next.push_back(add_node(path, std::move(depth)));
    }
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (!results[k]) continue;
      const int src = layer[k / n];
      const int i = static_cast<int>(k % n);
      const int dst = index.at(results[k]->key());
      if (lowering) {
        g.f_ref(src, i) = dst;
        g.e_ref(dst, i) = src;
      } else {
        g.e_ref(src, i) = dst;
        g.f_ref(dst, i) = src;
      }
    }
    layer = std::move(next);
  }
  return g;
}

}  // namespace

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::Highest: return "highest";
    case Orientation::Lowest: return "lowest";
    case Orientation::Tensor: return "tensor";
  }
  return "highest";
}

CrystalGraph generate_highest(const CartanData& cd, const WeightVector& lambda, std::optional<int> depth_limit,
                              int threads) {
  if (!is_dominant(cd, lambda)) throw Error(ErrorKind::NotDominant, lambda.str() + " is not dominant integral");
  return generate(cd, lambda, depth_limit, threads, Orientation::Highest);
}

CrystalGraph generate_lowest(const CartanData& cd, const WeightVector& nu, std::optional<int> depth_limit,
                             int threads) {
  if (!is_antidominant(cd, nu)) throw Error(ErrorKind::NotAntidominant, nu.str() + " is not antidominant integral");
  return generate(cd, nu, depth_limit, threads, Orientation::Lowest);
}

std::vector<int> closure(const CrystalGraph& g, std::span<const int> roots, bool forward,
                         const std::vector<bool>* allowed) {
  std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
  std::vector<int> out;
  std::deque<int> todo;
  for (int r : roots) {
    if (allowed && !(*allowed)[r]) continue;
    if (!seen[r]) {
      seen[r] = true;
      todo.push_back(r);
    }
  }
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop_front();
    out.push_back(v);
    for (int i = 0; i < g.rank(); ++i) {
      const int w = forward ? g.f(v, i) : g.e(v, i);
      if (w < 0 || seen[w] || (allowed && !(*allowed)[w])) continue;
      seen[w] = true;
      todo.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string canonical_form(const CrystalGraph& g, int root, const std::vector<bool>* subset) {
  std::unordered_map<int, int> order;
  std::vector<int> visit{root};
  order.emplace(root, 0);
  for (std::size_t k = 0; k < visit.size(); ++k) {
    const int v = visit[k];
    for (int i = 0; i < g.rank(); ++i) {
      for (int w : {g.f(v, i), g.e(v, i)}) {
        if (w < 0 || (subset && !(*subset)[w]) || order.count(w)) continue;
        order.emplace(w, static_cast<int>(visit.size()));
        visit.push_back(w);
      }
    }
  }
  auto local = [&](int w) -> int {
    if (w == kBeyondEdge) return kBeyondEdge;
    if (w < 0 || (subset && !(*subset)[w])) return kNoEdge;
    return order.at(w);
  };
  std::ostringstream os;
  for (int v : visit) {
    const auto& node = g.nodes[v];
    os << node.weight.str() << '|';
    for (int i = 0; i < g.rank(); ++i) os << node.eps[i] << ',' << node.phi[i] << ':' << local(g.f(v, i)) << ',' << local(g.e(v, i)) << ';';
    os << '\n';
  }
  return os.str();
}

std::vector<std::pair<WeightVector, int>> weight_counts(const CrystalGraph& g) {
  std::map<WeightVector, int> counts;
  for (const auto& node : g.nodes) ++counts[node.weight];
  return {counts.begin(), counts.end()};
}

}  // namespace kmcrystal
