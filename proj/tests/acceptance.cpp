// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "support.hpp"

using namespace kmtest;

namespace {

// Invariant ledger fed by every graph the suite builds.
struct Invariants {
  int graphs = 0;
  int series = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  void crystal(const CrystalGraph& g, const std::string& what) {
    const auto t0 = std::chrono::steady_clock::now();
    ++graphs;
    for (const auto& v : crystal_violations(g)) failures.push_back(what + ": " + v);
    seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  void filtration(const CartanData& cd, const SeriesResult& s, const std::string& what) {
    const auto t0 = std::chrono::steady_clock::now();
    ++series;
    for (const auto& v : series_violations(cd, s)) failures.push_back(what + ": " + v);
    seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    crystal(s.product.graph, what + " product");
  }
};

Invariants inv;

struct Outcome {
  bool ok;
  std::string detail;
};

int failed = 0;

void criterion(int n, const char* name, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r{false, ""};
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit <= 0 || s < limit;
  const bool pass = r.ok && in_time;
  if (!pass) ++failed;
  char timing[96];
  if (limit > 0) {
    std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", s, limit);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s", s);
  }
  std::cout << (pass ? "PASS" : "FAIL") << "  " << n << ". " << name << ": " << r.detail << " (" << timing
            << (in_time ? "" : ", over time") << ")" << std::endl;
}

std::string words_str(const std::vector<std::string>& ws) {
  std::string s;
  for (const auto& w : ws) s += (s.empty() ? "" : " ") + w;
  return s;
}

// Semistandard tableaux of shape (2,1) over {1,2,3} with the signature rule
// on the Japanese reading word (right column first, each column top down).
// Written from scratch as an independent model of B(Lambda_1 + Lambda_2).
struct Tableau {
  int a, b, c;  // first row a b, second row c
  auto operator<=>(const Tableau&) const = default;
  std::string str() const { return "(" + std::to_string(a) + std::to_string(b) + "," + std::to_string(c) + ")"; }
};

std::optional<Tableau> tableau_f(const Tableau& t, int i) {  // i in {1, 2}
  std::array<int, 3> word{t.b, t.a, t.c};
  std::vector<int> unmatched;  // positions of uncancelled '+'
  for (int k = 0; k < 3; ++k) {
    if (word[k] == i + 1 && !unmatched.empty()) {
      unmatched.pop_back();  // a '+' followed by a '-' cancels
    } else if (word[k] == i) {
      unmatched.push_back(k);
    }
  }
  if (unmatched.empty()) return std::nullopt;
  ++word[unmatched.front()];
  Tableau r{word[1], word[0], word[2]};
  if (!(r.a <= r.b && r.a < r.c)) throw std::logic_error("tableau rule left the semistandard set");
  return r;
}

// Lexicographically least f-word for every tableau, by enumerating all words.
std::map<Tableau, std::string> tableau_min_words() {
  std::map<Tableau, std::vector<int>> best;
  std::function<void(const Tableau&, std::vector<int>&)> go = [&](const Tableau& t, std::vector<int>& w) {
    // w lists operators in application order; the word reads them reversed.
    const std::vector<int> word(w.rbegin(), w.rend());
    auto it = best.find(t);
    if (it == best.end() || word < it->second) best[t] = word;
    for (int i = 1; i <= 2; ++i) {
      if (auto n = tableau_f(t, i)) {
        w.push_back(i);
        go(*n, w);
        w.pop_back();
      }
    }
  };
  std::vector<int> w;
  go({1, 1, 2}, w);
  std::map<Tableau, std::string> out;
  for (const auto& [t, word] : best) {
    std::string s = "(";
    for (std::size_t k = 0; k < word.size(); ++k) s += (k ? "," : "") + std::to_string(word[k]);
    out[t] = s + ")";
  }
  return out;
}

Tableau parse_tableau(const std::string& s) {  // "(12,3)"
  return {s[1] - '0', s[2] - '0', s[4] - '0'};
}

std::vector<std::string> words_of(const CartanData& cd, const CrystalGraph& g, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int v : ids) out.push_back(format_word(cd, min_word(g, v)));
  return out;
}

// Dominant weights with dim V(lambda) <= bound, using monotonicity of the
// Weyl dimension in each coordinate.
std::vector<WeightVector> dominant_upto(const CartanData& cd, const BigInt& bound) {
  std::vector<WeightVector> out;
  std::vector<std::int64_t> c(static_cast<std::size_t>(cd.rank()), 0);
  std::function<void(int)> go = [&](int k) {
    if (k == cd.rank()) {
      out.push_back(W(c));
      return;
    }
    for (c[k] = 0;; ++c[k]) {
      auto probe = c;
      std::fill(probe.begin() + k + 1, probe.end(), 0);
      if (weyl_dimension(cd, W(probe)) > bound) break;
      go(k + 1);
    }
    c[k] = 0;
  };
  go(0);
  std::erase_if(out, [&](const WeightVector& w) { return weyl_dimension(cd, w) > bound; });
  return out;
}

std::multiset<WeightVector> factor_set(const std::vector<SeriesFactor>& fs) {
  std::multiset<WeightVector> out;
  for (const auto& f : fs) out.insert(f.highest_weight);
  return out;
}

// Every f-word from the straight path, depth first; for each path keep the
// least word. Gives up once `cap` words have been visited.
struct BruteWords {
  std::unordered_map<std::string, MinWord> best;
  std::size_t words = 0;
  std::size_t cap = 0;
};

bool enumerate_words(const CartanData& cd, const Path& p, bool lower, std::vector<int>& applied, BruteWords& out) {
  if (++out.words > out.cap) return false;
  const MinWord word(applied.rbegin(), applied.rend());
  auto [it, fresh] = out.best.try_emplace(p.key(), word);
  if (!fresh && word < it->second) it->second = word;
  for (int j = 0; j < cd.rank(); ++j) {
    auto q = lower ? f_op(cd, p, j) : e_op(cd, p, j);
    if (!q) continue;
    applied.push_back(j);
    const bool ok = enumerate_words(cd, *q, lower, applied, out);
    applied.pop_back();
    if (!ok) return false;
  }
  return true;
}

// The same minimum without listing words: layer by layer over paths, the
// least word of q is the least [j] + word(p) over every p with q = f_j p.
std::unordered_map<std::string, MinWord> layered_min_words(const CartanData& cd, const Path& start, bool lower) {
  std::unordered_map<std::string, MinWord> best{{start.key(), {}}};
  std::map<std::string, Path> layer{{start.key(), start}};
  while (!layer.empty()) {
    std::map<std::string, Path> next;
    std::unordered_map<std::string, MinWord> cand;
    for (const auto& [key, p] : layer) {
      for (int j = 0; j < cd.rank(); ++j) {
        auto q = lower ? f_op(cd, p, j) : e_op(cd, p, j);
        if (!q) continue;
        MinWord w{j};
        const auto& tail = best.at(key);
        w.insert(w.end(), tail.begin(), tail.end());
        const std::string qk = q->key();
        auto [it, fresh] = cand.try_emplace(qk, w);
        if (!fresh && w < it->second) it->second = w;
        next.emplace(qk, std::move(*q));
      }
    }
    for (auto& [k, w] : cand) best.emplace(k, std::move(w));
    layer = std::move(next);
  }
  return best;
}

}  // namespace

int main() {
  const auto a2 = cartan_from_name("A2");
  const auto tab_words = tableau_min_words();
  auto word_of = [&](const std::string& t) { return tab_words.at(parse_tableau(t)); };

  criterion(1, "min words and order on B(Λ1+Λ2) of A2", 1, [&]() -> Outcome {
    const auto g = generate_highest(a2, W({1, 1}));
    inv.crystal(g, "B(Λ1+Λ2)");
    const auto desc = words_of(a2, g, descending(g, make_order(g, OrderMode::MinWord)));
    const std::vector<std::string> chain{"(11,2)", "(12,2)", "(11,3)", "(12,3)", "(13,2)", "(22,3)", "(13,3)", "(23,3)"};
    std::vector<std::string> expected;
    for (const auto& t : chain) expected.push_back(word_of(t));
    const std::set<std::string> want{"()", "(1)", "(2)", "(1,2)", "(2,1)", "(1,1,2)", "(2,2,1)", "(1,2,2,1)"};
    const bool ok = g.size() == 8 && std::set<std::string>(desc.begin(), desc.end()) == want && desc == expected &&
                    word_of("(13,3)") == "(2,2,1)" && word_of("(22,3)") == "(1,1,2)";
    return {ok, std::to_string(g.size()) + " elements, chain " + words_str(desc)};
  });

  criterion(2, "composition series of V(Λ1)⊗V(Λ1+Λ2) for A2", 1, [&]() -> Outcome {
    const auto s = filtration(a2, W({1, 0}), W({1, 1}));
    inv.filtration(a2, s, "series Λ1 ⊗ Λ1+Λ2");
    std::vector<int> pivots;
    std::string names;
    for (const auto& f : s.factors) {
      pivots.push_back(f.pivot);
      names += (names.empty() ? "" : ", ") + weight_name(a2, f.highest_weight);
    }
    const auto dom = dominant_elements(a2, W({1, 0}), *s.right);
    const std::vector<std::string> want{word_of("(11,2)"), word_of("(12,2)"), word_of("(12,3)")};
    const bool ok = s.factors.size() == 3 && s.factors[0].highest_weight == W({2, 1}) &&
                    s.factors[1].highest_weight == W({0, 2}) && s.factors[2].highest_weight == W({1, 0}) &&
                    words_of(a2, *s.right, pivots) == want && words_of(a2, *s.right, dom) == want;
    return {ok, "factors " + names + ", pivots " + words_str(words_of(a2, *s.right, pivots))};
  });

  criterion(3, "dimension identity, A1 A2 A3 B2 G2, dims <= 300", 60, [&]() -> Outcome {
    long pairs = 0, bad = 0;
    for (const char* name : {"A1", "A2", "A3", "B2", "G2"}) {
      const auto cd = cartan_from_name(name);
      const auto ws = dominant_upto(cd, 300);
      std::vector<std::shared_ptr<const CrystalGraph>> graphs;
      for (const auto& mu : ws) {
        graphs.push_back(share(generate_highest(cd, mu)));
        inv.crystal(*graphs.back(), std::string(name) + " B(" + mu.str() + ")");
      }
      for (const auto& lambda : ws) {
        const BigInt dl = weyl_dimension(cd, lambda);
        for (std::size_t k = 0; k < ws.size(); ++k) {
          BigInt sum = 0;
          for (int b : dominant_elements(cd, lambda, *graphs[k])) sum += weyl_dimension(cd, lambda + graphs[k]->nodes[b].weight);
          ++pairs;
          if (sum != dl * weyl_dimension(cd, ws[k])) ++bad;
        }
      }
    }
    return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches"};
  });

  criterion(4, "lr_decompose = Littlewood-Richardson, A1..A3, product dim <= 1000", 120, [&]() -> Outcome {
    long pairs = 0, bad = 0;
    for (int n = 1; n <= 3; ++n) {
      const auto cd = cartan_from_name("A" + std::to_string(n));
      const auto ws = dominant_upto(cd, 1000);
      for (const auto& lambda : ws) {
        for (const auto& mu : ws) {
          if (weyl_dimension(cd, lambda) * weyl_dimension(cd, mu) > 1000) continue;
          ++pairs;
          auto x = lr_decompose(cd, lambda, mu);
          auto y = lr_oracle_type_a(n, lambda, mu);
          std::sort(y.begin(), y.end());
          if (x != y) ++bad;
        }
      }
    }
    return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches"};
  });

  criterion(5, "greedy min words = exhaustive words, crystals <= 200 nodes", 60, [&]() -> Outcome {
    long crystals = 0, nodes = 0, bad = 0, listed = 0;
    std::size_t words = 0;
    double brute_seconds = 0;
    for (const char* name : {"A1", "A2", "A3", "B2", "G2"}) {
      const auto cd = cartan_from_name(name);
      for (const auto& mu : dominant_upto(cd, 200)) {
        for (bool highest : {true, false}) {
          const auto g = highest ? generate_highest(cd, mu) : generate_lowest(cd, -mu);
          inv.crystal(g, std::string(name) + (highest ? " B(" : " B(-") + mu.str() + ")");
          const auto greedy = min_words(g);
          const auto t0 = std::chrono::steady_clock::now();
          const Path start = straight_path(highest ? mu : -mu);
          BruteWords brute;
          brute.cap = 200000;
          std::vector<int> applied;
          if (enumerate_words(cd, start, highest, applied, brute)) {
            ++listed;
            words += brute.words;
          } else {
            brute.best = layered_min_words(cd, start, highest);
          }
          brute_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          ++crystals;
          nodes += g.size();
          if (brute.best.size() != static_cast<std::size_t>(g.size())) ++bad;
          for (int v = 0; v < g.size(); ++v) {
            auto it = brute.best.find(g.paths[v].key());
            if (it == brute.best.end() || it->second != greedy[v]) ++bad;
          }
        }
      }
    }
    char cost[64];
    std::snprintf(cost, sizeof cost, "%.2f s", brute_seconds);
    return {bad == 0, std::to_string(crystals) + " crystals, " + std::to_string(nodes) + " nodes; " +
                          std::to_string(listed) + " by listing all " + std::to_string(words) + " words, " +
                          std::to_string(crystals - listed) + " by layered minimum over all predecessors; oracle " +
                          cost + ", " + std::to_string(bad) + " mismatches"};
  });

  criterion(6, "maximal-vector counts = weight multiplicities", 120, [&]() -> Outcome {
    long triples = 0, affine = 0, bad = 0, nonzero = 0;
    auto run = [&](const CartanData& cd, const WeightVector& lambda, int max_height) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(cd.rank()), 0);
      std::function<void(int, int)> go = [&](int k, int left) {
        if (k == cd.rank()) {
          WeightVector beta(cd.rank());
          int h = 0;
          for (int i = 0; i < cd.rank(); ++i) {
            beta += Rational(c[i]) * simple_root(cd, i);
            h += static_cast<int>(c[i]);
          }
          const auto r = verify_multiplicity(cd, lambda - beta, lambda, h + 1);
          ++triples;
          if (cd.is_affine()) ++affine;
          if (r.oracle > 0) ++nonzero;
          if (!r.agree()) ++bad;
          return;
        }
        for (c[k] = 0; c[k] <= left; ++c[k]) go(k + 1, left - static_cast<int>(c[k]));
        c[k] = 0;
      };
      go(0, max_height);
    };
    for (const char* name : {"A1", "A2", "B2"}) {
      const auto cd = cartan_from_name(name);
      for (const auto& lambda : dominant_grid(cd, 20, 2)) run(cd, lambda, 3);
    }
    const auto a11 = cartan_from_name("A1~");
    for (const auto& lambda : {W({1, 0}), W({0, 1}), W({2, 0}), W({1, 1})}) run(a11, lambda, 5);
    return {bad == 0 && triples - affine >= 50 && affine > 0,
            std::to_string(triples - affine) + " finite and " + std::to_string(affine) + " A1~ triples (" +
                std::to_string(nonzero) + " nonzero), " + std::to_string(bad) + " disagreements"};
  });

  criterion(7, "factor multisets independent of the order", 0, [&]() -> Outcome {
    struct Case {
      std::string type;
      WeightVector lambda, mu;
    };
    std::vector<Case> cases{{"A2", W({1, 0}), W({1, 1})}};
    std::mt19937 rng(20240607);
    const std::vector<std::string> types{"A2", "A3", "B2", "C3", "G2"};
    while (cases.size() < 11) {
      const auto& t = types[rng() % types.size()];
      const auto cd = cartan_from_name(t);
      std::vector<std::int64_t> l, m;
      for (int i = 0; i < cd.rank(); ++i) {
        l.push_back(static_cast<std::int64_t>(rng() % 3));
        m.push_back(static_cast<std::int64_t>(rng() % 3));
      }
      if (weyl_dimension(cd, W(l)) * weyl_dimension(cd, W(m)) > 2000 || W(m).is_zero()) continue;
      cases.push_back({t, W(l), W(m)});
    }
    int bad = 0;
    std::string listing;
    for (const auto& c : cases) {
      const auto cd = cartan_from_name(c.type);
      const auto a = filtration(cd, c.lambda, c.mu, OrderMode::MinWord);
      const auto b = filtration(cd, c.lambda, c.mu, OrderMode::WeightGraded);
      inv.filtration(cd, a, c.type + " minword");
      inv.filtration(cd, b, c.type + " weightgraded");
      const auto lr = lr_decompose(cd, c.lambda, c.mu);
      if (factor_set(a.factors) != factor_set(b.factors) || factor_set(a.factors) != std::multiset<WeightVector>(lr.begin(), lr.end())) ++bad;
      listing += (listing.empty() ? "" : "; ") + c.type + " " + c.lambda.str() + "⊗" + c.mu.str();
    }
    return {bad == 0, std::to_string(cases.size()) + " cases [" + listing + "], " + std::to_string(bad) + " differ"};
  });

  criterion(8, "tensor rule = path concatenation, rank <= 2, <= 200 nodes", 0, [&]() -> Outcome {
    long pairs = 0, bad = 0;
    for (const char* name : {"A1", "A2", "B2", "G2"}) {
      const auto cd = cartan_from_name(name);
      const auto ws = dominant_upto(cd, 200);
      for (const auto& lambda : ws) {
        for (const auto& mu : ws) {
          if (weyl_dimension(cd, lambda) * weyl_dimension(cd, mu) > 200) continue;
          const auto left = share(generate_highest(cd, lambda));
          const auto right = share(generate_highest(cd, mu));
          const auto p = tensor_crystal(cd, {left, right});
          inv.crystal(p.graph, std::string(name) + " " + lambda.str() + "⊗" + mu.str());
          ++pairs;
          if (!concatenation_mismatches(cd, *left, *right, p).empty()) ++bad;
        }
      }
    }
    return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches"};
  });

  criterion(9, "affine level classification table", 0, [&]() -> Outcome {
    struct Row {
      const char* type;
      WeightVector lambda, mu;
      LevelCase expect;
    };
    const std::vector<Row> rows{
        {"A1~", W({2, 0}), W({1, 0}), LevelCase::Positive},
        {"A1~", W({1, 0}), W({1, 0}), LevelCase::ZeroTrivial},
        {"A1~", W({1, 0}), W({1, 1}), LevelCase::Negative},
        {"A1~", W({1, 0}), W({0, 1}), LevelCase::ZeroNonTrivial},
        {"A1~", W({1, 0}, 1), W({1, 0}), LevelCase::ZeroTrivial},
        {"A1~", W({0, 3}), W({1, 0}), LevelCase::Positive},
        {"A1~", W({0, 0}), W({0, 2}), LevelCase::Negative},
        {"A1~", W({2, 0}), W({1, 1}), LevelCase::ZeroNonTrivial},
        {"A2~", W({1, 1, 0}), W({0, 0, 1}), LevelCase::Positive},
        {"A2~", W({0, 1, 0}), W({0, 0, 1}), LevelCase::ZeroNonTrivial},
        {"A2~", W({1, 0, 0}), W({1, 1, 1}), LevelCase::Negative},
        {"D4~", W({0, 0, 1, 0, 0}), W({1, 1, 0, 0, 0}), LevelCase::ZeroNonTrivial},
        {"D4~", W({0, 0, 1, 0, 0}), W({1, 0, 0, 0, 0}), LevelCase::Positive},
        {"D4~", W({0, 0, 0, 1, 0}), W({0, 0, 0, 1, 0}), LevelCase::ZeroTrivial},
    };
    int bad = 0;
    std::map<std::string, int> seen;
    for (const auto& r : rows) {
      const auto c = classify_affine(cartan_from_name(r.type), r.lambda, r.mu);
      ++seen[to_string(c.level_case)];
      if (c.level_case != r.expect) ++bad;
    }
    std::string tally;
    for (const auto& [k, v] : seen) tally += (tally.empty() ? "" : ", ") + k + " " + std::to_string(v);
    return {bad == 0 && seen.size() == 4, std::to_string(rows.size()) + " pairs (" + tally + "), " +
                                              std::to_string(bad) + " wrong"};
  });

  criterion(10, "structural invariants on every generated graph", 0, [&]() -> Outcome {
    char t[32];
    std::snprintf(t, sizeof t, "%.2f s", inv.seconds);
    std::string first = inv.failures.empty() ? "" : "; first: " + inv.failures.front();
    return {inv.failures.empty() && inv.seconds < 120, std::to_string(inv.graphs) + " graphs and " +
                                                           std::to_string(inv.series) + " filtrations checked in " + t +
                                                           " (limit 120 s), " + std::to_string(inv.failures.size()) +
                                                           " violations" + first};
  });

  return failed == 0 ? 0 : 1;
}
