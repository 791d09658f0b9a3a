#include "kmcrystal/io.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <unistd.h>

namespace kmcrystal {

namespace {

Json weight_json(const WeightVector& w) { return Json(weight_to_ints(w)); }

WeightVector weight_from_json(const Json& j) { return weight_from_ints(j.get<std::vector<std::int64_t>>()); }

Orientation orientation_from_string(const std::string& s) {
  if (s == "highest") return Orientation::Highest;
  if (s == "lowest") return Orientation::Lowest;
  if (s == "tensor") return Orientation::Tensor;
  throw Error(ErrorKind::CacheError, "unknown orientation '" + s + "'");
}

Json path_json(const Path& p) {
  Json segs = Json::array();
  for (const auto& s : p.segments()) {
    segs.push_back(Json::array({s.length.numerator(), s.length.denominator(), s.direction}));
  }
  return segs;
}

Path path_from_json(const Json& j) {
  std::vector<PathSegment> segs;
  for (const auto& s : j) {
    segs.push_back({Rational(s.at(0).get<std::int64_t>(), s.at(1).get<std::int64_t>()),
                    s.at(2).get<std::vector<std::int64_t>>()});
  }
  return Path(std::move(segs));
}

// Edge colors by index, fill colors by filtration jump.
const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr int kPaletteSize = 10;

const char* const kFill[] = {"#aec7e8", "#ff9896", "#98df8a", "#c5b0d5", "#ffbb78",
                             "#c49c94", "#f7b6d2", "#c7c7c7", "#dbdb8d", "#9edae5"};

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Json crystal_to_json(const CrystalGraph& g) {
  Json j;
  j["schema"] = kCrystalSchema;
  j["cartan"] = {{"name", g.cartan.name}, {"matrix", g.cartan.matrix}};
  j["origin"] = weight_json(g.origin_weight);
  j["orientation"] = to_string(g.orientation);
  j["truncation_depth"] = g.truncation_depth ? Json(*g.truncation_depth) : Json(nullptr);
  j["complete"] = g.complete;
  Json nodes = Json::array();
  for (const auto& node : g.nodes) {
    Json f = Json::array(), e = Json::array();
    for (int i = 0; i < g.rank(); ++i) {
      f.push_back(g.f(node.id, i));
      e.push_back(g.e(node.id, i));
    }
    nodes.push_back({{"id", node.id},
                     {"weight", weight_json(node.weight)},
                     {"depth", node.depth.coords},
                     {"eps", node.eps},
                     {"phi", node.phi},
                     {"f", f},
                     {"e", e}});
  }
  j["nodes"] = std::move(nodes);
  Json paths = Json::array();
  for (const auto& p : g.paths) paths.push_back(path_json(p));
  j["paths"] = std::move(paths);
  j["components"] = g.components;
  return j;
}

CrystalGraph crystal_from_json(const Json& j) {
  try {
    if (j.at("schema").get<std::string>() != kCrystalSchema) {
      throw Error(ErrorKind::CacheError, "unsupported schema " + j.at("schema").dump());
    }
    CrystalGraph g;
    const auto name = j.at("cartan").at("name").get<std::string>();
    const auto matrix = j.at("cartan").at("matrix").get<IntMatrix>();
    g.cartan = name == "custom" ? validate_gcm(matrix) : cartan_from_name(name);
    if (g.cartan.matrix != matrix) throw Error(ErrorKind::CacheError, "Cartan matrix does not match its name");
    g.origin_weight = weight_from_json(j.at("origin"));
    g.orientation = orientation_from_string(j.at("orientation").get<std::string>());
    if (!j.at("truncation_depth").is_null()) g.truncation_depth = j.at("truncation_depth").get<int>();
    g.complete = j.at("complete").get<bool>();
    const int n = g.rank();
    for (const auto& node : j.at("nodes")) {
      CrystalNode c;
      c.id = node.at("id").get<int>();
      if (c.id != g.size()) throw Error(ErrorKind::CacheError, "node ids are not consecutive");
      c.weight = weight_from_json(node.at("weight"));
      c.depth = RootVector(node.at("depth").get<std::vector<std::int64_t>>());
      c.eps = node.at("eps").get<std::vector<int>>();
      c.phi = node.at("phi").get<std::vector<int>>();
      const auto f = node.at("f").get<std::vector<int>>();
      const auto e = node.at("e").get<std::vector<int>>();
      if (static_cast<int>(f.size()) != n || static_cast<int>(e.size()) != n) {
        throw Error(ErrorKind::CacheError, "edge table has the wrong width");
      }
      g.f_edges.insert(g.f_edges.end(), f.begin(), f.end());
      g.e_edges.insert(g.e_edges.end(), e.begin(), e.end());
      g.nodes.push_back(std::move(c));
    }
    for (const auto& p : j.at("paths")) g.paths.push_back(path_from_json(p));
    g.components = j.at("components").get<std::vector<std::vector<int>>>();
    return g;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::CacheError, std::string("malformed crystal JSON: ") + e.what());
  }
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_key(const CartanData& cd, const WeightVector& origin, Orientation orientation,
                      std::optional<int> depth_limit) {
  std::ostringstream os;
  os << Json(cd.matrix).dump() << '|' << origin.str() << '|' << to_string(orientation) << '|'
     << (depth_limit ? std::to_string(*depth_limit) : "none");
  return os.str();
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("KMCRYSTAL_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "kmcrystal";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "kmcrystal";
  }
  return std::filesystem::temp_directory_path() / "kmcrystal";
}

CrystalCache::CrystalCache(std::optional<std::filesystem::path> dir, std::ostream* log)
    : dir_(std::move(dir)), log_(log) {}

std::shared_ptr<const CrystalGraph> CrystalCache::highest(const CartanData& cd, const WeightVector& lambda,
                                                          std::optional<int> depth_limit, int threads) {
  return fetch(cd, lambda, Orientation::Highest, depth_limit, threads);
}

std::shared_ptr<const CrystalGraph> CrystalCache::lowest(const CartanData& cd, const WeightVector& nu,
                                                         std::optional<int> depth_limit, int threads) {
  return fetch(cd, nu, Orientation::Lowest, depth_limit, threads);
}

std::shared_ptr<const CrystalGraph> CrystalCache::fetch(const CartanData& cd, const WeightVector& origin,
                                                        Orientation o, std::optional<int> depth_limit,
                                                        int threads) {
  auto generate = [&] {
    return o == Orientation::Highest ? generate_highest(cd, origin, depth_limit, threads)
                                     : generate_lowest(cd, origin, depth_limit, threads);
  };
  if (!dir_) return share(generate());

  const std::string key = cache_key(cd, origin, o, depth_limit);
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
  const auto file = *dir_ / name.str();

  if (std::ifstream in(file); in) {
    try {
      const Json j = Json::parse(in);
      if (j.at("key").get<std::string>() == key) {
        CrystalGraph g = crystal_from_json(j.at("crystal"));
        g.cartan = cd;
        ++hits_;
        if (log_) *log_ << "cache hit: " << file.string() << '\n';
        return share(std::move(g));
      }
    } catch (const std::exception& e) {
      if (log_) *log_ << "cache entry ignored: " << file.string() << ": " << e.what() << '\n';
    }
  }

  ++misses_;
  CrystalGraph g = generate();
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  if (ec) throw Error(ErrorKind::CacheError, "cannot create " + dir_->string() + ": " + ec.message());
  const Json j = {{"key", key}, {"crystal", crystal_to_json(g)}};
  auto tmp = file;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << j.dump();
    if (!out) throw Error(ErrorKind::CacheError, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::CacheError, "cannot rename into " + file.string());
  }
  return share(std::move(g));
}

std::string to_dot(const CrystalGraph& g, const DotOptions& options) {
  const CartanData& cd = g.cartan;
  std::vector<MinWord> words;
  if (options.node_labels.empty() && g.orientation != Orientation::Tensor) words = min_words(g);

  std::ostringstream os;
  os << "digraph " << options.name << " {\n";
  os << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (const auto& node : g.nodes) {
    const int v = node.id;
    std::string head;
    if (!options.node_labels.empty()) {
      head = options.node_labels[v];
    } else if (!words.empty()) {
      head = format_word(cd, words[v]);
    } else {
      head = "[" + std::to_string(v) + "]";
    }
    os << "  n" << v << " [label=\"" << dot_escape(head) << "\\n" << dot_escape(weight_name(cd, node.weight)) << '"';
    bool truncated = false;
    for (int i = 0; i < g.rank(); ++i) truncated = truncated || g.f(v, i) == kBeyondEdge || g.e(v, i) == kBeyondEdge;
    if (truncated) os << ", style=dashed";
    if (!options.node_group.empty() && options.node_group[v] >= 0) {
      os << ", style=" << (truncated ? "\"filled,dashed\"" : "filled") << ", fillcolor=\""
         << kFill[options.node_group[v] % kPaletteSize] << '"';
    }
    os << "];\n";
  }
  for (int v = 0; v < g.size(); ++v) {
    for (int i = 0; i < g.rank(); ++i) {
      const int w = g.f(v, i);
      if (w < 0) continue;
      os << "  n" << v << " -> n" << w << " [label=\"" << cd.label(i) << "\", color=\"" << kPalette[i % kPaletteSize]
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::vector<std::string> tensor_labels(const TensorProduct& product) {
  std::vector<std::string> labels;
  labels.reserve(product.graph.components.size());
  for (const auto& comps : product.graph.components) {
    std::string s;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      if (k) s += "⊗";
      if (std::holds_alternative<TMarker>(product.factors[k])) {
        s += "t";
      } else if (comps[k] == 0) {
        s += "u";
      } else {
        s += "b[" + std::to_string(comps[k]) + "]";
      }
    }
    labels.push_back(std::move(s));
  }
  return labels;
}

std::string series_dot(const CartanData& cd, const SeriesResult& series) {
  const CrystalGraph& g = series.product.graph;
  DotOptions opt;
  opt.name = "series";
  opt.node_labels = tensor_labels(series.product);
  opt.node_group.assign(static_cast<std::size_t>(g.size()), -1);
  int jump = -1;
  for (const auto& step : series.steps) {
    if (step.quotient) ++jump;
    for (int v : step.support) {
      if (opt.node_group[v] < 0) opt.node_group[v] = std::max(jump, 0);
    }
  }
  (void)cd;
  return to_dot(g, opt);
}

Json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(x));
  }
  return Json(x.str());
}

Json series_report(const CartanData& cd, const SeriesResult& series, OrderMode order) {
  const CrystalGraph& right = *series.right;
  Json factors = Json::array();
  for (const auto& f : series.factors) {
    factors.push_back({{"pivot_min_word", format_word(cd, min_word(right, f.pivot))},
                       {"pivot_weight", weight_name(cd, right.nodes[f.pivot].weight)},
                       {"factor_weight", weight_name(cd, f.highest_weight)},
                       {"support_size", f.support_size}});
  }
  return {{"schema", kSeriesSchema},
          {"type", cd.name},
          {"lambda", weight_name(cd, series.left->origin_weight)},
          {"mu", weight_name(cd, right.origin_weight)},
          {"order", to_string(order)},
          {"factors", std::move(factors)}};
}

Json verify_report(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                   const MultiplicityReport& report) {
  return {{"schema", kVerifySchema},
          {"type", cd.name},
          {"lambda", weight_name(cd, lambda)},
          {"mu", weight_name(cd, mu)},
          {"depth", report.depth},
          {"count_direct", report.count_direct},
          {"count_closed_form", report.count_closed_form},
          {"oracle", big_to_json(report.oracle)},
          {"agree", report.agree()}};
}

Json classify_report(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                     const AffineClassification& c) {
  return {{"schema", kClassifySchema},
          {"type", cd.name},
          {"lambda", weight_name(cd, lambda)},
          {"mu", weight_name(cd, mu)},
          {"level", to_string(c.level)},
          {"case", to_string(c.level_case)},
          {"W", c.W},
          {"N", c.N},
          {"M", c.M},
          {"U", c.U},
          {"statement", c.statement}};
}

}  // namespace kmcrystal
