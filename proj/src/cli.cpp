#include "kmcrystal/cli.hpp"

#include <map>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "kmcrystal/io.hpp"

namespace kmcrystal {

namespace {

// Display width of UTF-8 text, one column per code point.
std::size_t columns(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], columns(row[k]));
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      line += row[k];
      if (k + 1 < row.size()) line += std::string(width[k] - columns(row[k]) + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
  return os.str();
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

struct Context {
  const JobSpec& spec;
  CartanData cd;
  CrystalCache cache;
  std::ostream& out;

  std::optional<int> depth() const { return spec.depth; }

  std::shared_ptr<const CrystalGraph> crystal(const WeightVector& w) {
    if (is_dominant(cd, w)) return cache.highest(cd, w, depth(), spec.threads);
    if (is_antidominant(cd, w)) return cache.lowest(cd, w, depth(), spec.threads);
    throw Error(ErrorKind::NotDominant, w.str() + " is neither dominant nor antidominant");
  }
};

void require_output(const JobSpec& spec, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (spec.output == a) return;
  throw UsageError("output '" + spec.output + "' is not available for " + spec.command);
}

WeightVector required_weight(const CartanData& cd, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing --") + flag);
  return parse_weight(cd, text);
}

void cmd_crystal(Context& c) {
  require_output(c.spec, {"table", "json", "dot"});
  const auto g = c.crystal(required_weight(c.cd, c.spec.lambda, "lambda"));
  const auto words = min_words(*g);
  if (c.spec.output == "dot") {
    c.out << to_dot(*g);
  } else if (c.spec.output == "json") {
    Json j = crystal_to_json(*g);
    j.erase("paths");
    Json w = Json::array();
    for (const auto& word : words) w.push_back(format_word(c.cd, word));
    j["min_words"] = std::move(w);
    c.out << render_json(j);
  } else {
    std::vector<std::vector<std::string>> rows{{"id", "min_word", "weight", "eps", "phi"}};
    for (const auto& node : g->nodes) {
      rows.push_back({std::to_string(node.id), format_word(c.cd, words[node.id]), weight_name(c.cd, node.weight),
                      join_ints(node.eps), join_ints(node.phi)});
    }
    c.out << render_table(rows);
  }
}

void cmd_tensor(Context& c) {
  require_output(c.spec, {"table", "json", "dot"});
  const auto left = c.crystal(required_weight(c.cd, c.spec.lambda, "lambda"));
  const auto right = c.crystal(required_weight(c.cd, c.spec.mu, "mu"));
  const TensorProduct p = tensor_crystal(c.cd, {left, right});
  const auto labels = tensor_labels(p);
  if (c.spec.output == "dot") {
    DotOptions opt;
    opt.name = "tensor";
    opt.node_labels = labels;
    c.out << to_dot(p.graph, opt);
    return;
  }
  std::vector<bool> maximal(static_cast<std::size_t>(p.graph.size()), false);
  for (int v : maximal_vectors(p.graph)) maximal[v] = true;
  if (c.spec.output == "json") {
    Json j = crystal_to_json(p.graph);
    j.erase("paths");
    j["labels"] = labels;
    j["maximal"] = maximal_vectors(p.graph);
    c.out << render_json(j);
  } else {
    std::vector<std::vector<std::string>> rows{{"id", "element", "weight", "eps", "phi", "maximal"}};
    for (const auto& node : p.graph.nodes) {
      rows.push_back({std::to_string(node.id), labels[node.id], weight_name(c.cd, node.weight), join_ints(node.eps),
                      join_ints(node.phi), maximal[node.id] ? "yes" : ""});
    }
    c.out << render_table(rows);
  }
}

void cmd_order(Context& c) {
  require_output(c.spec, {"table", "json"});
  const OrderMode mode = order_mode_from_string(c.spec.order_mode);
  const auto g = c.crystal(required_weight(c.cd, c.spec.lambda, "lambda"));
  const auto words = min_words(*g);
  const auto chain = descending(*g, make_order(*g, mode));
  if (c.spec.output == "json") {
    Json items = Json::array();
    for (int v : chain) {
      items.push_back({{"min_word", format_word(c.cd, words[v])}, {"weight", weight_name(c.cd, g->nodes[v].weight)}});
    }
    c.out << render_json({{"schema", "kmcrystal.order/1"},
                          {"type", c.cd.name},
                          {"lambda", weight_name(c.cd, g->origin_weight)},
                          {"order", to_string(mode)},
                          {"descending", std::move(items)}});
  } else {
    std::vector<std::vector<std::string>> rows{{"rank", "min_word", "weight", "depth"}};
    int rank = 0;
    for (int v : chain) {
      rows.push_back({std::to_string(rank++), format_word(c.cd, words[v]), weight_name(c.cd, g->nodes[v].weight),
                      std::to_string(g->depth_sum(v))});
    }
    c.out << render_table(rows);
  }
}

void cmd_series(Context& c) {
  require_output(c.spec, {"table", "json", "dot"});
  const OrderMode mode = order_mode_from_string(c.spec.order_mode);
  const WeightVector lambda = required_weight(c.cd, c.spec.lambda, "lambda");
  const WeightVector mu = required_weight(c.cd, c.spec.mu, "mu");
  if (!c.cd.is_finite()) throw Error(ErrorKind::NotFinite, "series needs complete crystals of a finite type");
  auto left = c.cache.highest(c.cd, lambda, std::nullopt, c.spec.threads);
  auto right = c.cache.highest(c.cd, mu, std::nullopt, c.spec.threads);
  const NodeLess less = make_order(*right, mode);
  const SeriesResult s = filtration_from_graphs(c.cd, left, right, less);
  if (c.spec.output == "dot") {
    c.out << series_dot(c.cd, s);
  } else if (c.spec.output == "json") {
    c.out << render_json(series_report(c.cd, s, mode));
  } else {
    const Json r = series_report(c.cd, s, mode);
    std::vector<std::vector<std::string>> rows{{"pivot", "pivot_weight", "factor", "support"}};
    for (const auto& f : r["factors"]) {
      rows.push_back({f["pivot_min_word"].get<std::string>(), f["pivot_weight"].get<std::string>(),
                      f["factor_weight"].get<std::string>(), std::to_string(f["support_size"].get<int>())});
    }
    c.out << render_table(rows);
  }
}

void cmd_lr(Context& c) {
  require_output(c.spec, {"table", "json"});
  const WeightVector lambda = required_weight(c.cd, c.spec.lambda, "lambda");
  const WeightVector mu = required_weight(c.cd, c.spec.mu, "mu");
  const auto factors = lr_decompose(c.cd, lambda, mu);
  std::map<WeightVector, int> counts;
  for (const auto& w : factors) ++counts[w];
  std::optional<bool> oracle;
  if (c.cd.name.size() >= 2 && c.cd.name[0] == 'A' && c.cd.name.back() != '~') {
    oracle = lr_oracle_type_a(c.cd.rank(), lambda, mu) == factors;
  }
  if (c.spec.output == "json") {
    Json items = Json::array();
    for (const auto& [w, n] : counts) {
      items.push_back({{"weight", weight_name(c.cd, w)}, {"multiplicity", n}, {"dimension", big_to_json(weyl_dimension(c.cd, w))}});
    }
    Json j = {{"schema", "kmcrystal.lr/1"},
              {"type", c.cd.name},
              {"lambda", weight_name(c.cd, lambda)},
              {"mu", weight_name(c.cd, mu)},
              {"factors", std::move(items)}};
    j["tableau_oracle_agrees"] = oracle ? Json(*oracle) : Json(nullptr);
    c.out << render_json(j);
  } else {
    std::vector<std::vector<std::string>> rows{{"weight", "multiplicity", "dimension"}};
    for (const auto& [w, n] : counts) rows.push_back({weight_name(c.cd, w), std::to_string(n), weyl_dimension(c.cd, w).str()});
    c.out << render_table(rows);
  }
}

void cmd_verify(Context& c) {
  require_output(c.spec, {"table", "json"});
  const WeightVector lambda = required_weight(c.cd, c.spec.lambda, "lambda");
  const WeightVector mu = required_weight(c.cd, c.spec.mu, "mu");
  int depth = 1;
  if (c.spec.depth) {
    depth = *c.spec.depth;
  } else if (!c.cd.is_finite()) {
    throw UsageError("--depth is required for non-finite types");
  } else {
    try {
      depth = static_cast<int>(root_coordinates(c.cd, lambda - mu).height()) + 1;
    } catch (const Error&) {
      depth = 1;  // verify_multiplicity reports the weight error
    }
  }
  const auto r = verify_multiplicity(c.cd, mu, lambda, depth, c.spec.threads);
  const Json j = verify_report(c.cd, lambda, mu, r);
  if (c.spec.output == "json") {
    c.out << render_json(j);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : j.items()) {
      if (k != "schema") rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
    }
    c.out << render_table(rows);
  }
}

void cmd_classify(Context& c) {
  require_output(c.spec, {"table", "json"});
  const WeightVector lambda = required_weight(c.cd, c.spec.lambda, "lambda");
  const WeightVector mu = required_weight(c.cd, c.spec.mu, "mu");
  const Json j = classify_report(c.cd, lambda, mu, classify_affine(c.cd, lambda, mu));
  if (c.spec.output == "json") {
    c.out << render_json(j);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : j.items()) {
      if (k != "schema") rows.push_back({k, v.get<std::string>()});
    }
    c.out << render_table(rows);
  }
}

}  // namespace

WeightVector parse_weight(const CartanData& cd, const std::string& text) {
  static const std::regex pattern(R"(^\s*(-?\d+(\s*,\s*-?\d+)*)\s*(:\s*(-?\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError("malformed weight '" + text + "'");
  std::vector<std::int64_t> coords;
  std::stringstream ss(m[1].str());
  for (std::string item; std::getline(ss, item, ',');) coords.push_back(std::stoll(item));
  if (static_cast<int>(coords.size()) != cd.rank()) {
    throw UsageError("weight '" + text + "' has " + std::to_string(coords.size()) + " entries, expected " +
                     std::to_string(cd.rank()));
  }
  std::int64_t delta = 0;
  if (m[4].matched) {
    if (!cd.is_affine()) throw UsageError("a delta coordinate is only meaningful for affine types");
    delta = std::stoll(m[4].str());
  }
  return WeightVector::from_ints(coords, delta);
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  std::optional<Context> ctx;
  try {
    CartanData cd = parse_cartan(spec.type_string);
    std::optional<std::filesystem::path> dir;
    if (!spec.no_cache) dir = spec.cache_dir ? std::filesystem::path(*spec.cache_dir) : default_cache_dir();
    if (spec.threads < 1) throw UsageError("--threads must be at least 1");
    if (spec.depth && *spec.depth < 0) throw UsageError("--depth must be nonnegative");
    ctx.emplace(Context{spec, std::move(cd), CrystalCache(dir, &err), out});
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  static const std::map<std::string, void (*)(Context&)> commands = {
      {"crystal", cmd_crystal}, {"tensor", cmd_tensor}, {"order", cmd_order},      {"series", cmd_series},
      {"lr", cmd_lr},           {"verify-mult", cmd_verify}, {"classify", cmd_classify}};
  const auto it = commands.find(spec.command);
  if (it == commands.end()) {
    err << "usage error: unknown command '" << spec.command << "'\n";
    return kExitUsage;
  }
  try {
    it->second(*ctx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crystal bases, composition series and modified-algebra multiplicities"};
  app.require_subcommand(1, 1);
  JobSpec spec;
  std::optional<std::string> cache_dir;

  auto add = [&](const std::string& name, const std::string& help, bool with_mu, bool with_order) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("type", spec.type_string, "Cartan type (A2, G2, A1~, ...) or JSON matrix")->required();
    sub->add_option("--lambda", spec.lambda, "weight as comma-separated <h_i,.> values, optional :delta");
    if (with_mu) sub->add_option("--mu", spec.mu, "second weight, same format");
    sub->add_option("--depth", spec.depth, "truncation depth (required for affine types)");
    if (with_order) {
      sub->add_option("--order", spec.order_mode, "order on B(mu)")->check(CLI::IsMember({"minword", "weightgraded"}));
    }
    sub->add_option("--output", spec.output, "output format")->check(CLI::IsMember({"json", "dot", "table"}));
    sub->add_option("--cache-dir", cache_dir, "crystal cache directory");
    sub->add_flag("--no-cache", spec.no_cache, "do not read or write the cache");
    sub->add_option("--threads", spec.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->callback([&spec, name] { spec.command = name; });
  };
  add("crystal", "highest (or lowest) weight crystal", false, false);
  add("tensor", "tensor product crystal B(lambda) (x) B(mu)", true, false);
  add("order", "descending chain of B(lambda)", false, true);
  add("series", "composition series of V(lambda) (x) V(mu)", true, true);
  add("lr", "tensor product decomposition", true, false);
  add("verify-mult", "count maximal vectors in the modified crystal", true, false);
  add("classify", "affine level classification of V(lambda) (x) V(-mu)", true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  spec.cache_dir = cache_dir;
  return run(spec, out, err);
}

}  // namespace kmcrystal
