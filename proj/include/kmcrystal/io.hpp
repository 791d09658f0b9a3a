#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kmcrystal/modified.hpp"
#include "kmcrystal/series.hpp"

namespace kmcrystal {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCrystalSchema = "kmcrystal.crystal/1";
inline constexpr const char* kSeriesSchema = "kmcrystal.series/1";
inline constexpr const char* kVerifySchema = "kmcrystal.verify/1";
inline constexpr const char* kClassifySchema = "kmcrystal.classify/1";

Json crystal_to_json(const CrystalGraph& g);
CrystalGraph crystal_from_json(const Json& j);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes);

/// Text identifying a generation request: GCM, origin, orientation, depth.
std::string cache_key(const CartanData& cd, const WeightVector& origin, Orientation orientation,
                      std::optional<int> depth_limit);

/// KMCRYSTAL_CACHE_DIR if set, else $XDG_CACHE_HOME/kmcrystal, else
/// ~/.cache/kmcrystal.
std::filesystem::path default_cache_dir();

/// On-disk store of generated crystals, one JSON file per request. Writes go
/// to a temporary file that is renamed into place. A disabled cache (no
/// directory) always generates.
class CrystalCache {
 public:
  explicit CrystalCache(std::optional<std::filesystem::path> dir = std::nullopt, std::ostream* log = nullptr);

  std::shared_ptr<const CrystalGraph> highest(const CartanData& cd, const WeightVector& lambda,
                                              std::optional<int> depth_limit = std::nullopt, int threads = 1);
  std::shared_ptr<const CrystalGraph> lowest(const CartanData& cd, const WeightVector& nu,
                                             std::optional<int> depth_limit = std::nullopt, int threads = 1);

  int hits() const noexcept { return hits_; }
  int misses() const noexcept { return misses_; }

 private:
  std::shared_ptr<const CrystalGraph> fetch(const CartanData& cd, const WeightVector& origin, Orientation o,
                                            std::optional<int> depth_limit, int threads);

  std::optional<std::filesystem::path> dir_;
  std::ostream* log_;
  int hits_ = 0;
  int misses_ = 0;
};

struct DotOptions {
  std::string name = "crystal";
  std::vector<std::string> node_labels;  ///< first label line per node; empty = min word or node id
  std::vector<int> node_group;           ///< fill color index per node, -1 = none
};

/// DOT graph: nodes labeled by name and weight, f-edges labeled by color.
std::string to_dot(const CrystalGraph& g, const DotOptions& options = {});

/// Labels such as "u⊗b[14]" for the nodes of a tensor product: u for the
/// generator of a factor, b[id] otherwise, t for a marker.
std::vector<std::string> tensor_labels(const TensorProduct& product);

/// Tensor crystal of a series with nodes colored by the strict jump that
/// first brings them into the filtration.
std::string series_dot(const CartanData& cd, const SeriesResult& series);

Json series_report(const CartanData& cd, const SeriesResult& series, OrderMode order);
Json verify_report(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                   const MultiplicityReport& report);
Json classify_report(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu,
                     const AffineClassification& c);

/// BigInt as a JSON number when it fits in 64 bits, else a decimal string.
Json big_to_json(const BigInt& x);

}  // namespace kmcrystal
