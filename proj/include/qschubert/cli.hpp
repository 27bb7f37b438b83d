// JSON front end: one function per subcommand plus the on-disk result cache.
// Every result is deterministic: integers and rationals are strings, floats are
// fixed-precision strings, object keys are sorted.
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qschubert/scalar.hpp"

namespace qschubert::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kEngineVersion = "qschubert-1.0.0";

/// Raised when a request exceeds an explicit resource cap.
class CapExceeded : public ValidationError {
 public:
  CapExceeded(const std::string& cap, const std::string& detail)
      : ValidationError(detail), cap_(cap) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

struct Caps {
  long poset = 200000;     // elements of C^q_{m,p}
  long subsets = 100000;   // critical points, binomial(m+p, p)
  long samples = 4000;     // random curves per interpolation batch
  long listing = 5000;     // entries in any listed array (pairs, facets)
};

/// Result body of a subcommand (no envelope). Degree may set "agree": false.
Json cmd_degree(int m, int p, int q, const std::string& method, const Caps& caps);
Json cmd_poset(int m, int p, int q, bool dump, const Caps& caps);
Json cmd_qlr(const std::vector<int>& alpha, const std::vector<int>& beta, int m, int p);
/// D(K) exactly and by residue sums.
Json cmd_vi(const std::vector<int>& k, int m, int p, const std::string& precision, const Caps& caps);
/// Correlator of a class list such as "c1^4 S(1,3) J".
Json cmd_correlator(const std::string& classes, int genus, int m, int p, const std::string& precision, const Caps& caps);
Json cmd_ideal(int m, int p, int q, int t_max, bool quadrics, std::uint64_t seed, const Caps& caps);
/// `input` holds {"planes": [4 matrices], "s": [4 rationals]}; when absent,
/// `instances` random instances are drawn from `seed`.
Json cmd_poleplace(const std::optional<Json>& input, int instances, std::uint64_t seed);
Json cmd_verify(const std::vector<int>& criteria, const std::string& grid, std::uint64_t seed);

/// Wraps a result with schema, engine, command and parameters.
Json envelope(const std::string& command, const Json& params, const Json& result);
/// Two-space indented dump with a trailing newline.
std::string render(const Json& j);

std::vector<int> parse_int_list(const std::string& text);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data);

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Hex digest of command | canonical params | engine version.
  static std::string key(const std::string& command, const Json& params);

  std::optional<Json> load(const std::string& command, const Json& params) const;
  /// Atomic: writes a temporary file then renames it into place.
  void store(const std::string& command, const Json& params, const Json& result) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

struct CacheOutcome {
  Json result;
  bool hit = false;
};

/// Uses the cache when given. With `check_hits`, a hit is recomputed and must
/// match byte for byte, else InternalConsistencyError.
CacheOutcome cached(const ResultCache* cache, const std::string& command, const Json& params,
                    const std::function<Json()>& compute, bool check_hits = false);

}  // namespace qschubert::cli
