// Command-line front end. Exit codes: 0 success, 1 disagreement or failed
// verification, 2 invalid input or exceeded cap, 3 internal error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "qschubert/cli.hpp"

using namespace qschubert;
using namespace qschubert::cli;

namespace {

struct Context {
  int m = 0, p = 0, q = 0;
};

void add_context(CLI::App* cmd, Context& c, bool with_q) {
  cmd->add_option("m", c.m, "Dimension m of the plane")->required();
  cmd->add_option("p", c.p, "Dimension p of the plane")->required();
  if (with_q) cmd->add_option("q", c.q, "Degree bound q")->required();
}

Json params_of(const Context& c, bool with_q) {
  Json j{{"m", c.m}, {"p", c.p}};
  if (with_q) j["q"] = c.q;
  return j;
}

int emit_error(const std::string& kind, const std::string& message, int code, const std::string& cap = "") {
  Json err{{"kind", kind}, {"message", message}};
  if (!cap.empty()) err["cap"] = cap;
  std::cout << render(Json{{"schema", kSchemaVersion}, {"engine", kEngineVersion}, {"error", err}});
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Schubert calculus: degrees, posets, products, residue sums and the quantum Grassmannian"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_flag = true, no_cache = false, check_cache = false;
  std::string cache_dir;
  std::uint64_t seed = 20240601;
  Caps caps;
  app.add_flag("--json", json_flag, "Emit JSON (the only format)");
  app.add_option("--cache-dir", cache_dir, "Result cache directory (default: $QSCHUBERT_CACHE_DIR)");
  app.add_flag("--no-cache", no_cache, "Neither read nor write the cache");
  app.add_flag("--check-cache", check_cache, "Recompute on cache hits and fail on any byte difference");
  app.add_option("--seed", seed, "Seed for every random choice");
  app.add_option("--cap-poset", caps.poset, "Largest poset to build")->capture_default_str();
  app.add_option("--cap-subsets", caps.subsets, "Most critical points to sum over")->capture_default_str();
  app.add_option("--cap-samples", caps.samples, "Most random curves per interpolation batch")->capture_default_str();
  app.add_option("--cap-listing", caps.listing, "Longest listed array")->capture_default_str();

  Context deg_ctx;
  std::string method = "all";
  auto* degree_cmd = app.add_subcommand("degree", "Degree of the space of degree-q maps by one or all routes");
  add_context(degree_cmd, deg_ctx, true);
  degree_cmd->add_option("--method", method, "chains|closed|windowed|vi|ring|all")->capture_default_str();

  Context poset_ctx;
  bool dump = false;
  auto* poset_cmd = app.add_subcommand("poset", "The index poset, optionally dumped element by element");
  add_context(poset_cmd, poset_ctx, true);
  poset_cmd->add_flag("--dump", dump, "List every element");

  Context qlr_ctx;
  std::string alpha, beta;
  auto* qlr_cmd = app.add_subcommand("qlr", "Quantum Littlewood-Richardson numbers of two Schubert classes");
  qlr_cmd->add_option("--m", qlr_ctx.m, "m")->required();
  qlr_cmd->add_option("--p", qlr_ctx.p, "p")->required();
  qlr_cmd->add_option("--alpha", alpha, "First index, e.g. 3,4")->required();
  qlr_cmd->add_option("--beta", beta, "Second index")->required();

  Context vi_ctx;
  std::string k_text, classes, precision = "high";
  int genus = 0;
  auto* vi_cmd = app.add_subcommand("vi", "Residue sums: D(K) or a correlator");
  vi_cmd->add_option("--m", vi_ctx.m, "m")->required();
  vi_cmd->add_option("--p", vi_ctx.p, "p")->required();
  auto* k_opt = vi_cmd->add_option("--K", k_text, "Sequence K, e.g. 1,2");
  auto* cls_opt = vi_cmd->add_option("--classes", classes, "Inserted classes, e.g. \"c1^8\" or \"c2 S(1,3) J\"");
  k_opt->excludes(cls_opt);
  vi_cmd->add_option("--genus", genus, "Genus for --classes")->capture_default_str();
  vi_cmd->add_option("--precision", precision, "double|extended|high")->capture_default_str();

  Context ideal_ctx;
  int t_max = 4;
  bool quadrics = false;
  auto* ideal_cmd = app.add_subcommand("ideal", "Initial ideal, Stanley-Reisner data and interpolated quadrics");
  add_context(ideal_cmd, ideal_ctx, true);
  ideal_cmd->add_option("--t-max", t_max, "Hilbert function up to this degree")->capture_default_str();
  ideal_cmd->add_flag("--quadrics", quadrics, "Interpolate the degree-2 relations from random curves");

  std::string input_path;
  int instances = 1;
  auto* pole_cmd = app.add_subcommand("poleplace", "Static output feedback on Grass(2,4)");
  pole_cmd->add_option("--input", input_path, "JSON file with \"planes\" and \"s\"")->check(CLI::ExistingFile);
  pole_cmd->add_option("--instances", instances, "Random instances when no input is given")->capture_default_str();

  std::string criteria_text, grid = "default";
  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-route verification suite");
  verify_cmd->add_option("--criteria", criteria_text, "Comma list of criterion numbers (default all)");
  verify_cmd->add_option("--grid", grid, "default|small")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  (void)json_flag;

  std::unique_ptr<ResultCache> cache;
  if (!no_cache) {
    if (cache_dir.empty())
      if (const char* env = std::getenv("QSCHUBERT_CACHE_DIR")) cache_dir = env;
    if (!cache_dir.empty()) cache = std::make_unique<ResultCache>(cache_dir);
  }
  const Json cap_params{{"poset", caps.poset}, {"subsets", caps.subsets}, {"samples", caps.samples}, {"listing", caps.listing}};

  try {
    std::string command;
    Json params;
    std::function<Json()> compute;
    bool cacheable = true;
    if (*degree_cmd) {
      command = "degree";
      params = params_of(deg_ctx, true);
      params["method"] = method;
      compute = [&] { return cmd_degree(deg_ctx.m, deg_ctx.p, deg_ctx.q, method, caps); };
    } else if (*poset_cmd) {
      command = "poset";
      params = params_of(poset_ctx, true);
      params["dump"] = dump;
      compute = [&] { return cmd_poset(poset_ctx.m, poset_ctx.p, poset_ctx.q, dump, caps); };
    } else if (*qlr_cmd) {
      command = "qlr";
      const auto a = parse_int_list(alpha), b = parse_int_list(beta);
      params = params_of(qlr_ctx, false);
      params["alpha"] = a;
      params["beta"] = b;
      compute = [&, a, b] { return cmd_qlr(a, b, qlr_ctx.m, qlr_ctx.p); };
    } else if (*vi_cmd) {
      command = "vi";
      params = params_of(vi_ctx, false);
      params["precision"] = precision;
      if (!k_text.empty()) {
        const auto k = parse_int_list(k_text);
        params["K"] = k;
        compute = [&, k] { return cmd_vi(k, vi_ctx.m, vi_ctx.p, precision, caps); };
      } else if (!classes.empty() || *cls_opt) {
        params["classes"] = classes;
        params["genus"] = genus;
        compute = [&] { return cmd_correlator(classes, genus, vi_ctx.m, vi_ctx.p, precision, caps); };
      } else {
        return emit_error("validation", "vi needs --K or --classes", 2);
      }
    } else if (*ideal_cmd) {
      command = "ideal";
      params = params_of(ideal_ctx, true);
      params["t_max"] = t_max;
      params["quadrics"] = quadrics;
      if (quadrics) params["seed"] = seed;
      compute = [&] { return cmd_ideal(ideal_ctx.m, ideal_ctx.p, ideal_ctx.q, t_max, quadrics, seed, caps); };
    } else if (*pole_cmd) {
      command = "poleplace";
      std::optional<Json> input;
      if (!input_path.empty()) {
        std::ifstream in(input_path);
        input = Json::parse(in, nullptr, false);
        if (input->is_discarded()) return emit_error("validation", "input is not valid JSON", 2);
        params["input"] = *input;
      } else {
        params["instances"] = instances;
        params["seed"] = seed;
      }
      compute = [&, input] { return cmd_poleplace(input, instances, seed); };
    } else {
      command = "verify";
      cacheable = false;
      std::vector<int> ids;
      if (!criteria_text.empty()) ids = parse_int_list(criteria_text);
      params = {{"criteria", ids}, {"grid", grid}, {"seed", seed}};
      compute = [&, ids] { return cmd_verify(ids, grid, seed); };
    }
    params["caps"] = cap_params;

    const CacheOutcome out = cached(cacheable ? cache.get() : nullptr, command, params, compute, check_cache);
    std::cout << render(envelope(command, params, out.result));
    if (out.result.contains("agree") && !out.result["agree"].get<bool>()) return 1;
    if (out.result.contains("pass") && !out.result["pass"].get<bool>()) return 1;
    return 0;
  } catch (const CapExceeded& e) {
    return emit_error("cap", e.what(), 2, e.cap());
  } catch (const ValidationError& e) {
    return emit_error("validation", e.what(), 2);
  } catch (const std::invalid_argument& e) {
    return emit_error("validation", std::string("malformed number: ") + e.what(), 2);
  } catch (const std::exception& e) {
    return emit_error("internal", e.what(), 3);
  }
}
