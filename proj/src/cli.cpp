#include "qschubert/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "qschubert/closed_formulas.hpp"
#include "qschubert/quantum_grassmannian.hpp"
#include "qschubert/quantum_ring.hpp"
#include "qschubert/vafa_intriligator.hpp"
#include "qschubert/verify.hpp"

namespace qschubert::cli {

namespace {

Json big(const BigInt& v) { return v.get_str(); }
Json rat(const Rational& v) { return v.get_str(); }

Json vec(const VectorXq& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rat(v(i)));
  return out;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

Json numeric(const NumericValue& v) {
  return Json{{"real", v.str(15)}, {"imag_abs", sci(v.imag_abs())}, {"nearest", big(v.nearest())},
              {"residual", sci(v.residual())}};
}

Precision parse_precision(const std::string& name) {
  if (name == "double") return Precision::Double;
  if (name == "extended") return Precision::Extended;
  if (name == "high") return Precision::High;
  throw ValidationError("unknown precision '" + name + "' (double, extended, high)");
}

PosetContext checked_context(int m, int p, int q) {
  const PosetContext ctx{m, p, q};
  ctx.validate();
  return ctx;
}

void check_poset_cap(const PosetContext& ctx, const Caps& caps) {
  if (ctx.size() > caps.poset)
    throw CapExceeded("poset", "poset has " + ctx.size().get_str() + " elements, above --cap-poset " +
                                   std::to_string(caps.poset));
}

void check_subset_cap(int m, int p, const Caps& caps) {
  if (binomial(m + p, p) > caps.subsets)
    throw CapExceeded("subsets", "binomial(m+p, p) = " + binomial(m + p, p).get_str() + " critical points, above --cap-subsets " +
                                     std::to_string(caps.subsets));
}

Json qindex(const QIndex& x) { return Json{{"alpha", x.alpha}, {"level", x.level}}; }

Json quadric(const Quadric& f) {
  Json out = Json::object();
  for (const auto& [pair, c] : f) out[pair.first.str() + "*" + pair.second.str()] = rat(c);
  return out;
}

std::vector<InsertedClass> parse_classes(const std::string& text) {
  std::vector<InsertedClass> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    long reps = 1;
    const auto caret = token.rfind('^');
    std::string base = token;
    if (caret != std::string::npos && token.find(')', caret) == std::string::npos) {
      base = token.substr(0, caret);
      reps = std::stol(token.substr(caret + 1));
      if (reps < 0) throw ValidationError("negative exponent in '" + token + "'");
    }
    InsertedClass c;
    if (base == "J") {
      c = InsertedClass::jacobian();
    } else if (base.size() > 1 && base[0] == 'c') {
      c = InsertedClass::special(std::stoi(base.substr(1)));
    } else if (base.size() > 3 && base[0] == 'S' && base[1] == '(' && base.back() == ')') {
      c = InsertedClass::schur(parse_int_list(base.substr(2, base.size() - 3)));
    } else {
      throw ValidationError("cannot parse class '" + token + "' (use c<i>, S(i,j,...), J, each optionally ^k)");
    }
    for (long k = 0; k < reps; ++k) out.push_back(c);
  }
  return out;
}

MatrixXq parse_matrix(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ValidationError("matrix must be a non-empty array of rows");
  MatrixXq out(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(j[0].size()));
  for (size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != j[0].size()) throw ValidationError("matrix rows differ in length");
    for (size_t k = 0; k < j[i].size(); ++k) {
      const Json& e = j[i][k];
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          e.is_string() ? parse_rational(e.get<std::string>()) : Rational(e.get<long>());
    }
  }
  return out;
}

Json static_report(const StaticPolePlacement& r) {
  Json out{{"kernel_dimension", r.kernel_dimension}, {"verified", r.verified}};
  if (r.degeneracy) {
    out["degeneracy"] = *r.degeneracy;
    return out;
  }
  out["degeneracy"] = nullptr;
  out["binary_form"] = {{"a", rat(r.quad_a)}, {"b", rat(r.quad_b)}, {"c", rat(r.quad_c)}};
  out["discriminant"] = rat(r.discriminant);
  out["solutions_with_multiplicity"] = r.solutions_with_multiplicity;
  out["real_solutions"] = r.real_solutions;
  out["rational_solutions"] = r.rational_solutions;
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back({{"rational", vec(s.rational)}, {"surd", vec(s.surd)}});
  out["solutions"] = sols;
  Json coords = Json::array();
  for (const auto& c : r.coordinates) coords.push_back(c);
  out["coordinates"] = coords;
  return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) throw ValidationError("empty entry in list '" + text + "'");
    size_t used = 0;
    const int v = std::stoi(item.substr(first), &used);
    if (item.find_first_not_of(" \t", first + used) != std::string::npos)
      throw ValidationError("bad integer '" + item + "' in list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError("empty integer list");
  return out;
}

Json cmd_degree(int m, int p, int q, const std::string& method, const Caps& caps) {
  const PosetContext ctx = checked_context(m, p, q);
  static const std::vector<std::string> kMethods{"chains", "closed", "windowed", "vi", "ring"};
  std::vector<std::string> chosen;
  if (method == "all") {
    chosen = kMethods;
  } else if (std::find(kMethods.begin(), kMethods.end(), method) != kMethods.end()) {
    chosen = {method};
  } else {
    throw ValidationError("unknown method '" + method + "' (chains, closed, windowed, vi, ring, all)");
  }
  const JSeq top = to_jseq(poset_maximum(ctx), ctx.n());
  Json values = Json::object();
  std::optional<BigInt> common;
  bool agree = true;
  for (const auto& name : chosen) {
    if (name == "chains" || name == "ring" || name == "windowed") check_poset_cap(ctx, caps);
    BigInt v;
    if (name == "chains") v = degree(ctx);
    if (name == "closed") v = d_closed(m, p, q);
    if (name == "windowed") v = windowed_degree(top, ctx);
    if (name == "vi") v = D_exact(top.seq, m, p);
    if (name == "ring") v = h1_power_degree(m, p, q);
    values[name] = big(v);
    if (common && *common != v) agree = false;
    if (!common) common = v;
  }
  return Json{{"methods", values}, {"agree", agree}, {"value", agree ? big(*common) : Json(nullptr)},
              {"dimension", ctx.N()}};
}

Json cmd_poset(int m, int p, int q, bool dump, const Caps& caps) {
  const PosetContext ctx = checked_context(m, p, q);
  check_poset_cap(ctx, caps);
  const Poset poset(ctx);
  Json out{{"size", poset.size()}, {"dimension", ctx.N()}, {"degree", big(poset.chains_from_minimum().back())},
           {"minimum", qindex(poset.elements().front())}, {"maximum", qindex(poset.elements().back())}};
  if (dump) {
    Json elements = Json::array();
    for (size_t i = 0; i < poset.size(); ++i) {
      elements.push_back({{"index", i},
                          {"alpha", poset.elements()[i].alpha},
                          {"level", poset.elements()[i].level},
                          {"rank", poset.ranks()[i]},
                          {"jseq", poset.jseqs()[i].seq},
                          {"covers", poset.lower_covers()[i]},
                          {"chains", big(poset.chains_from_minimum()[i])}});
    }
    out["elements"] = elements;
  }
  return out;
}

Json cmd_qlr(const std::vector<int>& alpha, const std::vector<int>& beta, int m, int p) {
  const QLRTable table = qlr(alpha, beta, m, p);
  Json entries = Json::array();
  for (const auto& e : table.entries) entries.push_back({{"gamma", e.gamma}, {"d", e.d}, {"n", big(e.n)}});
  const RingElem product = quantum_product(RingElem::schubert(QIndex{alpha, 0}, m), RingElem::schubert(QIndex{beta, 0}, m));
  return Json{{"entries", entries}, {"product", product.str()}};
}

Json cmd_vi(const std::vector<int>& k, int m, int p, const std::string& precision, const Caps& caps) {
  const Precision prec = parse_precision(precision);
  if (static_cast<int>(k.size()) != p) throw ValidationError("--K needs exactly p entries");
  long weight = 0;
  for (size_t j = 0; j < k.size(); ++j) weight += k[j] - static_cast<long>(j) - 1;
  const BigInt exact = D_exact(k, m, p);
  Json out{{"exact", big(exact)}, {"weight", weight}};
  if (weight >= 0) {
    check_subset_cap(m, p, caps);
    const NumericValue v = D_numeric(k, m, p, prec);
    out["numeric"] = numeric(v);
    out["deviation"] = sci(v.deviation(exact));
  } else {
    out["numeric"] = nullptr;
  }
  return out;
}

Json cmd_correlator(const std::string& classes, int genus, int m, int p, const std::string& precision, const Caps& caps) {
  check_subset_cap(m, p, caps);
  const Correlator c = correlator(parse_classes(classes), genus, m, p, parse_precision(precision));
  Json names = Json::array();
  for (const auto& cls : c.classes) names.push_back(cls.str());
  return Json{{"classes", names},
              {"genus", genus},
              {"degree", c.degree ? Json(*c.degree) : Json(nullptr)},
              {"exact", c.exact ? big(*c.exact) : Json(nullptr)},
              {"numeric", numeric(c.numeric)}};
}

Json cmd_ideal(int m, int p, int q, int t_max, bool quadrics, std::uint64_t seed, const Caps& caps) {
  const PosetContext ctx = checked_context(m, p, q);
  check_poset_cap(ctx, caps);
  if (t_max < 0) throw ValidationError("--t-max must be non-negative");
  const auto gens = initial_ideal_gens(ctx);
  const SRDecomposition sr = sr_decomposition(ctx, caps.listing, t_max);
  Json hilbert = Json::array();
  for (const auto& h : sr.hilbert) hilbert.push_back(big(h));
  Json out{{"incomparable_pairs", gens.size()}, {"degree", big(sr.degree)}, {"hilbert", hilbert},
           {"facets_enumerated", sr.facets_enumerated}};
  if (static_cast<long>(gens.size()) <= caps.listing) {
    Json pairs = Json::array();
    for (const auto& [x, y] : gens) pairs.push_back({x.str(), y.str()});
    out["leading_terms"] = pairs;
  }
  if (quadrics) {
    const long coords = ctx.size().get_si();
    const long monomials = coords * (coords + 1) / 2;
    if (2 * monomials > caps.samples)
      throw CapExceeded("samples", "quadric interpolation needs " + std::to_string(2 * monomials) +
                                       " sample curves, above --cap-samples " + std::to_string(caps.samples));
    std::mt19937_64 rng(seed);
    const QuadricInterpolation qi = interpolate_quadrics(ctx, rng);
    Json basis = Json::array();
    for (const auto& f : qi.basis) basis.push_back(quadric(f));
    out["quadrics"] = {{"basis", basis},
                       {"monomials", qi.monomial_count},
                       {"samples", qi.samples_used},
                       {"dimension_matches", qi.dimension_matches},
                       {"batches_agree", qi.batches_agree},
                       {"straightening_form", qi.straightening_form}};
  }
  return out;
}

Json cmd_poleplace(const std::optional<Json>& input, int instances, std::uint64_t seed) {
  if (input) {
    if (!input->contains("planes") || !input->contains("s")) throw ValidationError("input needs \"planes\" and \"s\"");
    std::vector<MatrixXq> planes;
    for (const auto& m : input->at("planes")) planes.push_back(parse_matrix(m));
    std::vector<Rational> s;
    for (const auto& v : input->at("s")) s.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>()));
    return static_report(static_compensators_grass24(planes, s));
  }
  if (instances < 1) throw ValidationError("--instances must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-12, 12);
  Json reports = Json::array();
  int two = 0, degenerate = 0, real = 0;
  for (int k = 0; k < instances; ++k) {
    std::vector<MatrixXq> planes;
    for (int i = 0; i < 4; ++i) planes.push_back(random_plane(2, 2, rng));
    std::vector<Rational> s;
    while (s.size() < 4) {
      const Rational v = pick(rng);
      if (v != 0 && std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    }
    const StaticPolePlacement r = static_compensators_grass24(planes, s);
    if (r.degeneracy) ++degenerate;
    if (!r.degeneracy && r.solutions_with_multiplicity == 2) ++two;
    if (!r.degeneracy && r.real_solutions == 2) ++real;
    Json svals = Json::array();
    for (const auto& v : s) svals.push_back(rat(v));
    Json report = static_report(r);
    report["s"] = svals;
    reports.push_back(report);
  }
  return Json{{"instances", reports},
              {"summary", {{"count", instances}, {"two_solutions", two}, {"degenerate", degenerate}, {"all_real", real}}}};
}

Json cmd_verify(const std::vector<int>& criteria, const std::string& grid, std::uint64_t seed) {
  VerifyOptions opt;
  opt.seed = seed;
  if (grid == "small") {
    opt.max_poset_size = 100;
  } else if (grid != "default") {
    throw ValidationError("unknown grid '" + grid + "' (default, small)");
  }
  std::vector<int> ids = criteria;
  if (ids.empty())
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  Json list = Json::array();
  bool pass = true;
  for (const auto& r : run_criteria(ids, opt)) {
    pass = pass && r.pass;
    list.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"checks", r.checks},
                    {"notes", r.notes}, {"failures", r.failures}});
  }
  return Json{{"criteria", list}, {"pass", pass}, {"grid", grid}};
}

Json envelope(const std::string& command, const Json& params, const Json& result) {
  return Json{{"schema", kSchemaVersion}, {"engine", kEngineVersion}, {"command", command}, {"params", params},
              {"result", result}};
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string ResultCache::key(const std::string& command, const Json& params) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(command + "|" + params.dump() + "|" + kEngineVersion)));
  return buf;
}

std::optional<Json> ResultCache::load(const std::string& command, const Json& params) const {
  std::ifstream in(dir_ / (key(command, params) + ".json"));
  if (!in) return std::nullopt;
  const Json entry = Json::parse(in, nullptr, false);
  // a colliding or stale entry must match the full key, not only its digest
  if (entry.is_discarded() || entry.value("command", "") != command || entry.value("engine", "") != kEngineVersion ||
      !entry.contains("params") || entry["params"] != params || !entry.contains("value"))
    return std::nullopt;
  return entry["value"];
}

void ResultCache::store(const std::string& command, const Json& params, const Json& result) const {
  std::filesystem::create_directories(dir_);
  const Json entry{{"command", command},
                   {"params", params},
                   {"engine", kEngineVersion},
                   {"created_at", static_cast<long long>(std::time(nullptr))},
                   {"value", result}};
  const auto final_path = dir_ / (key(command, params) + ".json");
  const auto tmp = dir_ / (key(command, params) + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp);
    out << entry.dump();
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path);
}

CacheOutcome cached(const ResultCache* cache, const std::string& command, const Json& params,
                    const std::function<Json()>& compute, bool check_hits) {
  if (cache) {
    if (auto hit = cache->load(command, params)) {
      if (check_hits && compute().dump() != hit->dump())
        throw InternalConsistencyError("cache entry for '" + command + "' differs from recomputation");
      return {*hit, true};
    }
  }
  Json result = compute();
  if (cache) cache->store(command, params, result);
  return {result, false};
}

}  // namespace qschubert::cli
