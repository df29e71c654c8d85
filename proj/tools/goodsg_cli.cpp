// Command-line front end: validate, invariants, noether, verify, corpus, ingest.
//
// Exit codes: 0 success, 1 mathematical failure or violation, 2 I/O or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "goodsg/goodsg.hpp"

namespace {

using goodsg::io::json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kParseError = 2;

struct Shared {
  std::string order = "lt-neq";
  goodsg::Int max_trunc = 200;
  goodsg::Int max_depth = 10000;
};

goodsg::Int truncation_ceiling(goodsg::Int requested) {
  if (const char* env = std::getenv("GSL_MAX_TRUNC")) {
    try {
      return std::min<goodsg::Int>(requested, std::stoll(env));
    } catch (const std::exception&) {
      throw goodsg::io::ParseError(std::string("GSL_MAX_TRUNC is not an integer: ") + env);
    }
  }
  return requested;
}

goodsg::ingest::IngestOptions ingest_options(const Shared& sh) {
  goodsg::ingest::IngestOptions opt;
  opt.max_depth = sh.max_depth;
  opt.max_truncation = truncation_ceiling(sh.max_trunc);
  return opt;
}

/// Semigroup files are read directly; curve files are ingested first.
goodsg::GoodSemigroup load_semigroup(const std::string& path, const Shared& sh) {
  const auto j = goodsg::io::read_json_file(path);
  if (goodsg::io::is_curve(j))
    return goodsg::ingest::compute_value_semigroup(goodsg::io::curve_from_json(j), ingest_options(sh)).semigroup;
  return goodsg::io::semigroup_from_json(j);
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw goodsg::io::ParseError("cannot write " + out_path);
  out << text;
}

int cmd_validate(const std::string& path, const Shared& sh) {
  const auto S = load_semigroup(path, sh);
  const auto rep = goodsg::validate(S);
  std::cout << goodsg::io::to_json(rep).dump(2) << "\n";
  return rep.ok() ? kOk : kFailure;
}

int cmd_invariants(const std::string& path, const Shared& sh, const std::string& out) {
  const auto S = load_semigroup(path, sh);
  const auto rep = goodsg::validate(S);
  if (!rep.ok()) {
    std::cout << goodsg::io::to_json(rep).dump(2) << "\n";
    return kFailure;
  }
  const auto order = goodsg::parse_order(sh.order);
  json j;
  if (!S.name().empty()) j["name"] = S.name();
  j["indices"] = goodsg::io::to_json(goodsg::indices(S, order));
  j["classification"] = goodsg::io::to_json(goodsg::classify(S));
  j["canonical_ideal"] = goodsg::io::to_json(goodsg::canonical_ideal(S));
  j["k_small"] = goodsg::io::to_json(goodsg::k_small(S, order));
  emit(j, out);
  return kOk;
}

int cmd_noether(const std::string& path, const Shared& sh, const std::string& out) {
  const auto S = load_semigroup(path, sh);
  const auto rep = goodsg::validate(S);
  if (!rep.ok()) {
    std::cout << goodsg::io::to_json(rep).dump(2) << "\n";
    return kFailure;
  }
  const auto report = goodsg::noether_check(S, goodsg::parse_order(sh.order));
  emit(goodsg::io::to_json(report), out);
  return report.full_chain ? kOk : kFailure;
}

int cmd_verify(const std::string& sg_path, const std::string& cert_path, const Shared& sh) {
  const auto S = load_semigroup(sg_path, sh);
  const auto cert = goodsg::io::certificate_from_json(goodsg::io::read_json_file(cert_path));
  const bool ok = goodsg::validate(S).ok() && goodsg::verify_certificate(S, cert);
  std::cout << json{{"verified", ok}}.dump() << "\n";
  return ok ? kOk : kFailure;
}

int cmd_corpus(const std::string& dir, const Shared& sh, bool strict, bool as_json, bool timings, unsigned jobs,
               const std::string& out) {
  if (!std::filesystem::is_directory(dir)) throw goodsg::io::ParseError(dir + " is not a directory");
  goodsg::CorpusOptions opt;
  opt.order = goodsg::parse_order(sh.order);
  opt.timings = timings;
  opt.jobs = jobs;
  opt.ingest = ingest_options(sh);
  const auto summary = goodsg::run_corpus(dir, opt);
  const json j = goodsg::to_json(summary);
  if (!out.empty()) emit(j, out);
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << goodsg::to_table(summary);
  return strict && summary.strict_failure() ? kFailure : kOk;
}

int cmd_ingest(const std::string& path, const Shared& sh, const std::string& out) {
  const auto curve = goodsg::io::curve_from_json(goodsg::io::read_json_file(path));
  const auto res = goodsg::ingest::compute_value_semigroup(curve, ingest_options(sh));
  emit(goodsg::io::to_json(res), out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"goodsg: good semigroups, canonical ideals and Max Noether chains"};
  app.require_subcommand(1);
  Shared sh;
  std::string out;

  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order-mode", sh.order, "strict order used for K°, R_i and A_l")
        ->check(CLI::IsMember({"lt-neq", "lt-all"}));
  };
  auto add_ingest = [&](CLI::App* sub) {
    sub->add_option("--max-depth", sh.max_depth, "closure depth ceiling");
    sub->add_option("--max-trunc", sh.max_trunc, "truncation ceiling per branch");
  };

  std::string path, cert_path;
  auto* validate = app.add_subcommand("validate", "check the good-semigroup axioms");
  validate->add_option("path", path, "semigroup or curve JSON")->required();
  add_ingest(validate);

  auto* invariants = app.add_subcommand("invariants", "indices, canonical ideal and classification");
  invariants->add_option("path", path, "semigroup or curve JSON")->required();
  invariants->add_option("-o", out, "write JSON here");
  add_order(invariants);
  add_ingest(invariants);

  auto* noether = app.add_subcommand("noether", "search and certify the chain inside K° + K°");
  noether->add_option("path", path, "semigroup or curve JSON")->required();
  noether->add_option("-o", out, "write JSON here");
  add_order(noether);
  add_ingest(noether);

  auto* verify = app.add_subcommand("verify", "re-check a chain certificate");
  verify->add_option("semigroup", path, "semigroup or curve JSON")->required();
  verify->add_option("certificate", cert_path, "certificate JSON")->required();
  add_ingest(verify);

  bool strict = false, as_json = false, timings = false;
  unsigned jobs = 1;
  auto* corpus = app.add_subcommand("corpus", "analyze every JSON file in a directory");
  corpus->add_option("dir", path, "corpus directory")->required();
  corpus->add_flag("--strict", strict, "exit 1 on invalid files or DP failures on ingested curves");
  corpus->add_flag("--json", as_json, "print JSON instead of the table");
  corpus->add_flag("--timings", timings, "include runtime_ms in JSON rows");
  corpus->add_option("--jobs", jobs, "files analyzed concurrently")->check(CLI::PositiveNumber);
  corpus->add_option("-o", out, "write JSON here");
  add_order(corpus);
  add_ingest(corpus);

  auto* ingest = app.add_subcommand("ingest", "value semigroup of a parametrized curve");
  ingest->add_option("path", path, "curve JSON")->required();
  ingest->add_option("-o", out, "write semigroup JSON here");
  add_ingest(ingest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*validate) return cmd_validate(path, sh);
    if (*invariants) return cmd_invariants(path, sh, out);
    if (*noether) return cmd_noether(path, sh, out);
    if (*verify) return cmd_verify(path, cert_path, sh);
    if (*corpus) return cmd_corpus(path, sh, strict, as_json, timings, jobs, out);
    if (*ingest) return cmd_ingest(path, sh, out);
  } catch (const goodsg::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
