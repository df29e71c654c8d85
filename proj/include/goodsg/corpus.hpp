#pragma once

/**
 * @file corpus.hpp
 * @brief Batch runs over a directory of semigroup and curve files.
 */

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ideals.hpp"
#include "ingest/value_space.hpp"
#include "io.hpp"
#include "noether.hpp"
#include "semigroup.hpp"

namespace goodsg {

struct CorpusRow {
  std::string file;
  std::string name;
  std::string source;  ///< "semigroup" or "curve"
  bool valid = false;
  std::string error;

  std::size_t branches = 0;
  ValueVector alpha, beta, gamma;
  Int m = 0, r = 0;
  std::optional<Int> n;
  bool gorenstein = false, kunz = false, nearly_gorenstein = false;
  Int eta = 0, mu = 0, delta = 0;
  std::optional<Int> ring_delta;
  Int chain_length = 0;
  bool recipe_applicable = false;
  bool part1_built = false;
  bool dp_success = false;
  bool certificate_verified = false;
  Int runtime_ms = 0;

  bool from_ingest() const { return source == "curve"; }
};

struct CorpusOptions {
  Order order = Order::lt_neq;
  bool timings = false;
  unsigned jobs = 1;
  ingest::IngestOptions ingest;
};

struct CorpusSummary {
  Order order = Order::lt_neq;
  bool timings = false;
  std::vector<CorpusRow> rows;

  std::size_t count(bool (*pred)(const CorpusRow&)) const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), pred));
  }
  std::size_t invalid() const { return count([](const CorpusRow& r) { return !r.valid; }); }
  std::size_t dp_failures() const { return count([](const CorpusRow& r) { return r.valid && !r.dp_success; }); }
  std::size_t ingest_dp_failures() const {
    return count([](const CorpusRow& r) { return r.valid && r.from_ingest() && !r.dp_success; });
  }
  /// What --strict treats as failure: invalid rows and DP failures on genuine value semigroups.
  bool strict_failure() const { return invalid() > 0 || ingest_dp_failures() > 0; }
};

inline CorpusRow analyze_file(const std::filesystem::path& path, const CorpusOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  CorpusRow row;
  row.file = path.filename().string();
  try {
    const auto j = io::read_json_file(path.string());
    GoodSemigroup S;
    if (io::is_curve(j)) {
      row.source = "curve";
      const auto curve = io::curve_from_json(j);
      auto res = ingest::compute_value_semigroup(curve, opt.ingest);
      S = std::move(res.semigroup);
      row.ring_delta = ingest::ring_colengths(curve, S, opt.ingest.max_truncation);
    } else {
      row.source = "semigroup";
      S = io::semigroup_from_json(j);
    }
    row.name = S.name().empty() ? path.stem().string() : S.name();
    row.branches = S.branches();
    const auto rep = validate(S);
    if (!rep.ok()) {
      row.error = rep.violations.front().rule;
    } else {
      row.valid = true;
      const auto ix = indices(S, opt.order);
      row.alpha = ix.alpha;
      row.beta = S.conductor();
      row.gamma = ix.gamma;
      row.m = ix.m;
      row.r = ix.r;
      row.n = ix.n;
      const auto cls = classify(S);
      row.gorenstein = cls.gorenstein;
      row.kunz = cls.kunz;
      row.nearly_gorenstein = cls.nearly_gorenstein_point;
      row.eta = cls.eta;
      row.mu = cls.mu;
      row.delta = cls.delta_invariant;
      const auto nr = noether_check(S, opt.order);
      row.chain_length = nr.target_length;
      row.recipe_applicable = nr.recipe_applicable;
      row.part1_built = nr.part1_chain.has_value();
      row.dp_success = nr.full_chain.has_value();
      row.certificate_verified = row.dp_success && verify_certificate(S, *nr.full_chain) &&
                                 (!nr.part1_chain || verify_certificate(S, *nr.part1_chain));
    }
  } catch (const std::exception& e) {
    row.valid = false;
    row.error = e.what();
    if (row.name.empty()) row.name = path.stem().string();
  }
  row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return row;
}

/// Analyzes every *.json file in dir; rows come back sorted by filename whatever the job count.
inline CorpusSummary run_corpus(const std::filesystem::path& dir, const CorpusOptions& opt = {}) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  CorpusSummary out;
  out.order = opt.order;
  out.timings = opt.timings;
  out.rows.resize(files.size());
  const std::size_t jobs = std::max(1u, opt.jobs);
  for (std::size_t begin = 0; begin < files.size(); begin += jobs) {
    std::vector<std::future<CorpusRow>> batch;
    for (std::size_t k = begin; k < std::min(files.size(), begin + jobs); ++k)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, analyze_file, files[k], opt));
    for (std::size_t k = 0; k < batch.size(); ++k) out.rows[begin + k] = batch[k].get();
  }
  return out;
}

inline io::json to_json(const CorpusRow& r, bool timings) {
  using io::json;
  json j = {{"file", r.file}, {"name", r.name}, {"source", r.source}, {"valid", r.valid}};
  if (!r.valid) {
    j["error"] = r.error;
  } else {
    j["branches"] = r.branches;
    j["alpha"] = io::to_json(r.alpha);
    j["beta"] = io::to_json(r.beta);
    j["gamma"] = io::to_json(r.gamma);
    j["m"] = r.m;
    j["r"] = r.r;
    j["n"] = r.n ? json(*r.n) : json(nullptr);
    j["gorenstein"] = r.gorenstein;
    j["kunz"] = r.kunz;
    j["nearly_gorenstein_point"] = r.nearly_gorenstein;
    j["eta"] = r.eta;
    j["mu"] = r.mu;
    j["delta"] = r.delta;
    j["ring_delta"] = r.ring_delta ? json(*r.ring_delta) : json(nullptr);
    j["chain_length"] = r.chain_length;
    j["recipe_applicable"] = r.recipe_applicable;
    j["part1_built"] = r.part1_built;
    j["dp_success"] = r.dp_success;
    j["certificate_verified"] = r.certificate_verified;
  }
  if (timings) j["runtime_ms"] = r.runtime_ms;
  return j;
}

inline io::json to_json(const CorpusSummary& s) {
  io::json rows = io::json::array();
  for (const auto& r : s.rows) rows.push_back(to_json(r, s.timings));
  io::json agg = {
      {"items", s.rows.size()},
      {"valid", s.rows.size() - s.invalid()},
      {"invalid", s.invalid()},
      {"from_ingest", s.count([](const CorpusRow& r) { return r.from_ingest(); })},
      {"dp_success", s.count([](const CorpusRow& r) { return r.valid && r.dp_success; })},
      {"dp_failure", s.dp_failures()},
      {"dp_failure_on_ingest", s.ingest_dp_failures()},
      {"gorenstein", s.count([](const CorpusRow& r) { return r.valid && r.gorenstein; })},
      {"kunz", s.count([](const CorpusRow& r) { return r.valid && r.kunz; })},
      {"recipe_applicable", s.count([](const CorpusRow& r) { return r.valid && r.recipe_applicable; })},
  };
  return {{"order_mode", to_string(s.order)}, {"rows", std::move(rows)}, {"aggregate", std::move(agg)}};
}

/// Aligned plain-text table, one row per file.
inline std::string to_table(const CorpusSummary& s) {
  const std::vector<std::string> head = {"name", "s", "alpha", "beta", "gamma", "m", "r", "n", "gor", "kunz",
                                         "eta", "mu", "delta", "chain", "recipe", "dp", "ms"};
  std::vector<std::vector<std::string>> cells;
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  for (const auto& r : s.rows) {
    if (!r.valid) {
      cells.push_back({r.name, "-", "invalid: " + r.error, "", "", "", "", "", "", "", "", "", "", "", "", "", std::to_string(r.runtime_ms)});
      continue;
    }
    cells.push_back({r.name, std::to_string(r.branches), to_string(r.alpha), to_string(r.beta), to_string(r.gamma),
                     std::to_string(r.m), std::to_string(r.r), r.n ? std::to_string(*r.n) : "-", yn(r.gorenstein),
                     yn(r.kunz), std::to_string(r.eta), std::to_string(r.mu), std::to_string(r.delta),
                     std::to_string(r.chain_length), yn(r.recipe_applicable), yn(r.dp_success),
                     std::to_string(r.runtime_ms)});
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& row : cells)
      if (!row[2].starts_with("invalid")) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      if (row[2].starts_with("invalid") && c == 2) {
        os << row[c];
        break;
      }
      os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
    }
    os << '\n';
  };
  line(head);
  for (const auto& row : cells) line(row);
  os << s.rows.size() << " items, " << s.invalid() << " invalid, " << s.dp_failures() << " DP failures ("
     << s.ingest_dp_failures() << " on ingested curves)\n";
  return os.str();
}

}  // namespace goodsg
