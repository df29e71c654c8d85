#pragma once

/**
 * @file io.hpp
 * @brief JSON formats for semigroups, ideals, curves, reports and certificates.
 *
 *   semigroup  {"branches": s, "conductor": [..], "small": [[..], ..], "name": ".."}
 *              or {"generators": [n1, n2, ..]} for numerical semigroups
 *   ideal      {"min": [..], "conductor": [..], "small": [[..], ..]}
 *   curve      {"branches": s, "field": "Q" | {"p": prime},
 *               "generators": [[[[exp, "num/den"], ..] per branch] per generator], "name": ".."}
 */

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ideals.hpp"
#include "ingest/presentation.hpp"
#include "ingest/value_space.hpp"
#include "lattice.hpp"
#include "noether.hpp"
#include "semigroup.hpp"

namespace goodsg::io {

using nlohmann::json;

/// Input that is not well-formed JSON or does not match a schema.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json to_json(const ValueVector& v) { return json(v.coords()); }

inline ValueVector vector_from_json(const json& j, std::optional<std::size_t> expected = std::nullopt) {
  ValueVector v;
  if (j.is_number_integer()) {
    v = ValueVector{j.get<Int>()};
  } else if (j.is_array()) {
    std::vector<Int> c;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw ParseError("vector coordinates must be integers: " + j.dump());
      c.push_back(x.get<Int>());
    }
    v = ValueVector(std::move(c));
  } else {
    throw ParseError("expected an integer array, got " + j.dump());
  }
  if (expected && v.size() != *expected)
    throw ParseError("vector " + j.dump() + " has " + std::to_string(v.size()) + " coordinates, expected " +
                     std::to_string(*expected));
  return v;
}

inline json to_json(const std::vector<ValueVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline json to_json(const GoodSemigroup& S) {
  json j;
  j["branches"] = S.branches();
  j["conductor"] = to_json(S.conductor());
  j["small"] = to_json(S.small());
  if (!S.name().empty()) j["name"] = S.name();
  return j;
}

inline json to_json(const ingest::IngestResult& r) {
  json j = to_json(r.semigroup);
  j["provenance"] = {{"truncation", to_json(r.truncation)}, {"depth", r.depth}, {"rounds", r.rounds}};
  return j;
}

inline bool is_curve(const json& j) {
  if (j.contains("field")) return true;
  if (!j.contains("generators") || !j["generators"].is_array()) return false;
  for (const auto& g : j["generators"])
    if (g.is_array()) return true;
  return false;
}

inline GoodSemigroup semigroup_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("semigroup must be a JSON object");
  const std::string name = j.value("name", std::string{});
  try {
    if (j.contains("generators")) {
      std::vector<Int> gens;
      for (const auto& g : j.at("generators")) {
        if (!g.is_number_integer()) throw ParseError("numerical generators must be integers");
        gens.push_back(g.get<Int>());
      }
      return GoodSemigroup::from_generators(gens, name);
    }
    const auto s = j.at("branches").get<std::size_t>();
    if (s == 0) throw ParseError("branches must be positive");
    const ValueVector beta = vector_from_json(j.at("conductor"), s);
    std::vector<ValueVector> small;
    for (const auto& x : j.at("small")) small.push_back(vector_from_json(x, s));
    return GoodSemigroup(beta, std::move(small), name);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad semigroup: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad semigroup: ") + e.what());
  }
}

inline json to_json(const RelativeIdeal& E) {
  return {{"min", to_json(E.min_elt())}, {"conductor", to_json(E.conductor())}, {"small", to_json(E.small())}};
}

inline RelativeIdeal ideal_from_json(const json& j, std::shared_ptr<const GoodSemigroup> parent) {
  try {
    const std::size_t s = parent->branches();
    std::vector<ValueVector> small;
    for (const auto& x : j.at("small")) small.push_back(vector_from_json(x, s));
    return RelativeIdeal(std::move(parent), vector_from_json(j.at("min"), s), vector_from_json(j.at("conductor"), s),
                         std::move(small));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad ideal: ") + e.what());
  }
}

inline json to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    json e = {{"rule", x.rule}, {"witnesses", to_json(x.witnesses)}};
    if (!x.detail.empty()) e["detail"] = x.detail;
    v.push_back(std::move(e));
  }
  return {{"valid", r.ok()}, {"violations", std::move(v)}};
}

inline json to_json(const ClassificationReport& c) {
  return {{"level", "semigroup"},
          {"gorenstein", c.gorenstein},
          {"eta", c.eta},
          {"mu", c.mu},
          {"kunz", c.kunz},
          {"nearly_gorenstein_point", c.nearly_gorenstein_point},
          {"delta_invariant", c.delta_invariant}};
}

inline json to_json(const SemigroupIndices& ix) {
  json j = {{"alpha", to_json(ix.alpha)}, {"gamma", to_json(ix.gamma)}, {"m", ix.m},
            {"r", ix.r},                  {"order_mode", to_string(ix.order)}, {"regular", ix.regular}};
  j["n"] = ix.n ? json(*ix.n) : json(nullptr);
  j["d"] = ix.d ? to_json(*ix.d) : json(nullptr);
  return j;
}

inline json to_json(const ChainCertificate& c) {
  json w = json::array();
  for (const auto& x : c.witnesses) w.push_back(json::array({to_json(x.x), to_json(x.y)}));
  return {{"mode", to_string(c.mode)}, {"order_mode", to_string(c.order)}, {"points", to_json(c.points)},
          {"witnesses", std::move(w)}};
}

inline ChainCertificate certificate_from_json(const json& j) {
  try {
    ChainCertificate c;
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "constructive")
      c.mode = ChainMode::constructive;
    else if (mode == "dp-search")
      c.mode = ChainMode::dp_search;
    else
      throw ParseError("unknown certificate mode " + mode);
    c.order = parse_order(j.value("order_mode", std::string("lt-neq")));
    for (const auto& p : j.at("points")) c.points.push_back(vector_from_json(p));
    for (const auto& w : j.at("witnesses")) {
      if (!w.is_array() || w.size() != 2) throw ParseError("witness must be a pair");
      c.witnesses.push_back({vector_from_json(w[0]), vector_from_json(w[1])});
    }
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad certificate: ") + e.what());
  }
}

inline json to_json(const NoetherReport& r) {
  json diags = json::array();
  for (const auto& d : r.diagnostics) diags.push_back({{"code", d.code}, {"message", d.message}});
  return {{"indices", to_json(r.indices)},
          {"target_length", r.target_length},
          {"full_chain", r.full_chain ? to_json(*r.full_chain) : json(nullptr)},
          {"part1_chain", r.part1_chain ? to_json(*r.part1_chain) : json(nullptr)},
          {"recipe_applicable", r.recipe_applicable},
          {"diagnostics", std::move(diags)}};
}

inline ingest::CurvePresentation curve_from_json(const json& j) {
  using namespace ingest;
  if (!j.is_object()) throw ParseError("curve must be a JSON object");
  try {
    CurvePresentation c;
    c.branches = j.at("branches").get<std::size_t>();
    c.name = j.value("name", std::string{});
    if (j.contains("field")) {
      const auto& f = j["field"];
      if (f.is_string()) {
        if (f.get<std::string>() != "Q") throw ParseError("unknown field " + f.dump());
      } else if (f.is_object() && f.contains("p")) {
        c.field.prime = f["p"].get<std::uint64_t>();
      } else {
        throw ParseError("unknown field " + f.dump());
      }
    }
    for (const auto& g : j.at("generators")) {
      std::vector<SparseSeries> per_branch;
      for (const auto& series : g) {
        SparseSeries sp;
        for (const auto& term : series) {
          if (!term.is_array() || term.size() != 2) throw ParseError("term must be [exponent, coefficient]");
          const Int e = term[0].get<Int>();
          const Rational q =
              term[1].is_string() ? parse_rational(term[1].get<std::string>()) : Rational(term[1].get<long>());
          sp[e] += q;
        }
        per_branch.push_back(std::move(sp));
      }
      c.generators.push_back(std::move(per_branch));
    }
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad curve: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad curve: ") + e.what());
  }
}

inline json to_json(const ingest::CurvePresentation& c) {
  json gens = json::array();
  for (const auto& g : c.generators) {
    json per = json::array();
    for (const auto& series : g) {
      json terms = json::array();
      for (const auto& [e, q] : series) terms.push_back(json::array({e, q.get_str()}));
      per.push_back(std::move(terms));
    }
    gens.push_back(std::move(per));
  }
  json j = {{"branches", c.branches}, {"generators", std::move(gens)}};
  j["field"] = c.field.rational() ? json("Q") : json({{"p", *c.field.prime}});
  if (!c.name.empty()) j["name"] = c.name;
  return j;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace goodsg::io
