#include <catch_amalgamated.hpp>

#include <filesystem>
#include <random>

#include "goodsg/goodsg.hpp"
#include "oracles.hpp"

using namespace goodsg;
namespace fs = std::filesystem;

namespace {

struct Item {
  std::string file;
  bool curve = false;
  ingest::CurvePresentation presentation;
  GoodSemigroup semigroup;
};

const std::vector<Item>& corpus() {
  static const std::vector<Item> items = [] {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(GOODSG_CORPUS_DIR))
      if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<Item> out;
    for (const auto& f : files) {
      const auto j = io::read_json_file(f.string());
      Item it;
      it.file = f.filename().string();
      if (io::is_curve(j)) {
        it.curve = true;
        it.presentation = io::curve_from_json(j);
        it.semigroup = ingest::compute_value_semigroup(it.presentation).semigroup;
      } else {
        it.semigroup = io::semigroup_from_json(j);
      }
      out.push_back(std::move(it));
    }
    return out;
  }();
  return items;
}

}  // namespace

TEST_CASE("corpus semigroups validate and round-trip") {
  REQUIRE(corpus().size() >= 12);
  for (const auto& it : corpus()) {
    INFO(it.file);
    CHECK(validate(it.semigroup).ok());
    const auto back = io::semigroup_from_json(io::to_json(it.semigroup));
    CHECK(back.same_elements(it.semigroup));
  }
}

TEST_CASE("canonical ideals of corpus items are good relative ideals containing S") {
  for (const auto& it : corpus()) {
    INFO(it.file);
    const auto& S = it.semigroup;
    const auto K = canonical_ideal(S);
    CHECK(validate(K).ok());
    for (const auto& t : S.small()) CHECK(K.contains(t));
    // K agrees with a direct Δ-scan on the margin box.
    const std::size_t s = S.branches();
    const ValueVector gamma = frobenius(S);
    auto in_s = [&](const ValueVector& a) { return S.contains(a); };
    for (const auto& a : Box(-1 * ValueVector::ones(s), S.conductor() + ValueVector::ones(s)))
      CHECK(K.contains(a) == oracle::delta_empty(in_s, S.conductor(), gamma - a));
  }
}

TEST_CASE("classification invariants hold on the corpus") {
  for (const auto& it : corpus()) {
    INFO(it.file);
    const auto c = classify(it.semigroup);
    CHECK(c.delta_invariant == c.eta + c.mu);
    CHECK(c.kunz == (c.eta == 1));
    CHECK(c.nearly_gorenstein_point == (c.mu == 1));
    CHECK(c.gorenstein == (c.eta == 0));
    CHECK(c.eta >= 0);
    CHECK(c.mu >= 0);
  }
}

TEST_CASE("noether reports are internally consistent on the corpus") {
  for (const auto& it : corpus()) {
    INFO(it.file);
    for (Order mode : {Order::lt_neq, Order::lt_all}) {
      const auto rep = noether_check(it.semigroup, mode);
      const auto& ix = rep.indices;
      CHECK(rep.recipe_applicable == (ix.m >= 1 && ix.n.has_value() && *ix.n <= ix.m + 1));
      CHECK(rep.full_chain.has_value() == !rep.has_diagnostic("dp-failed"));
      const ValueVector alpha = multiplicity(it.semigroup);
      if (mode == Order::lt_neq)
        CHECK(rep.full_chain.has_value() == (weight(alpha) >= 3 || it.semigroup.conductor() == alpha));
      if (rep.full_chain) {
        CHECK(verify_certificate(it.semigroup, *rep.full_chain));
        CHECK(static_cast<Int>(rep.full_chain->points.size()) == rep.target_length);
      }
      if (rep.part1_chain) {
        CHECK(verify_certificate(it.semigroup, *rep.part1_chain));
        CHECK(rep.has_diagnostic("cross-check"));
      }
      CHECK_FALSE(rep.has_diagnostic("equaaa-failed"));
      CHECK_FALSE(rep.has_diagnostic("equddk-failed"));
      const auto j = io::to_json(rep);
      if (rep.full_chain) CHECK(io::certificate_from_json(j["full_chain"]) == *rep.full_chain);
    }
  }
}

TEST_CASE("ingested semigroups agree with the ring on random probes") {
  std::mt19937_64 rng(99);
  for (const auto& it : corpus()) {
    if (!it.curve) continue;
    INFO(it.file);
    const auto res = ingest::compute_value_semigroup(it.presentation);
    ingest::with_field(it.presentation, [&](const auto& F) {
      const auto V = ingest::subalgebra_closure(F, it.presentation, 100000, res.truncation);
      for (int t = 0; t < 100; ++t) {
        ValueVector a(res.truncation.size());
        for (std::size_t i = 0; i < a.size(); ++i)
          a[i] = std::uniform_int_distribution<Int>(0, res.truncation[i])(rng);
        CHECK(ingest::value_membership(V, a) == it.semigroup.contains(a));
      }
      return 0;
    });
    CHECK(ingest::ring_colengths(it.presentation, it.semigroup) == classify(it.semigroup).delta_invariant);
  }
}

TEST_CASE("ingest is deterministic") {
  for (const auto& it : corpus()) {
    if (!it.curve) continue;
    const auto a = io::to_json(ingest::compute_value_semigroup(it.presentation)).dump();
    const auto b = io::to_json(ingest::compute_value_semigroup(it.presentation)).dump();
    CHECK(a == b);
  }
}
