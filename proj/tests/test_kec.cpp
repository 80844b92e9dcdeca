#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using lmss::Graph;
using lmss::Matching;
using lmss::VertexSet;
using testutil::vs;

namespace {

void check_certificate(const Graph& g, const lmss::KECertificate& cert) {
  REQUIRE(lmss::is_stable(g, cert.stable_set));
  REQUIRE(cert.stable_set.size() == lmss::alpha_value(g));
  Matching m = Matching::from(g, cert.matching);
  REQUIRE(m.size() == lmss::matching_number(g));
  REQUIRE(cert.stable_set.size() + m.size() == g.vertex_count());
}

}  // namespace

TEST_CASE("recognition by stable set plus matching covering the graph") {
  Graph h = lmss::fig2_h();
  auto cert = lmss::is_koenig_egervary(h);
  REQUIRE(cert.has_value());
  REQUIRE(cert->stable_set == vs(h, {"a", "b", "c", "d"}));
  REQUIRE(cert->matching.size() == 3);
  check_certificate(h, *cert);

  REQUIRE_FALSE(lmss::is_koenig_egervary(lmss::fig2_g()).has_value());
  REQUIRE_FALSE(lmss::is_koenig_egervary(testutil::cycle_graph(5)).has_value());

  auto c6 = lmss::is_koenig_egervary(lmss::fig6_g());
  REQUIRE(c6.has_value());
  check_certificate(lmss::fig6_g(), *c6);

  auto k2 = lmss::is_koenig_egervary(testutil::complete_graph(2));
  REQUIRE(k2.has_value());
  check_certificate(testutil::complete_graph(2), *k2);

  auto c4 = lmss::is_koenig_egervary(testutil::cycle_graph(4));
  REQUIRE(c4.has_value());
  check_certificate(testutil::cycle_graph(4), *c4);
}

TEST_CASE("bipartite graphs are always recognized") {
  std::mt19937_64 rng(3101);
  for (int t = 0; t < 40; ++t) {
    Graph g = testutil::random_bipartite(rng, 1 + t % 5, 1 + (t / 5) % 5,
                                         0.2 + 0.15 * (t % 5));
    auto cert = lmss::is_koenig_egervary(g);
    REQUIRE(cert.has_value());
    check_certificate(g, *cert);
  }
}

TEST_CASE("recognition agrees with the subset oracles") {
  std::mt19937_64 rng(3201);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(rng, 1 + t % 9, 0.1 + 0.08 * (t % 11));
    oracle::Mini m = oracle::mini(g);
    bool want = oracle::alpha(m) + oracle::mu(m) == g.vertex_count();
    auto cert = lmss::is_koenig_egervary(g);
    REQUIRE(cert.has_value() == want);
    if (cert) check_certificate(g, *cert);
  }
}

TEST_CASE("maximum matchings of recognized graphs live in the cut") {
  Graph h = lmss::fig2_h();
  lmss::VerificationReport rep = lmss::verify_matching_cut_lemma(h);
  REQUIRE(rep.status == lmss::CheckStatus::pass);
  REQUIRE(rep.check == "lemma-match");
  REQUIRE(rep.graph_id == "FIG2_H");
  std::size_t pairs = lmss::enumerate_maximum_stable_sets(h).size() *
                      lmss::enumerate_maximum_matchings(h).size();
  REQUIRE(rep.instances.size() == pairs);
  for (const auto& inst : rep.instances)
    REQUIRE(inst.outcome == lmss::InstanceOutcome::pass);
  REQUIRE(rep.violations().empty());
}

TEST_CASE("the lemma does not apply to unrecognized graphs") {
  Graph g = lmss::fig2_g();
  lmss::VerificationReport rep = lmss::verify_matching_cut_lemma(g);
  REQUIRE(rep.status == lmss::CheckStatus::not_applicable);
  REQUIRE(rep.instances.size() == 1);
  const auto& inst = rep.instances[0];
  REQUIRE(inst.outcome == lmss::InstanceOutcome::informational);
  REQUIRE(inst.stable_set == vs(g, {"u", "x"}));
  REQUIRE(inst.matching.has_value());
  REQUIRE(*inst.matching == testutil::es(g, {{"x", "z"}, {"y", "v"}}));

  // The recorded pair must fail the containment or the size count on its own.
  VertexSet rest = g.all_vertices().difference(inst.stable_set);
  lmss::EdgeSet cut = lmss::cut_set(g, inst.stable_set, rest);
  Matching m = Matching::from(g, *inst.matching);
  bool contained = m.edges().subset_of(cut);
  bool sized = m.size() == g.vertex_count() - inst.stable_set.size();
  REQUIRE((!contained || !sized));
}

TEST_CASE("the lemma holds on cycles and trivial graphs") {
  lmss::VerificationReport c4 = lmss::verify_matching_cut_lemma(
      testutil::cycle_graph(4));
  REQUIRE(c4.status == lmss::CheckStatus::pass);
  REQUIRE(c4.instances.size() == 4);

  lmss::VerificationReport k1 = lmss::verify_matching_cut_lemma(
      testutil::complete_graph(1));
  REQUIRE(k1.status == lmss::CheckStatus::pass);
  REQUIRE(k1.instances.size() == 1);
  REQUIRE(k1.instances[0].outcome == lmss::InstanceOutcome::pass);

  lmss::VerificationReport loose = lmss::verify_matching_cut_lemma(
      lmss::build_graph({"a", "b", "c"}, {}));
  REQUIRE(loose.status == lmss::CheckStatus::pass);
  REQUIRE(loose.instances.size() == 1);
}

TEST_CASE("lemma status tracks recognition on random graphs") {
  std::mt19937_64 rng(3301);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_graph(rng, 1 + t % 7, 0.15 + 0.09 * (t % 9));
    bool ke = lmss::is_koenig_egervary(g).has_value();
    lmss::VerificationReport rep = lmss::verify_matching_cut_lemma(g);
    if (ke) {
      REQUIRE(rep.status == lmss::CheckStatus::pass);
      for (const auto& inst : rep.instances)
        REQUIRE(inst.outcome == lmss::InstanceOutcome::pass);
    } else {
      REQUIRE(rep.status == lmss::CheckStatus::not_applicable);
      REQUIRE(rep.instances.size() == 1);
      REQUIRE(rep.instances[0].outcome ==
              lmss::InstanceOutcome::informational);
    }
  }
}
