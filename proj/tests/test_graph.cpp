#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "paleytype/graph.hpp"
#include "support.hpp"

using namespace paleytype;

namespace {

Graph k2_squared() { return kronecker_product(complete_graph(2), complete_graph(2)); }

}  // namespace

TEST_CASE("Gamma_N matches the difference-set oracle") {
  for (const std::vector<std::int64_t> s : {std::vector<std::int64_t>{5}, {13}, {5, 13}, {13, 17}}) {
    const PrimeSet ps = validate_primes(s);
    const Graph g = build_paley_type(ps);
    CHECK(oracle::to_matrix(g) == oracle::paley_matrix(ps.modulus()));
    CHECK(g.label() == "paley_" + ps.to_string());
  }
  const Graph g5 = build_paley_type(validate_primes({5}));
  CHECK(oracle::to_matrix(g5) == oracle::to_matrix(cycle_graph(5)));
  CHECK(is_regular(build_paley_type(validate_primes({13}))) == 6);
  const Graph g65 = build_paley_type(validate_primes({5, 13}));
  CHECK(g65.order() == 65);
  CHECK(is_regular(g65) == 12);
  CHECK(g65.edge_count() == 390);
}

TEST_CASE("Graph construction rejects loops and bad endpoints") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_ERRC(Graph::from_edges(3, loop), Errc::InvalidArgument);
  const std::vector<Edge> out{{0, 3}};
  CHECK_ERRC(Graph::from_edges(3, out), Errc::InvalidArgument);
  const std::vector<Edge> dup{{0, 1}, {1, 0}, {0, 1}};
  CHECK(Graph::from_edges(3, dup).edge_count() == 1);
}

TEST_CASE("Kronecker product") {
  const Graph k = k2_squared();
  CHECK(k.order() == 4);
  CHECK(k.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
  const Graph c = kronecker_product(cycle_graph(5), cycle_graph(5));
  CHECK(c.order() == 25);
  CHECK(is_regular(c) == 4);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = oracle::random_graph(2 + trial % 4, 0.5, rng);
    const auto b = oracle::random_graph(3 + trial % 3, 0.6, rng);
    CHECK(oracle::to_matrix(kronecker_product(oracle::to_graph(a), oracle::to_graph(b))) == oracle::kronecker(a, b));
  }
}

TEST_CASE("CRT isomorphism onto the product of Paley factors") {
  const PrimeSet p65 = validate_primes({5, 13});
  const IsoWitness w = crt_isomorphism(p65);
  CHECK(w.verified);
  const Graph product = kronecker_product(build_paley_type(validate_primes({5})), build_paley_type(validate_primes({13})));
  CHECK(isomorphism_discrepancies(build_paley_type(p65), product, w.mapping) == 0);
  CHECK(oracle::to_matrix(paley_factor_product(p65)) == oracle::to_matrix(product));
  for (int z = 0; z < 65; ++z) CHECK(w.mapping[z] == (z % 5) * 13 + z % 13);

  const IsoWitness w13 = crt_isomorphism(validate_primes({13}));
  CHECK(w13.verified);
  for (int z = 0; z < 13; ++z) CHECK(w13.mapping[z] == z);

  CHECK(crt_isomorphism(validate_primes({13, 17})).verified);
  CHECK(crt_isomorphism(validate_primes({5, 13, 17})).verified);

  // The identity is not an isomorphism onto the product.
  Permutation id(65);
  for (int i = 0; i < 65; ++i) id[i] = i;
  CHECK(!verify_isomorphism(build_paley_type(p65), product, id));
  CHECK(isomorphism_discrepancies(build_paley_type(p65), product, id) > 0);
}

TEST_CASE("regularity, connectivity, Euler") {
  const Graph g65 = build_paley_type(validate_primes({5, 13}));
  CHECK(is_connected(g65));
  CHECK(is_eulerian(g65));
  CHECK(is_regular(cycle_graph(5)) == 2);
  CHECK(is_regular(k2_squared()) == 1);
  CHECK(!is_connected(k2_squared()));
  CHECK(!is_eulerian(k2_squared()));
  CHECK(is_connected(build_paley_type(validate_primes({13}))));
  CHECK(!is_regular(path_graph(3)));
  CHECK(degree_sequence(path_graph(3)) == std::vector<int>{1, 2, 1});
}

TEST_CASE("vertex and edge connectivity") {
  CHECK(vertex_connectivity(cycle_graph(5)) == 2);
  CHECK(edge_connectivity(cycle_graph(5)) == 2);
  const Graph g13 = build_paley_type(validate_primes({13}));
  CHECK(vertex_connectivity(g13) == 6);
  CHECK(edge_connectivity(g13) == 6);
  const Graph g65 = build_paley_type(validate_primes({5, 13}));
  CHECK(vertex_connectivity(g65) == 12);
  CHECK(edge_connectivity(g65) == 12);
  CHECK(vertex_connectivity(k2_squared()) == 0);
  CHECK(edge_connectivity(k2_squared()) == 0);
  CHECK(vertex_connectivity(complete_graph(5)) == 4);
  CHECK(vertex_connectivity(path_graph(4)) == 1);
  CHECK_ERRC(vertex_connectivity(g65, 64), Errc::TooLarge);
  CHECK_ERRC(edge_connectivity(g65, 64), Errc::TooLarge);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const auto m = oracle::random_graph(5 + trial % 7, 0.3 + 0.02 * trial, rng);
    const Graph g = oracle::to_graph(m);
    CHECK(vertex_connectivity(g) == oracle::vertex_connectivity_by_subsets(m));
    CHECK(edge_connectivity(g) == oracle::edge_connectivity_by_cuts(m));
  }
}

TEST_CASE("R-thin") {
  CHECK(!is_r_thin(cycle_graph(4)));
  CHECK(is_r_thin(build_paley_type(validate_primes({5, 13}))));
  CHECK(is_r_thin(build_paley_type(validate_primes({13}))));
  const auto m = oracle::paley_matrix(13);
  for (int u = 0; u < 13; ++u)
    for (int v = u + 1; v < 13; ++v) CHECK(m[u] != m[v]);
}

TEST_CASE("strong regularity") {
  const auto srg13 = is_strongly_regular(build_paley_type(validate_primes({13})));
  REQUIRE(srg13);
  CHECK(srg13->lambda == 2);
  CHECK(srg13->mu == 3);
  const auto c5 = is_strongly_regular(cycle_graph(5));
  REQUIRE(c5);
  CHECK(c5->lambda == 0);
  CHECK(c5->mu == 1);

  const Graph g65 = build_paley_type(validate_primes({5, 13}));
  const StrongRegularity sr = strong_regularity(g65);
  CHECK(!sr.parameters);
  REQUIRE(sr.witness);
  const auto& [a, b] = *sr.witness;
  CHECK(a.common != b.common);
  CHECK(g65.adjacent(a.u, a.v) == sr.witness_adjacent);
  CHECK(g65.adjacent(b.u, b.v) == sr.witness_adjacent);
  CHECK(g65.common_neighbors(a.u, a.v) == a.common);
  CHECK(g65.common_neighbors(b.u, b.v) == b.common);
  // Adjacent pairs all have zero common neighbors, so the witness is a non-adjacent pair.
  for (Vertex v : g65.neighbors(0)) CHECK(g65.common_neighbors(0, v) == 0);
  CHECK(!sr.witness_adjacent);

  CHECK(!is_strongly_regular(path_graph(3)));
}

TEST_CASE("self-complementarity certificates") {
  const SelfComplementCertificate c65 = self_complement_certificate(build_paley_type(validate_primes({5, 13})));
  CHECK(c65.refuted);
  CHECK(c65.reason == "degree 12 vs complement degree 52");
  CHECK(is_self_complementary_refuted(build_paley_type(validate_primes({13, 17}))));
  CHECK(self_complement_certificate(build_paley_type(validate_primes({13, 17}))).reason ==
        "degree 48 vs complement degree 172");
  CHECK_ERRC(is_self_complementary_refuted(build_paley_type(validate_primes({13}))), Errc::Inconclusive);
  CHECK(!self_complement_certificate(build_paley_type(validate_primes({13}))).refuted);
}

TEST_CASE("translations preserve Gamma_N") {
  const Graph g = build_paley_type(validate_primes({5, 13}));
  for (Vertex t = 0; t < 65; ++t) CHECK(translation_preserves(g, t));
  CHECK(!translation_preserves(path_graph(3), 1));
}
