#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paleytype/numtheory.hpp"

namespace paleytype {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Permutation = std::vector<Vertex>;

/// Immutable undirected simple graph on vertices 0..V-1.
///
/// Adjacency is stored as a dense bitmap (one row of 64-bit words per vertex)
/// alongside sorted neighbor lists. Construction rejects self-loops and
/// asymmetric input, so every Graph is a valid simple graph.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges are merged. Throws Error{InvalidArgument} on loops or
  /// endpoints outside [0, order).
  static Graph from_edges(int order, std::span<const Edge> edges, std::string label = {});

  /// Adds u~v for every u < v with adjacent(u, v) true.
  template <class Pred>
  static Graph from_predicate(int order, Pred&& adjacent, std::string label = {}) {
    Graph g(order, std::move(label));
    for (Vertex u = 0; u < order; ++u)
      for (Vertex v = u + 1; v < order; ++v)
        if (adjacent(u, v)) g.set_edge(u, v);
    g.finish();
    return g;
  }

  int order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::string& label() const noexcept { return label_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (static_cast<std::size_t>(v) >> 6)] >>
            (static_cast<unsigned>(v) & 63)) & 1u;
  }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const noexcept {
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }

  /// Bitmap row of v: words_per_row() words, bit w set iff v ~ w.
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// |N(u) & N(v)|.
  int common_neighbors(Vertex u, Vertex v) const noexcept;

 private:
  Graph(int order, std::string label);
  void set_edge(Vertex u, Vertex v) noexcept;
  void finish();

  int order_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::string label_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Paley-type graph on Z_N: a ~ b iff a - b mod N lies in QR_N.
Graph build_paley_type(const PrimeSet& ps);
Graph build_paley_type(const ResidueTable& table);

/// Kronecker (tensor) product. Vertex (x, y) is indexed x * h.order() + y;
/// (x,y) ~ (x',y') iff x ~ x' in g and y ~ y' in h.
Graph kronecker_product(const Graph& g, const Graph& h);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);

struct IsoWitness {
  Permutation mapping;
  bool verified = false;
};

/// True iff `mapping` is a bijection sending edges of g onto edges of h and
/// non-edges onto non-edges. Exhaustive over all vertex pairs.
bool verify_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> mapping);

/// Number of vertex pairs whose adjacency differs between g and mapping(g) in h.
std::size_t isomorphism_discrepancies(const Graph& g, const Graph& h,
                                      std::span<const Vertex> mapping);

/// z -> (z mod p1, ..., z mod pn) flattened row-major into the vertex
/// indexing of Gamma_p1 x ... x Gamma_pn. Throws Error{VerificationFailed} if
/// the exhaustive check fails.
IsoWitness crt_isomorphism(const PrimeSet& ps);

/// Left-to-right Kronecker product of the single-prime Paley graphs.
Graph paley_factor_product(const PrimeSet& ps);

std::vector<int> degree_sequence(const Graph& g);
std::optional<int> is_regular(const Graph& g);
bool is_connected(const Graph& g);
/// Connected with every degree even.
bool is_eulerian(const Graph& g);

/// Largest order accepted by the connectivity routines by default.
inline constexpr int kDefaultConnectivityGuard = 300;

/// Exact edge connectivity via unit-capacity max-flow from vertex 0 to every
/// other vertex. Throws Error{TooLarge} above `guard` vertices.
int edge_connectivity(const Graph& g, int guard = kDefaultConnectivityGuard);

/// Exact vertex connectivity by max-flow on the vertex-split network, using
/// a minimum-degree vertex and its neighborhood as the source set.
int vertex_connectivity(const Graph& g, int guard = kDefaultConnectivityGuard);

/// All open neighborhoods pairwise distinct.
bool is_r_thin(const Graph& g);

struct SrgParameters {
  int lambda = 0;
  int mu = 0;
};

struct PairCount {
  Vertex u = 0;
  Vertex v = 0;
  int common = 0;
};

/// Outcome of the common-neighbor scan. When the graph is not strongly
/// regular, `witness` holds two pairs of the same adjacency type whose
/// common-neighbor counts differ.
struct StrongRegularity {
  std::optional<SrgParameters> parameters;
  std::optional<std::pair<PairCount, PairCount>> witness;
  bool witness_adjacent = false;
};

StrongRegularity strong_regularity(const Graph& g);
std::optional<SrgParameters> is_strongly_regular(const Graph& g);

struct SelfComplementCertificate {
  bool refuted = false;
  std::string reason;
};

/// Edge-count and degree-sequence certificates against self-complementarity.
SelfComplementCertificate self_complement_certificate(const Graph& g);

/// True when a certificate refutes self-complementarity; throws
/// Error{Inconclusive} when the certificates agree.
bool is_self_complementary_refuted(const Graph& g);

/// Whether x -> x + t mod V preserves adjacency.
bool translation_preserves(const Graph& g, Vertex t);

}  // namespace paleytype
