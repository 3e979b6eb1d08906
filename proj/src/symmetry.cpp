#include "paleytype/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "paleytype/error.hpp"
#include "paleytype/spectra.hpp"

namespace paleytype {

Permutation AffineMap::to_permutation() const {
  Permutation p(static_cast<std::size_t>(modulus));
  for (Vertex x = 0; x < static_cast<Vertex>(modulus); ++x) p[static_cast<std::size_t>(x)] = (*this)(x);
  return p;
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
  const std::int64_t n = outer.modulus;
  return {outer.scale * inner.scale % n, (outer.scale * inner.shift + outer.shift) % n, n};
}

std::int64_t automorphism_formula(const PrimeSet& ps) noexcept {
  return ps.modulus() * euler_phi(ps) / (std::int64_t{1} << ps.size());
}

std::vector<AffineMap> affine_automorphisms(const PrimeSet& ps) {
  const std::int64_t n = ps.modulus();
  std::vector<AffineMap> out;
  for (std::int64_t s : quadratic_residues(ps))
    for (std::int64_t t = 0; t < n; ++t) out.push_back({s, t, n});
  return out;
}

std::vector<AffineMap> affine_generators(const PrimeSet& ps) {
  const std::int64_t n = ps.modulus();
  std::vector<AffineMap> out{{1, 1 % n, n}};
  for (std::int64_t s : quadratic_residues(ps))
    if (s != 1) out.push_back({s, 0, n});
  return out;
}

bool preserves_adjacency(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) return false;
  return true;
}

namespace {

bool affine_preserves(const Graph& g, const AffineMap& m) {
  for (auto [u, v] : g.edges())
    if (!g.adjacent(m(u), m(v))) return false;
  return true;
}

}  // namespace

AffineFamilyCheck verify_affine_family(const PrimeSet& ps, const Graph& g, int exhaustive_limit) {
  const auto maps = affine_automorphisms(ps);
  AffineFamilyCheck check;
  check.count = static_cast<std::int64_t>(maps.size());

  // (s, t) is recovered from the images of 0 and 1.
  std::set<std::pair<Vertex, Vertex>> images;
  for (const auto& m : maps) images.emplace(m(0), m(1 % static_cast<Vertex>(m.modulus)));
  check.distinct = images.size() == maps.size();

  check.all_preserve = true;
  if (g.order() <= exhaustive_limit) {
    check.exhaustive = true;
    for (const auto& m : maps) {
      ++check.maps_checked;
      if (!affine_preserves(g, m)) {
        check.all_preserve = false;
        break;
      }
    }
    return check;
  }

  // s * QR_N = QR_N for every multiplier s, plus full edge checks on the
  // pure multiplications and on every translation composed with s = 1.
  const ResidueTable table(ps);
  const std::int64_t n = ps.modulus();
  for (std::int64_t s : table.residues())
    for (std::int64_t q : table.residues())
      if (!table.contains(s * q % n)) check.all_preserve = false;
  for (const auto& m : maps) {
    if (m.shift != 0 && m.scale != 1 && m.shift != 1) continue;
    ++check.maps_checked;
    if (!affine_preserves(g, m)) {
      check.all_preserve = false;
      break;
    }
  }
  return check;
}

namespace {

using Coloring = std::vector<int>;

// Colour refinement run on two colourings of the same graph in lockstep, so
// that colour ids mean the same thing on both sides. Colours are the ranks of
// (old colour, neighbour colour histogram) signatures.
class PairedRefiner {
 public:
  PairedRefiner(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  std::uint64_t nodes() const noexcept { return nodes_; }

  /// Refines both colourings to a common stable state. False when the
  /// colour-class statistics diverge, i.e. no automorphism maps one
  /// individualization onto the other.
  bool refine(Coloring& left, Coloring& right) {
    if (++nodes_ > budget_)
      throw Error(Errc::BudgetExceeded, "automorphism search exceeded " + std::to_string(budget_) +
                                            " nodes");
    int colors = count_colors(left);
    while (true) {
      auto ls = signatures(left);
      auto rs = signatures(right);
      std::vector<std::vector<int>> lsorted = ls;
      std::vector<std::vector<int>> rsorted = rs;
      std::sort(lsorted.begin(), lsorted.end());
      std::sort(rsorted.begin(), rsorted.end());
      if (lsorted != rsorted) return false;
      lsorted.erase(std::unique(lsorted.begin(), lsorted.end()), lsorted.end());
      auto rank = [&](const std::vector<int>& sig) {
        return static_cast<int>(std::lower_bound(lsorted.begin(), lsorted.end(), sig) - lsorted.begin());
      };
      for (std::size_t v = 0; v < left.size(); ++v) {
        left[v] = rank(ls[v]);
        right[v] = rank(rs[v]);
      }
      const int next = static_cast<int>(lsorted.size());
      if (next == colors) return true;
      colors = next;
    }
  }

 private:
  static int count_colors(const Coloring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  std::vector<std::vector<int>> signatures(const Coloring& c) {
    const int n = g_.order();
    counts_.assign(static_cast<std::size_t>(count_colors(c)), 0);
    std::vector<std::vector<int>> sigs(static_cast<std::size_t>(n));
    std::vector<int> touched;
    for (Vertex v = 0; v < n; ++v) {
      touched.clear();
      for (Vertex w : g_.neighbors(v)) {
        const int col = c[static_cast<std::size_t>(w)];
        if (counts_[static_cast<std::size_t>(col)]++ == 0) touched.push_back(col);
      }
      std::sort(touched.begin(), touched.end());
      auto& sig = sigs[static_cast<std::size_t>(v)];
      sig.reserve(1 + 2 * touched.size());
      sig.push_back(c[static_cast<std::size_t>(v)]);
      for (int col : touched) {
        sig.push_back(col);
        sig.push_back(counts_[static_cast<std::size_t>(col)]);
        counts_[static_cast<std::size_t>(col)] = 0;
      }
    }
    return sigs;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> counts_;
};

bool is_discrete(const Coloring& c) {
  std::vector<char> seen(c.size(), 0);
  for (int col : c) {
    if (seen[static_cast<std::size_t>(col)]) return false;
    seen[static_cast<std::size_t>(col)] = 1;
  }
  return true;
}

// Lowest-indexed vertex of the largest non-singleton cell (ties: lowest colour).
Vertex target_vertex(const Coloring& c) {
  std::vector<int> size(c.size(), 0);
  for (int col : c) ++size[static_cast<std::size_t>(col)];
  int best_col = -1;
  for (std::size_t col = 0; col < size.size(); ++col)
    if (size[col] > 1 && (best_col < 0 || size[col] > size[static_cast<std::size_t>(best_col)]))
      best_col = static_cast<int>(col);
  for (std::size_t v = 0; v < c.size(); ++v)
    if (c[v] == best_col) return static_cast<Vertex>(v);
  return -1;
}

void individualize(Coloring& c, Vertex v) {
  c[static_cast<std::size_t>(v)] = *std::max_element(c.begin(), c.end()) + 1;
}

// Depth-first search for one automorphism mapping the left individualization
// sequence onto the right one.
std::optional<Permutation> find_extension(const Graph& g, PairedRefiner& refiner, Coloring left,
                                          Coloring right) {
  if (!refiner.refine(left, right)) return std::nullopt;
  if (is_discrete(left)) {
    Permutation perm(left.size());
    std::vector<Vertex> by_color(left.size());
    for (std::size_t v = 0; v < right.size(); ++v) by_color[static_cast<std::size_t>(right[v])] = static_cast<Vertex>(v);
    for (std::size_t v = 0; v < left.size(); ++v) perm[v] = by_color[static_cast<std::size_t>(left[v])];
    if (preserves_adjacency(g, perm)) return perm;
    return std::nullopt;
  }
  const Vertex v = target_vertex(left);
  const int cell = left[static_cast<std::size_t>(v)];
  for (std::size_t w = 0; w < right.size(); ++w) {
    if (right[w] != cell) continue;
    Coloring l = left;
    Coloring r = right;
    individualize(l, v);
    individualize(r, static_cast<Vertex>(w));
    if (auto perm = find_extension(g, refiner, std::move(l), std::move(r))) return perm;
  }
  return std::nullopt;
}

// Union-find over vertices, merged along the cycles of found automorphisms.
class Orbits {
 public:
  explicit Orbits(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void merge(const Permutation& p) {
    for (std::size_t v = 0; v < p.size(); ++v) {
      int a = find(static_cast<int>(v));
      int b = find(p[v]);
      if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

AutSearchResult search_automorphisms(const Graph& g, std::uint64_t budget) {
  AutSearchResult result;
  result.count = 1;
  const int n = g.order();
  if (n == 0) return result;
  PairedRefiner refiner(g, budget);
  Coloring base(static_cast<std::size_t>(n), 0);
  while (true) {
    Coloring mirror = base;
    refiner.refine(base, mirror);
    if (is_discrete(base)) break;
    const Vertex b = target_vertex(base);
    const int cell = base[static_cast<std::size_t>(b)];

    // Orbit of b under the stabilizer of the earlier base points.
    Orbits orbits(n);
    std::uint64_t orbit = 0;
    for (Vertex c = 0; c < n; ++c) {
      if (base[static_cast<std::size_t>(c)] != cell) continue;
      if (orbits.find(c) == orbits.find(b)) {
        ++orbit;
        continue;
      }
      Coloring left = base;
      Coloring right = base;
      individualize(left, b);
      individualize(right, c);
      if (auto perm = find_extension(g, refiner, std::move(left), std::move(right))) {
        orbits.merge(*perm);
        result.generators.push_back(std::move(*perm));
        ++orbit;
      }
    }
    result.base.push_back(b);
    result.orbit_sizes.push_back(orbit);
    result.count *= orbit;
    individualize(base, b);
  }
  result.nodes = refiner.nodes();
  return result;
}

std::uint64_t brute_force_aut_count(const Graph& g, std::uint64_t budget) {
  return search_automorphisms(g, budget).count;
}

Transitivity transitivity_check(const Graph& g, std::span<const Permutation> auts) {
  const int n = g.order();
  Transitivity out;
  if (n == 0) return out;

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<Vertex> q;
  seen[0] = 1;
  q.push(0);
  int reached = 1;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (const auto& p : auts) {
      const Vertex w = p[static_cast<std::size_t>(v)];
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  out.vertex_transitive = reached == n;

  if (g.edge_count() == 0) {
    out.edge_transitive = true;
    return out;
  }
  if (g.degree(0) == 0) return out;
  const auto nn = static_cast<std::size_t>(n);
  auto key = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a) * nn + static_cast<std::size_t>(b);
  };
  std::vector<char> edge_seen(nn * nn, 0);
  std::queue<Edge> eq;
  const Edge start{0, g.neighbors(0).front()};
  edge_seen[key(start.first, start.second)] = 1;
  eq.push(start);
  std::size_t edges_reached = 1;
  while (!eq.empty()) {
    const auto [a, b] = eq.front();
    eq.pop();
    for (const auto& p : auts) {
      const Vertex x = p[static_cast<std::size_t>(a)];
      const Vertex y = p[static_cast<std::size_t>(b)];
      const std::size_t k = key(x, y);
      if (!edge_seen[k]) {
        edge_seen[k] = 1;
        ++edges_reached;
        eq.push({x, y});
      }
    }
  }
  out.edge_transitive = edges_reached == g.edge_count();
  return out;
}

HammackReport hammack_assembly(const PrimeSet& ps, std::uint64_t budget) {
  return hammack_assembly_with_count(ps, brute_force_aut_count(build_paley_type(ps), budget), budget);
}

HammackReport hammack_assembly_with_count(const PrimeSet& ps, std::uint64_t product_count,
                                          std::uint64_t budget) {
  HammackReport r;
  const Graph gn = build_paley_type(ps);
  r.connected = is_connected(gn);
  r.degree = is_regular(gn).value_or(0);
  r.least_eigenvalue = closed_form_spectrum(ps).entries.back().value;
  r.non_bipartite = r.least_eigenvalue > -static_cast<double>(r.degree);
  r.r_thin = is_r_thin(gn);
  r.product_count = product_count;
  std::uint64_t product = 1;
  for (std::int64_t p : ps.primes()) {
    const std::uint64_t c = brute_force_aut_count(build_paley_type(validate_primes({p})), budget);
    r.factor_counts.push_back(c);
    product *= c;
  }
  r.holds = r.connected && r.non_bipartite && r.r_thin && product == r.product_count;
  return r;
}

bool hammack_assembly_check(const PrimeSet& ps, std::uint64_t budget) {
  const HammackReport r = hammack_assembly(ps, budget);
  if (!r.connected) throw Error(Errc::PreconditionFailed, "graph is not connected");
  if (!r.non_bipartite)
    throw Error(Errc::PreconditionFailed, "least eigenvalue equals -degree; graph is bipartite");
  if (!r.r_thin) throw Error(Errc::PreconditionFailed, "graph is not R-thin");
  return r.holds;
}

AutReport aut_report(const PrimeSet& ps, int brute_force_limit, std::uint64_t budget) {
  AutReport r;
  const Graph g = build_paley_type(ps);
  r.formula_count = automorphism_formula(ps);
  const AffineFamilyCheck family = verify_affine_family(ps, g);
  r.affine_count = family.count;
  r.affine_verified = family.distinct && family.all_preserve;
  if (g.order() <= brute_force_limit) r.brute_force_count = brute_force_aut_count(g, budget);
  std::vector<Permutation> gens;
  for (const auto& m : affine_generators(ps)) gens.push_back(m.to_permutation());
  const Transitivity t = transitivity_check(g, gens);
  r.vertex_transitive = t.vertex_transitive;
  r.edge_transitive = t.edge_transitive;
  return r;
}

}  // namespace paleytype
