#include "paleytype/cycles.hpp"

#include "paleytype/error.hpp"

namespace paleytype {

std::string_view to_string(CycleStatus s) noexcept {
  switch (s) {
    case CycleStatus::Found: return "Found";
    case CycleStatus::ExhaustedNoCycle: return "ExhaustedNoCycle";
    case CycleStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < k; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) return false;
  return true;
}

namespace {

// Cycles on k vertices whose smallest vertex is `start`.
CycleStatus search_from(const Graph& g, int k, Vertex start, std::uint64_t budget,
                        std::uint64_t& nodes, std::vector<Vertex>& path) {
  std::vector<char> visited(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::size_t> next{0};
  path.assign(1, start);
  visited[static_cast<std::size_t>(start)] = 1;
  while (!path.empty()) {
    const int len = static_cast<int>(path.size());
    if (len == k && g.adjacent(path.back(), start)) return CycleStatus::Found;
    bool advanced = false;
    if (len < k) {
      const auto nb = g.neighbors(path.back());
      std::size_t& i = next.back();
      while (i < nb.size()) {
        const Vertex w = nb[i++];
        if (w <= start || visited[static_cast<std::size_t>(w)]) continue;
        // The closing vertex must also be adjacent to the start.
        if (len == k - 1 && !g.adjacent(w, start)) continue;
        if (++nodes > budget) return CycleStatus::BudgetExceeded;
        path.push_back(w);
        next.push_back(0);
        visited[static_cast<std::size_t>(w)] = 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      visited[static_cast<std::size_t>(path.back())] = 0;
      path.pop_back();
      next.pop_back();
    }
  }
  return CycleStatus::ExhaustedNoCycle;
}

}  // namespace

CycleSearchResult find_cycle_of_length(const Graph& g, int k, const CycleSearchOptions& opts) {
  if (k < 3 || k > g.order())
    throw Error(Errc::InvalidArgument, "cycle length " + std::to_string(k) + " outside [3, " +
                                           std::to_string(g.order()) + "]");
  CycleSearchResult result;
  const Vertex last_start = opts.vertex_transitive ? 0 : g.order() - k;
  std::vector<Vertex> path;
  for (Vertex s = 0; s <= last_start; ++s) {
    const CycleStatus status = search_from(g, k, s, opts.budget, result.nodes, path);
    if (status == CycleStatus::Found) {
      result.status = status;
      result.cycle = std::move(path);
      return result;
    }
    if (status == CycleStatus::BudgetExceeded) {
      result.status = status;
      return result;
    }
  }
  result.status = CycleStatus::ExhaustedNoCycle;
  return result;
}

CycleSearchResult hamiltonian_check(const Graph& g, const CycleSearchOptions& opts) {
  return find_cycle_of_length(g, g.order(), opts);
}

std::vector<int> CycleReport::missing() const {
  std::vector<int> out;
  for (const auto& o : outcomes_)
    if (o.status != CycleStatus::Found) out.push_back(o.length);
  return out;
}

bool CycleReport::pancyclic() const noexcept {
  if (outcomes_.empty()) return false;
  for (const auto& o : outcomes_)
    if (o.status != CycleStatus::Found) return false;
  return true;
}

void CycleReport::record(const Graph& g, int k, const CycleSearchResult& r) {
  if (r.status == CycleStatus::Found) {
    if (static_cast<int>(r.cycle.size()) != k || !is_valid_cycle(g, r.cycle))
      throw Error(Errc::VerificationFailed, "invalid witness for cycle length " + std::to_string(k));
    found_[k] = r.cycle;
  }
  outcomes_.push_back({k, r.status, r.nodes});
}

CycleReport pancyclicity_sweep(const Graph& g, const CycleSearchOptions& opts) {
  CycleReport report;
  report.order_ = g.order();
  for (int k = 3; k <= g.order(); ++k) report.record(g, k, find_cycle_of_length(g, k, opts));
  return report;
}

std::vector<Vertex> diagonal_product_cycle(std::span<const Vertex> cycle_g,
                                           std::span<const Vertex> cycle_h, int h_order) {
  if (cycle_g.size() != cycle_h.size())
    throw Error(Errc::InvalidArgument, "cycles must have equal length");
  std::vector<Vertex> out;
  out.reserve(cycle_g.size());
  for (std::size_t i = 0; i < cycle_g.size(); ++i) out.push_back(cycle_g[i] * h_order + cycle_h[i]);
  return out;
}

}  // namespace paleytype
