#include "paleytype/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "paleytype/error.hpp"

namespace paleytype {

std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::Plain: return "Plain";
    case Branch::PlusRoot: return "PlusRoot";
    case Branch::MinusRoot: return "MinusRoot";
  }
  return "?";
}

double ExactFactor::value() const noexcept {
  const double root = std::sqrt(static_cast<double>(prime));
  switch (branch) {
    case Branch::Plain: return static_cast<double>(prime - 1);
    case Branch::PlusRoot: return root - 1.0;
    case Branch::MinusRoot: return -root - 1.0;
  }
  return 0.0;
}

std::string ExactFactor::to_string() const {
  switch (branch) {
    case Branch::Plain: return std::to_string(prime - 1);
    case Branch::PlusRoot: return "(sqrt(" + std::to_string(prime) + ")-1)";
    case Branch::MinusRoot: return "(-sqrt(" + std::to_string(prime) + ")-1)";
  }
  return "?";
}

std::string SpectrumEntry::radical() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += '*';
    out += factors[i].to_string();
  }
  out += '/';
  out += std::to_string(std::int64_t{1} << factors.size());
  return out;
}

std::int64_t SpectrumTable::total_multiplicity() const noexcept {
  std::int64_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

double SpectrumTable::trace() const noexcept {
  double t = 0.0;
  for (const auto& e : entries) t += e.value * static_cast<double>(e.multiplicity);
  return t;
}

double SpectrumTable::trace_of_square() const noexcept {
  double t = 0.0;
  for (const auto& e : entries) t += e.value * e.value * static_cast<double>(e.multiplicity);
  return t;
}

double SpectrumTable::min_gap() const noexcept {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < entries.size(); ++i)
    gap = std::min(gap, entries[i - 1].value - entries[i].value);
  return gap;
}

SpectrumTable closed_form_spectrum(const PrimeSet& ps) {
  const std::size_t n = ps.size();
  SpectrumTable table{ps, {}};
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  table.entries.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    SpectrumEntry e;
    std::size_t c = code;
    double value = 1.0;
    std::int64_t mult = 1;
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      const auto b = static_cast<Branch>(c % 3);
      const ExactFactor f{b, ps.prime(i)};
      e.branch.push_back(b);
      e.factors.push_back(f);
      value *= f.value() / 2.0;
      if (b != Branch::Plain) mult *= (ps.prime(i) - 1) / 2;
    }
    e.value = value;
    e.multiplicity = mult;
    table.entries.push_back(std::move(e));
  }
  std::stable_sort(table.entries.begin(), table.entries.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value > b.value; });
  return table;
}

SpectrumEntry least_eigenvalue(const PrimeSet& ps) {
  SpectrumTable table = closed_form_spectrum(ps);
  SpectrumEntry least = table.entries.back();
  for (std::size_t i = 0; i < least.branch.size(); ++i) {
    const Branch expected = i == 0 ? Branch::MinusRoot : Branch::Plain;
    if (least.branch[i] != expected)
      throw Error(Errc::VerificationFailed,
                  "least eigenvalue " + least.radical() + " is not on the MinusRoot-at-p1 branch");
  }
  const double degree = static_cast<double>(euler_phi(ps)) / static_cast<double>(std::int64_t{1} << ps.size());
  if (!(least.value > -degree))
    throw Error(Errc::VerificationFailed, "least eigenvalue does not exceed -degree");
  return least;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double* row = a.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n);
    for (int j = i + 1; j < n; ++j) s += row[j] * row[j];
  }
  return std::sqrt(2.0 * s);
}

}  // namespace

EigenResult jacobi_eigenvalues(std::vector<double> a, int n, double tol, int max_sweeps) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw Error(Errc::InvalidArgument, "matrix size does not match n*n");
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  const std::size_t stride = static_cast<std::size_t>(n);
  auto row = [&](int i) { return a.data() + static_cast<std::size_t>(i) * stride; };

  // Block-cyclic ordering: every pair (p, q) is rotated once per sweep, with
  // pairs grouped by (block(p), block(q)). Inside a block pair only the rows
  // of the two blocks are kept symmetric; the columns of all other rows are
  // refreshed from those rows once the block pair is done. This keeps the
  // strided traffic inside a cache-resident slab.
  constexpr int kBlock = 32;
  const int blocks = (n + kBlock - 1) / kBlock;
  std::vector<int> slab;
  std::vector<char> in_slab(stride, 0);

  const double target = tol / 100.0;
  // Entries this small cannot move any eigenvalue by more than the target.
  const double skip = target / (static_cast<double>(n) * static_cast<double>(n) + 1.0);

  auto rotate = [&](int p, int q) {
    double* rp = row(p);
    double* rq = row(q);
    const double apq = rp[q];
    if (std::abs(apq) <= skip) return;
    const double theta = (rq[q] - rp[p]) / (2.0 * apq);
    const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double app = rp[p];
    const double aqq = rq[q];
    for (int k = 0; k < n; ++k) {
      const double akp = rp[k];
      const double akq = rq[k];
      rp[k] = c * akp - s * akq;
      rq[k] = s * akp + c * akq;
    }
    rp[p] = app - t * apq;
    rq[q] = aqq + t * apq;
    rp[q] = 0.0;
    rq[p] = 0.0;
    for (int r : slab) {
      if (r == p || r == q) continue;
      row(r)[p] = rp[r];
      row(r)[q] = rq[r];
    }
  };

  EigenResult result;
  result.off_diagonal = off_diagonal_norm(a, n);
  while (result.off_diagonal > target) {
    if (result.sweeps == max_sweeps)
      throw Error(Errc::NoConvergence, "Jacobi iteration stopped after " + std::to_string(max_sweeps) +
                                           " sweeps; off-diagonal residual " +
                                           std::to_string(result.off_diagonal));
    ++result.sweeps;
    for (int bi = 0; bi < blocks; ++bi) {
      const int i0 = bi * kBlock;
      const int i1 = std::min(n, i0 + kBlock);
      for (int bj = bi; bj < blocks; ++bj) {
        const int j0 = bj * kBlock;
        const int j1 = std::min(n, j0 + kBlock);
        slab.clear();
        for (int r = i0; r < i1; ++r) slab.push_back(r);
        if (bj != bi)
          for (int r = j0; r < j1; ++r) slab.push_back(r);
        for (int r : slab) in_slab[static_cast<std::size_t>(r)] = 1;

        for (int p = i0; p < i1; ++p)
          for (int q = (bj == bi ? p + 1 : j0); q < j1; ++q) rotate(p, q);

        for (int k = 0; k < n; ++k) {
          if (in_slab[static_cast<std::size_t>(k)]) continue;
          double* rk = row(k);
          for (int r : slab) rk[r] = row(r)[k];
        }
        for (int r : slab) in_slab[static_cast<std::size_t>(r)] = 0;
      }
    }
    result.off_diagonal = off_diagonal_norm(a, n);
  }
  result.values.resize(stride);
  for (int i = 0; i < n; ++i) result.values[static_cast<std::size_t>(i)] = row(i)[i];
  std::sort(result.values.begin(), result.values.end());
  return result;
}

std::vector<EigenCluster> cluster_eigenvalues(std::span<const double> values, double spacing) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<EigenCluster> out;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i + 1;
    double sum = sorted[i];
    while (j < sorted.size() && sorted[j - 1] - sorted[j] <= spacing) sum += sorted[j++];
    out.push_back({sum / static_cast<double>(j - i), static_cast<std::int64_t>(j - i)});
    i = j;
  }
  return out;
}

std::vector<EigenCluster> numeric_spectrum(const Graph& g, double tol) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = 1.0;
    a[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)] = 1.0;
  }
  EigenResult r = jacobi_eigenvalues(std::move(a), n, tol);
  return cluster_eigenvalues(r.values, 10.0 * tol);
}

std::string_view to_string(ReconcileFailure f) noexcept {
  switch (f) {
    case ReconcileFailure::None: return "None";
    case ReconcileFailure::ValueGap: return "ValueGap";
    case ReconcileFailure::MismatchedMultiplicity: return "MismatchedMultiplicity";
  }
  return "?";
}

ReconcileReport reconcile(const SpectrumTable& table, std::span<const EigenCluster> numeric,
                          double tol) {
  ReconcileReport report;
  std::vector<char> used(numeric.size(), 0);
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const SpectrumEntry& e = table.entries[i];
    std::size_t best = numeric.size();
    double best_diff = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < numeric.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(numeric[j].value - e.value);
      if (d < best_diff) {
        best_diff = d;
        best = j;
      }
    }
    if (best == numeric.size() || best_diff > tol) {
      report.failure = ReconcileFailure::ValueGap;
      std::ostringstream os;
      os << "entry " << i << " " << e.radical() << " = " << e.value << " has no numeric cluster within "
         << tol;
      if (best != numeric.size()) os << " (nearest " << numeric[best].value << ")";
      report.message = os.str();
      return report;
    }
    used[best] = 1;
    report.pairs.push_back({i, best, best_diff});
    report.max_difference = std::max(report.max_difference, best_diff);
    if (numeric[best].multiplicity != e.multiplicity) {
      report.failure = ReconcileFailure::MismatchedMultiplicity;
      report.message = "entry " + std::to_string(i) + " " + e.radical() + " expects multiplicity " +
                       std::to_string(e.multiplicity) + ", numeric cluster has " +
                       std::to_string(numeric[best].multiplicity);
      return report;
    }
  }
  for (std::size_t j = 0; j < numeric.size(); ++j)
    if (!used[j]) {
      report.failure = ReconcileFailure::ValueGap;
      std::ostringstream os;
      os << "numeric cluster " << numeric[j].value << " (x" << numeric[j].multiplicity
         << ") matches no closed-form entry";
      report.message = os.str();
      return report;
    }
  report.ok = true;
  return report;
}

}  // namespace paleytype
