#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "commute/errors.hpp"
#include "commute/graph.hpp"
#include "commute/group.hpp"
#include "commute/symmetric_eigen.hpp"

namespace commute {

struct SpectrumEntry {
  double value = 0.0;          // numeric eigenvalue (exact when integral)
  long long int_value = 0;     // meaningful only when the spectrum is exact
  long long multiplicity = 0;
};

// A multiset of eigenvalues with multiplicities, sorted ascending by value.
// Spectra are either exact (integer eigenvalues, combinatorial provenance)
// or numeric (floating-point eigenvalues from the dense eigensolver).
class Spectrum {
 public:
  static Spectrum exact(const std::map<long long, long long>& mults) {
    Spectrum s;
    s.exact_ = true;
    for (const auto& [val, mult] : mults) {
      if (mult < 0) {
        throw InternalError("negative multiplicity in spectrum");
      }
      if (mult == 0) continue;
      SpectrumEntry e;
      e.value = static_cast<double>(val);
      e.int_value = val;
      e.multiplicity = mult;
      s.entries_.push_back(e);
    }
    return s;
  }

  // Values must already be grouped and ascending.
  static Spectrum numeric(const std::vector<std::pair<double, long long>>& vals) {
    Spectrum s;
    s.exact_ = false;
    double prev = 0.0;
    bool first = true;
    for (const auto& [val, mult] : vals) {
      if (mult <= 0) throw InternalError("non-positive multiplicity in spectrum");
      if (!first && val <= prev) {
        throw InternalError("numeric spectrum values must be strictly ascending");
      }
      prev = val;
      first = false;
      SpectrumEntry e;
      e.value = val;
      e.int_value = static_cast<long long>(std::llround(val));
      e.multiplicity = mult;
      s.entries_.push_back(e);
    }
    return s;
  }

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  bool integer_exact() const { return exact_; }

  long long multiplicity_total() const {
    long long t = 0;
    for (const auto& e : entries_) t += e.multiplicity;
    return t;
  }

  // Sum of m * |lambda| over entries (graph energy), exact variant.
  long long exact_energy() const {
    require_exact();
    long long sum = 0;
    for (const auto& e : entries_) {
      sum += e.multiplicity * (e.int_value < 0 ? -e.int_value : e.int_value);
    }
    return sum;
  }

  double energy() const {
    double sum = 0.0;
    for (const auto& e : entries_) {
      sum += static_cast<double>(e.multiplicity) * std::abs(e.value);
    }
    return sum;
  }

  long long weighted_sum_exact() const {
    require_exact();
    long long sum = 0;
    for (const auto& e : entries_) sum += e.multiplicity * e.int_value;
    return sum;
  }

  long long weighted_square_sum_exact() const {
    require_exact();
    long long sum = 0;
    for (const auto& e : entries_) {
      sum += e.multiplicity * e.int_value * e.int_value;
    }
    return sum;
  }

  double weighted_sum() const {
    double sum = 0.0;
    for (const auto& e : entries_) {
      sum += static_cast<double>(e.multiplicity) * e.value;
    }
    return sum;
  }

  double weighted_square_sum() const {
    double sum = 0.0;
    for (const auto& e : entries_) {
      sum += static_cast<double>(e.multiplicity) * e.value * e.value;
    }
    return sum;
  }

  // "(-1)^9 (3)^3" for exact spectra; fixed six-decimal values otherwise.
  std::string render() const {
    std::string out;
    for (const auto& e : entries_) {
      if (!out.empty()) out += " ";
      if (exact_) {
        out += "(" + std::to_string(e.int_value) + ")^" +
               std::to_string(e.multiplicity);
      } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "(%.6f)^%lld", e.value, e.multiplicity);
        out += buf;
      }
    }
    return out.empty() ? "(empty)" : out;
  }

  // Exact structural equality: both exact with identical entries.
  bool operator==(const Spectrum& o) const {
    if (exact_ != o.exact_ || entries_.size() != o.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (exact_) {
        if (entries_[i].int_value != o.entries_[i].int_value ||
            entries_[i].multiplicity != o.entries_[i].multiplicity) {
          return false;
        }
      } else {
        if (entries_[i].value != o.entries_[i].value ||
            entries_[i].multiplicity != o.entries_[i].multiplicity) {
          return false;
        }
      }
    }
    return true;
  }
  bool operator!=(const Spectrum& o) const { return !(*this == o); }

 private:
  void require_exact() const {
    if (!exact_) {
      throw ConstraintError("operation requires an integer-exact spectrum");
    }
  }

  std::vector<SpectrumEntry> entries_;
  bool exact_ = true;
};

// Spectrum of a disjoint union of complete graphs: each component of size s
// contributes the eigenvalue s-1 once and -1 with multiplicity s-1.
inline Spectrum clique_union_spectrum(const std::vector<std::uint64_t>& sizes) {
  std::map<long long, long long> m;
  for (std::uint64_t s : sizes) {
    if (s == 0) throw ConstraintError("clique size must be positive");
    m[-1] += static_cast<long long>(s) - 1;
    m[static_cast<long long>(s) - 1] += 1;
  }
  return Spectrum::exact(m);
}

// Commuting-graph spectrum of a group whose non-central centralizers are all
// abelian, computed from the centralizer partition alone: each distinct
// centralizer C contributes the eigenvalue |C| - |Z| - 1 once, and -1 picks
// up the remaining multiplicity (sum |C_i| minus n(|Z|+1) over the n distinct
// centralizers).
inline Spectrum ac_spectrum(const FiniteGroup& g) {
  CentralizerPartition part = g.centralizer_partition();
  long long z = static_cast<long long>(part.center.size());
  std::map<long long, long long> m;
  for (const auto& c : part.centralizers) {
    long long s = static_cast<long long>(c.size());
    if (s <= z) {
      throw InternalError("centralizer no larger than the center");
    }
    m[-1] += s - z - 1;
    m[s - z - 1] += 1;
  }
  return Spectrum::exact(m);
}

// Numeric eigenvalues of the adjacency matrix, ascending, unclustered.
inline std::vector<double> numeric_eigenvalues(const CommutingGraph& graph,
                                               std::uint64_t max_vertices) {
  std::size_t n = graph.vertex_count();
  if (n > max_vertices) {
    throw CapError("graph has " + std::to_string(n) +
                   " vertices, above the numeric-oracle cap of " +
                   std::to_string(max_vertices));
  }
  return symmetric_eigenvalues(graph.adjacency_matrix(), n);
}

// Clusters a sorted eigenvalue list into (value, multiplicity) groups and, if
// every cluster mean is within snap_tol of an integer, returns the exact
// integer spectrum; otherwise returns the numeric spectrum of cluster means.
inline Spectrum snap_spectrum(const std::vector<double>& sorted_values,
                              double cluster_tol = 1e-9,
                              double snap_tol = 1e-6) {
  if (sorted_values.empty()) return Spectrum::exact({});
  std::vector<std::pair<double, long long>> clusters;
  double run_sum = sorted_values[0];
  long long run_count = 1;
  double run_start = sorted_values[0];
  for (std::size_t i = 1; i < sorted_values.size(); ++i) {
    if (sorted_values[i] - run_start <= cluster_tol) {
      run_sum += sorted_values[i];
      ++run_count;
    } else {
      clusters.emplace_back(run_sum / run_count, run_count);
      run_sum = sorted_values[i];
      run_count = 1;
      run_start = sorted_values[i];
    }
  }
  clusters.emplace_back(run_sum / run_count, run_count);
  bool all_integral = true;
  for (const auto& [mean, mult] : clusters) {
    if (std::abs(mean - std::llround(mean)) > snap_tol) {
      all_integral = false;
      break;
    }
  }
  if (all_integral) {
    std::map<long long, long long> m;
    for (const auto& [mean, mult] : clusters) m[std::llround(mean)] += mult;
    return Spectrum::exact(m);
  }
  return Spectrum::numeric(clusters);
}

// Numeric oracle spectrum of a graph: dense eigenvalues, clustered, snapped
// to integers when everything is integral.
inline Spectrum numeric_spectrum(const CommutingGraph& graph,
                                 std::uint64_t max_vertices) {
  std::vector<double> vals = numeric_eigenvalues(graph, max_vertices);
  double n = static_cast<double>(vals.size());
  return snap_spectrum(vals, 1e-9 * std::max(1.0, n));
}

}  // namespace commute
