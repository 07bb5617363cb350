#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "commute/errors.hpp"
#include "commute/group.hpp"

namespace commute {

// Sizes of the connected components of a graph, largest first, plus whether
// every component is a complete graph (so the graph is a union of cliques).
struct CliqueDecomposition {
  std::vector<std::uint64_t> component_sizes;
  bool is_clique_union = false;
};

// Simple undirected graph with packed adjacency rows.
//
// The primary constructor is `commuting`, which builds the graph on the
// non-central elements of a non-abelian group, joining two elements iff they
// commute.  `complement` flips every off-diagonal adjacency, giving the
// non-commuting graph on the same vertex set.
class CommutingGraph {
 public:
  static CommutingGraph commuting(const FiniteGroup& g) {
    std::vector<std::uint32_t> z = g.center();
    if (z.size() == g.order()) {
      throw ConstraintError(
          "commuting graph requires a non-abelian group (no non-central elements)");
    }
    CommutingGraph graph;
    graph.name_ = g.name();
    std::vector<bool> central(g.order(), false);
    for (std::uint32_t c : z) central[c] = true;
    for (std::uint32_t v = 0; v < g.order(); ++v) {
      if (!central[v]) {
        graph.labels_.push_back(g.label(v));
        graph.vertex_ids_.push_back(v);
      }
    }
    graph.init_rows();
    std::size_t n = graph.vertex_count();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (g.commutes(graph.vertex_ids_[i], graph.vertex_ids_[j])) {
          graph.set_edge(i, j);
        }
      }
    }
    graph.count_edges();
    return graph;
  }

  // The complement graph on the same vertices (no self-loops).
  CommutingGraph complement() const {
    CommutingGraph c;
    c.name_ = name_ + " (complement)";
    c.labels_ = labels_;
    c.vertex_ids_ = vertex_ids_;
    c.init_rows();
    std::size_t n = vertex_count();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!has_edge(i, j)) c.set_edge(i, j);
      }
    }
    c.count_edges();
    return c;
  }

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return labels_.size(); }
  std::uint64_t edge_count() const { return edges_; }
  const std::string& vertex_label(std::size_t v) const { return labels_.at(v); }
  // Index of the vertex in the originating group (when built from one).
  std::uint32_t vertex_group_element(std::size_t v) const {
    return vertex_ids_.at(v);
  }

  bool has_edge(std::size_t i, std::size_t j) const {
    if (i >= vertex_count() || j >= vertex_count()) {
      throw ConstraintError("vertex index out of range");
    }
    if (i == j) return false;
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }

  std::uint64_t degree(std::size_t v) const {
    std::uint64_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      d += static_cast<std::uint64_t>(__builtin_popcountll(rows_[v * words_ + w]));
    }
    return d;
  }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < vertex_count(); ++j) {
      if (j != v && has_edge(v, j)) out.push_back(j);
    }
    return out;
  }

  // Connected components via breadth-first search, with a completeness check
  // per component.  Component sizes are reported largest first.
  CliqueDecomposition clique_decomposition() const {
    std::size_t n = vertex_count();
    CliqueDecomposition dec;
    dec.is_clique_union = true;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> comp;
      stack.push_back(s);
      seen[s] = true;
      while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (std::size_t v : neighbors(u)) {
          if (!seen[v]) {
            seen[v] = true;
            stack.push_back(v);
          }
        }
      }
      for (std::size_t u : comp) {
        if (degree(u) != comp.size() - 1) {
          dec.is_clique_union = false;
          break;
        }
      }
      dec.component_sizes.push_back(comp.size());
    }
    std::sort(dec.component_sizes.rbegin(), dec.component_sizes.rend());
    return dec;
  }

  // Dense adjacency matrix (row-major, 0/1 entries).
  std::vector<double> adjacency_matrix() const {
    std::size_t n = vertex_count();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (has_edge(i, j)) {
          a[i * n + j] = 1.0;
          a[j * n + i] = 1.0;
        }
      }
    }
    return a;
  }

  // Text dump: one line per vertex, "label TAB neighbor TAB neighbor ...",
  // vertices and neighbors both in vertex-index order.
  std::string dump() const {
    std::string out;
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      out += labels_[v];
      for (std::size_t w : neighbors(v)) {
        out += "\t";
        out += labels_[w];
      }
      out += "\n";
    }
    return out;
  }

 private:
  void init_rows() {
    words_ = (labels_.size() + 63) / 64;
    rows_.assign(labels_.size() * words_, 0);
  }

  void set_edge(std::size_t i, std::size_t j) {
    rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    rows_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void count_edges() {
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < vertex_count(); ++v) total += degree(v);
    edges_ = total / 2;
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> vertex_ids_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::uint64_t edges_ = 0;
};

}  // namespace commute
