#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "graph_doc.hpp"
#include "parse.hpp"

namespace ofc {

// Finite graph with symmetric positive weights in an ordered field. Vertex
// subsets are bitmasks, which caps N at 64.
template <class K>
class OFGraph {
 public:
  using Fld = Field<K>;

  struct Edge {
    int u;
    int v;
    K w;
  };

  static OFGraph from_doc(const GraphDoc& doc) {
    if (doc.field != Fld::tag) {
      fail(errc::backend_mismatch, std::string("document backend ") +
                                       backend_name(doc.field) + " built as " +
                                       backend_name(Fld::tag));
    }
    if (doc.vertices.size() > 64) {
      fail(errc::size_cap_exceeded, "vertex subsets are 64-bit masks; got " +
                                        std::to_string(doc.vertices.size()) + " vertices");
    }
    OFGraph g;
    g.labels_ = doc.vertices;
    g.trunc_override_ = doc.truncation_order;
    int n = static_cast<int>(g.labels_.size());
    g.weights_.assign(n, std::vector<K>(n, Fld::zero()));
    g.adj_.assign(n, 0);
    for (const auto& e : doc.edges) {
      int u = g.index_of_checked(e.u);
      int v = g.index_of_checked(e.v);
      K w = Fld::zero();
      try {
        w = parse_element<K>(e.w);
      } catch (const error& err) {
        fail(errc::malformed_weight,
             "weight of edge {" + e.u + ", " + e.v + "}: " + err.what());
      }
      if (Fld::sign(w) <= 0) {
        fail(errc::nonpositive_weight,
             "weight of edge {" + e.u + ", " + e.v + "} must be positive: " + e.w);
      }
      g.weights_[u][v] = w;
      g.weights_[v][u] = w;
      g.adj_[u] |= bit(v);
      g.adj_[v] |= bit(u);
      g.edges_.push_back({u < v ? u : v, u < v ? v : u, std::move(w)});
    }
    g.degrees_.reserve(n);
    for (int x = 0; x < n; ++x) {
      K d = Fld::zero();
      for (int y = 0; y < n; ++y) d += g.weights_[x][y];
      g.degrees_.push_back(std::move(d));
    }
    return g;
  }

  GraphDoc to_doc() const {
    GraphDoc doc;
    doc.field = Fld::tag;
    doc.truncation_order = trunc_override_;
    doc.vertices = labels_;
    for (const Edge& e : edges_) {
      doc.edges.push_back({labels_[e.u], labels_[e.v], format_element(e.w)});
    }
    return doc;
  }

  int size() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& label(int x) const { return labels_[check_vertex(x)]; }
  const std::optional<Rat>& truncation_override() const { return trunc_override_; }

  std::optional<int> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  const K& weight(int x, int y) const { return weights_[check_vertex(x)][check_vertex(y)]; }
  bool adjacent(int x, int y) const { return adj_[check_vertex(x)] & bit(check_vertex(y)); }
  std::uint64_t neighbors(int x) const { return adj_[check_vertex(x)]; }

  std::vector<int> neighbor_list(int x) const {
    std::vector<int> out;
    for (std::uint64_t m = adj_[check_vertex(x)]; m;) {
      int y = std::countr_zero(m);
      out.push_back(y);
      m &= m - 1;
    }
    return out;
  }

  // b(x)
  const K& degree(int x) const { return degrees_[check_vertex(x)]; }

  bool is_isolated(int x) const { return adj_[check_vertex(x)] == 0; }

  std::optional<int> first_isolated() const {
    for (int x = 0; x < size(); ++x) {
      if (adj_[x] == 0) return x;
    }
    return std::nullopt;
  }

  std::uint64_t all_vertices() const {
    int n = size();
    return n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);
  }

  // b(A) over a bitmask subset
  K set_weight(std::uint64_t mask) const {
    check_subset(mask);
    K sum = Fld::zero();
    for (std::uint64_t m = mask; m;) {
      int x = std::countr_zero(m);
      m &= m - 1;
      sum += degrees_[x];
    }
    return sum;
  }

  // b(A, B) for disjoint bitmask subsets
  K cut_weight(std::uint64_t a, std::uint64_t b) const {
    check_subset(a);
    check_subset(b);
    if (a & b) fail(errc::invalid_argument, "cut weight of overlapping subsets");
    K sum = Fld::zero();
    for (std::uint64_t m = a; m;) {
      int x = std::countr_zero(m);
      m &= m - 1;
      for (std::uint64_t w = adj_[x] & b; w;) {
        int y = std::countr_zero(w);
        w &= w - 1;
        sum += weights_[x][y];
      }
    }
    return sum;
  }

  // p(x,y) = b(x,y)/b(x)
  K normalized_weight(int x, int y, const Budget& budget) const {
    if (is_isolated(x)) {
      fail(errc::isolated_vertex, "normalized weight at isolated vertex " + labels_[x]);
    }
    return Fld::div(weight(x, y), degree(x), budget);
  }

  std::vector<std::uint64_t> connected_components() const {
    std::vector<std::uint64_t> comps;
    std::uint64_t unvisited = all_vertices();
    while (unvisited) {
      std::uint64_t comp = 0;
      std::uint64_t frontier = bit(std::countr_zero(unvisited));
      while (frontier) {
        comp |= frontier;
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m;) {
          int x = std::countr_zero(m);
          m &= m - 1;
          next |= adj_[x];
        }
        frontier = next & ~comp;
      }
      comps.push_back(comp);
      unvisited &= ~comp;
    }
    return comps;
  }

  bool is_connected() const { return size() > 0 && connected_components().size() == 1; }

  // Two-coloring; the returned pair covers every vertex (isolated ones land
  // in the first part). nullopt on an odd cycle.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> bipartition() const {
    std::uint64_t part1 = 0, part2 = 0, visited = 0;
    for (int start = 0; start < size(); ++start) {
      if (visited & bit(start)) continue;
      std::uint64_t frontier = bit(start);
      part1 |= frontier;
      bool in_part1 = true;
      while (frontier) {
        visited |= frontier;
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m;) {
          int x = std::countr_zero(m);
          m &= m - 1;
          next |= adj_[x];
        }
        std::uint64_t& same = in_part1 ? part1 : part2;
        std::uint64_t& other = in_part1 ? part2 : part1;
        if (next & same) return std::nullopt;  // odd cycle
        next &= ~visited;
        other |= next;
        frontier = next;
        in_part1 = !in_part1;
      }
    }
    return std::make_pair(part1, part2);
  }

  bool is_bipartite() const { return bipartition().has_value(); }

  bool is_complete() const {
    for (int x = 0; x < size(); ++x) {
      if (adj_[x] != (all_vertices() & ~bit(x))) return false;
    }
    return true;
  }

  // Expansion window: the document override, or eight times the finest
  // positive exponent among the weights.
  Budget budget() const {
    if (trunc_override_) return Budget{*trunc_override_};
    std::vector<Rat> exps;
    for (const Edge& e : edges_) Fld::collect_exponents(e.w, exps);
    return default_budget(exps);
  }

  static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<K>> weights_;
  std::vector<K> degrees_;
  std::vector<std::uint64_t> adj_;
  std::vector<Edge> edges_;
  std::optional<Rat> trunc_override_;

  int index_of_checked(const std::string& label) const {
    auto i = index_of(label);
    if (!i) fail(errc::unknown_vertex, "unknown vertex \"" + label + "\"");
    return *i;
  }

  int check_vertex(int x) const {
    if (x < 0 || x >= size()) {
      fail(errc::unknown_vertex, "vertex index " + std::to_string(x) + " out of range");
    }
    return x;
  }

  void check_subset(std::uint64_t mask) const {
    if (mask & ~all_vertices()) {
      fail(errc::unknown_vertex, "subset mask mentions vertices outside the graph");
    }
  }
};

}  // namespace ofc
