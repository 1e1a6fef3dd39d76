#pragma once

#include "whad/core.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace whad {

/// Undirected graph on vertices 0..n-1 (1..n in text) with integer edge
/// weights. Absent edges have weight 0; there are no loops.
class WGraph {
 public:
  using Weight = std::int64_t;
  using WeightMatrix = Mat<Weight>;

  WGraph() = default;
  explicit WGraph(Index n) : w_(WeightMatrix::Zero(n, n)) {}
  /// Throws ParseError if the matrix is not symmetric or has a nonzero diagonal.
  static WGraph from_weights(WeightMatrix w);

  Index order() const { return w_.rows(); }
  Weight weight(Index u, Index v) const { return w_(u, v); }
  /// Throws IndexOutOfRange on a loop or a bad vertex.
  void set_weight(Index u, Index v, Weight w);
  void add_edge(Index u, Index v, Weight w = 1) { set_weight(u, v, w); }

  const WeightMatrix& weights() const { return w_; }
  Weight degree(Index u) const { return w_.row(u).sum(); }

  ExactMatrix adjacency() const;
  ExactMatrix degree_matrix() const;
  ExactMatrix laplacian() const;
  /// Machine-integer Laplacian, used by the search kernels.
  WeightMatrix laplacian_int() const;

  bool is_unweighted() const;
  bool has_negative_weights() const;
  /// Common weighted degree, if every vertex has the same one.
  std::optional<Weight> regular_degree() const;
  Index edge_count() const;

  friend bool operator==(const WGraph& a, const WGraph& b) { return a.w_ == b.w_; }

 private:
  WeightMatrix w_;
};

// Named families. K_n\e misses the edge {1, 2}.
WGraph complete_graph(Index n);
WGraph empty_graph(Index n);
WGraph path_graph(Index n);
WGraph cycle_graph(Index n);
WGraph complete_minus_edge(Index n);

// Operations. Vertex labels: union concatenates, join puts X first, merge
// puts copy 1 first, products send (u, v) to u * |Y| + v.
WGraph disjoint_union(const std::vector<WGraph>& parts);
/// Throws WeightedComplementUndefined.
WGraph complement(const WGraph& x);
WGraph join(const WGraph& x, const WGraph& y);
/// Laplacian [[w1 L(X) + w2 D(Y), -w2 A(Y)], [-w2 A(Y), w1 L(X) + w2 D(Y)]].
/// Throws SizeMismatch.
WGraph merge(const WGraph& x, const WGraph& y, WGraph::Weight w1 = 1, WGraph::Weight w2 = 1);
WGraph bipartite_double(const WGraph& y);

/// Products, named by adjacency formula.
enum class ProductFormula {
  Cartesian,  // A⊗I + I⊗A
  Tensor,     // A⊗A (labelled "strong" in the source notation)
  Full,       // A⊗I + I⊗A + A⊗A (labelled "direct" in the source notation)
};
WGraph product(const WGraph& x, const WGraph& y, ProductFormula f);
const char* to_string(ProductFormula f);

/// Exact isomorphism by refined backtracking. Throws DimensionTooLarge.
bool is_isomorphic(const WGraph& x, const WGraph& y, Index bound = 12);

// Graph text format: first line n, then `u v [w]` per edge, 1-based.
WGraph parse_graph(std::istream& in);
WGraph parse_graph_text(const std::string& text);
WGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const WGraph& g);

/// Builds a graph from an expression such as `join(K4-e, union(O2, K2))`.
/// Atoms: Kn, On, Pn, Cn, Kn-e. Operators: union, join, complement,
/// merge(X, Y[, w1, w2]), double, cartesian, tensor, full. Throws ParseError.
WGraph graph_from_expression(const std::string& expr);

}  // namespace whad
