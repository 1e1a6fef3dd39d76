#include "whad/graph.hpp"

#include "whad/io.hpp"
#include "whad/matcore.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace whad {

WGraph WGraph::from_weights(WeightMatrix w) {
  if (w.rows() != w.cols()) throw Error(ErrorCode::ParseError, "weight matrix is not square");
  for (Index i = 0; i < w.rows(); ++i) {
    if (w(i, i) != 0) throw Error(ErrorCode::ParseError, "loop at vertex " + std::to_string(i + 1));
    for (Index j = 0; j < i; ++j)
      if (w(i, j) != w(j, i)) throw Error(ErrorCode::ParseError, "weights are not symmetric");
  }
  WGraph g;
  g.w_ = std::move(w);
  return g;
}

void WGraph::set_weight(Index u, Index v, Weight w) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw Error(ErrorCode::IndexOutOfRange, "vertex out of range");
  if (u == v) throw Error(ErrorCode::IndexOutOfRange, "loop at vertex " + std::to_string(u + 1));
  w_(u, v) = w;
  w_(v, u) = w;
}

ExactMatrix WGraph::adjacency() const { return to_exact(w_); }

ExactMatrix WGraph::degree_matrix() const {
  ExactMatrix d = ExactMatrix::Zero(order(), order());
  for (Index u = 0; u < order(); ++u) d(u, u) = degree(u);
  return d;
}

ExactMatrix WGraph::laplacian() const { return to_exact(laplacian_int()); }

WGraph::WeightMatrix WGraph::laplacian_int() const {
  WeightMatrix l = -w_;
  for (Index u = 0; u < order(); ++u) l(u, u) = degree(u);
  return l;
}

bool WGraph::is_unweighted() const { return ((w_.array() == 0) || (w_.array() == 1)).all(); }

bool WGraph::has_negative_weights() const { return (w_.array() < 0).any(); }

std::optional<WGraph::Weight> WGraph::regular_degree() const {
  if (order() == 0) return Weight(0);
  const Weight d = degree(0);
  for (Index u = 1; u < order(); ++u)
    if (degree(u) != d) return std::nullopt;
  return d;
}

Index WGraph::edge_count() const { return (w_.array() != 0).count() / 2; }

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

WGraph complete_graph(Index n) {
  WGraph g(n);
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

WGraph empty_graph(Index n) { return WGraph(n); }

WGraph path_graph(Index n) {
  WGraph g(n);
  for (Index u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

WGraph cycle_graph(Index n) {
  WGraph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

WGraph complete_minus_edge(Index n) {
  WGraph g = complete_graph(n);
  if (n >= 2) g.set_weight(0, 1, 0);
  return g;
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

WGraph disjoint_union(const std::vector<WGraph>& parts) {
  Index n = 0;
  for (const auto& p : parts) n += p.order();
  WGraph::WeightMatrix w = WGraph::WeightMatrix::Zero(n, n);
  Index off = 0;
  for (const auto& p : parts) {
    w.block(off, off, p.order(), p.order()) = p.weights();
    off += p.order();
  }
  return WGraph::from_weights(std::move(w));
}

WGraph complement(const WGraph& x) {
  if (!x.is_unweighted()) throw Error(ErrorCode::WeightedComplementUndefined, "graph has non-unit weights");
  WGraph c(x.order());
  for (Index u = 0; u < x.order(); ++u)
    for (Index v = u + 1; v < x.order(); ++v)
      if (x.weight(u, v) == 0) c.add_edge(u, v);
  return c;
}

WGraph join(const WGraph& x, const WGraph& y) {
  const Index n = x.order(), m = y.order();
  WGraph::WeightMatrix w(n + m, n + m);
  w << x.weights(), WGraph::WeightMatrix::Ones(n, m), WGraph::WeightMatrix::Ones(m, n), y.weights();
  return WGraph::from_weights(std::move(w));
}

WGraph merge(const WGraph& x, const WGraph& y, WGraph::Weight w1, WGraph::Weight w2) {
  if (x.order() != y.order())
    throw Error(ErrorCode::SizeMismatch, "merge needs equal orders, got " + std::to_string(x.order()) + " and " +
                                             std::to_string(y.order()));
  const WGraph::WeightMatrix a = w1 * x.weights();
  const WGraph::WeightMatrix c = w2 * y.weights();
  WGraph::WeightMatrix w(2 * x.order(), 2 * x.order());
  w << a, c, c, a;
  return WGraph::from_weights(std::move(w));
}

WGraph bipartite_double(const WGraph& y) { return merge(empty_graph(y.order()), y, 1, 1); }

const char* to_string(ProductFormula f) {
  switch (f) {
    case ProductFormula::Cartesian: return "cartesian";
    case ProductFormula::Tensor: return "strong";
    case ProductFormula::Full: return "direct";
  }
  return "?";
}

WGraph product(const WGraph& x, const WGraph& y, ProductFormula f) {
  const Index n = x.order(), m = y.order();
  WGraph::WeightMatrix w = WGraph::WeightMatrix::Zero(n * m, n * m);
  const bool sum_terms = f != ProductFormula::Tensor;
  const bool kron_term = f != ProductFormula::Cartesian;
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < m; ++v)
      for (Index s = 0; s < n; ++s)
        for (Index t = 0; t < m; ++t) {
          WGraph::Weight val = 0;
          if (sum_terms) {
            if (v == t) val += x.weight(u, s);
            if (u == s) val += y.weight(v, t);
          }
          if (kron_term) val += x.weight(u, s) * y.weight(v, t);
          w(u * m + v, s * m + t) = val;
        }
  return WGraph::from_weights(std::move(w));
}

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

namespace {

using Invariant = std::vector<WGraph::Weight>;

// Degree followed by the sorted multiset of (weight, neighbour degree) codes.
std::vector<Invariant> vertex_invariants(const WGraph& g) {
  const Index n = g.order();
  std::vector<Invariant> inv(static_cast<std::size_t>(n));
  for (Index u = 0; u < n; ++u) {
    Invariant& iv = inv[static_cast<std::size_t>(u)];
    std::vector<WGraph::Weight> nb;
    for (Index v = 0; v < n; ++v)
      if (g.weight(u, v) != 0) nb.push_back(g.weight(u, v) * 1000003 + g.degree(v));
    std::sort(nb.begin(), nb.end());
    iv.push_back(g.degree(u));
    iv.push_back(static_cast<WGraph::Weight>(nb.size()));
    iv.insert(iv.end(), nb.begin(), nb.end());
  }
  return inv;
}

struct IsoSearch {
  const WGraph& x;
  const WGraph& y;
  const std::vector<Invariant>& ix;
  const std::vector<Invariant>& iy;
  std::vector<Index> order;  // vertices of x in assignment order
  std::vector<Index> map;    // x -> y
  std::vector<bool> used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Index u = order[depth];
    for (Index v = 0; v < y.order(); ++v) {
      if (used[static_cast<std::size_t>(v)] || ix[static_cast<std::size_t>(u)] != iy[static_cast<std::size_t>(v)])
        continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Index a = order[k];
        ok = x.weight(u, a) == y.weight(v, map[static_cast<std::size_t>(a)]);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(u)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (extend(depth + 1)) return true;
      used[static_cast<std::size_t>(v)] = false;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const WGraph& x, const WGraph& y, Index bound) {
  const Index n = x.order();
  if (n > bound || y.order() > bound)
    throw Error(ErrorCode::DimensionTooLarge, "isomorphism bound is " + std::to_string(bound));
  if (n != y.order() || x.edge_count() != y.edge_count()) return false;
  const auto ix = vertex_invariants(x);
  const auto iy = vertex_invariants(y);
  {
    auto sx = ix, sy = iy;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return false;
  }
  if (char_poly(x.laplacian()) != char_poly(y.laplacian())) return false;

  // Breadth-first order keeps each new vertex adjacent to assigned ones.
  std::vector<Index> order;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Index s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = true;
    order.push_back(s);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h)
      for (Index v = 0; v < n; ++v)
        if (x.weight(order[h], v) != 0 && !seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          order.push_back(v);
        }
  }
  IsoSearch search{x, y, ix, iy, order, std::vector<Index>(static_cast<std::size_t>(n), -1),
                   std::vector<bool>(static_cast<std::size_t>(n), false)};
  return search.extend(0);
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

WGraph parse_graph(std::istream& in) {
  std::vector<std::vector<long long>> lines;
  std::string line;
  int lineno = 0;
  std::optional<long long> n;
  WGraph g;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad token '" + tok + "'");
      }
    }
    if (nums.empty()) continue;
    if (!n) {
      if (nums.size() != 1 || nums[0] < 0 || nums[0] > 100000)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected vertex count");
      n = nums[0];
      g = WGraph(static_cast<Index>(*n));
      continue;
    }
    if (nums.size() < 2 || nums.size() > 3)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected `u v [w]`");
    const long long u = nums[0], v = nums[1], w = nums.size() == 3 ? nums[2] : 1;
    if (u < 1 || v < 1 || u > *n || v > *n || u == v)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad edge");
    g.set_weight(static_cast<Index>(u - 1), static_cast<Index>(v - 1), w);
  }
  if (!n) throw Error(ErrorCode::ParseError, "missing vertex count");
  return g;
}

WGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

WGraph read_graph_file(const std::string& path) { return parse_graph_text(read_file(path)); }

void write_graph(std::ostream& out, const WGraph& g) {
  out << g.order() << '\n';
  for (Index u = 0; u < g.order(); ++u)
    for (Index v = u + 1; v < g.order(); ++v) {
      const auto w = g.weight(u, v);
      if (w == 0) continue;
      out << u + 1 << ' ' << v + 1;
      if (w != 1) out << ' ' << w;
      out << '\n';
    }
}

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  WGraph parse() {
    WGraph g = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "expression '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  long long integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && s_[start] == '-')) fail("expected integer");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  WGraph atom(const std::string& w) {
    const char kind = w[0];
    if (w.size() < 2 || !std::all_of(w.begin() + 1, w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail("unknown graph '" + w + "'");
    const Index n = std::stol(w.substr(1));
    if (n < 1 || n > 64) fail("size out of range");
    switch (kind) {
      case 'K': {
        skip();
        if (pos_ + 1 < s_.size() && s_[pos_] == '-' && s_[pos_ + 1] == 'e') {
          pos_ += 2;
          return complete_minus_edge(n);
        }
        return complete_graph(n);
      }
      case 'O': return empty_graph(n);
      case 'P': return path_graph(n);
      case 'C': return cycle_graph(n);
      default: fail("unknown graph '" + w + "'");
    }
  }

  WGraph expr() {
    const std::string w = word();
    if (w.empty()) fail("expected a graph");
    if (!eat('(')) return atom(w);
    std::vector<WGraph> args;
    std::vector<long long> nums;
    do {
      skip();
      if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-'))
        nums.push_back(integer());
      else
        args.push_back(expr());
    } while (eat(','));
    if (!eat(')')) fail("expected ')'");
    auto need = [&](std::size_t k) {
      if (args.size() != k) fail(w + " takes " + std::to_string(k) + " graph argument(s)");
    };
    if (w == "union") {
      if (args.empty() || !nums.empty()) fail("union takes graphs");
      return disjoint_union(args);
    }
    if (w == "complement") return need(1), complement(args[0]);
    if (w == "double") return need(1), bipartite_double(args[0]);
    if (w == "join") {
      need(2);
      return join(args[0], args[1]);
    }
    if (w == "merge") {
      need(2);
      if (nums.size() != 0 && nums.size() != 2) fail("merge weights come as a pair");
      return nums.empty() ? merge(args[0], args[1]) : merge(args[0], args[1], nums[0], nums[1]);
    }
    if (w == "cartesian") return need(2), product(args[0], args[1], ProductFormula::Cartesian);
    if (w == "tensor" || w == "strong") return need(2), product(args[0], args[1], ProductFormula::Tensor);
    if (w == "full" || w == "direct") return need(2), product(args[0], args[1], ProductFormula::Full);
    fail("unknown operator '" + w + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

WGraph graph_from_expression(const std::string& expr) { return ExprParser(expr).parse(); }

}  // namespace whad
