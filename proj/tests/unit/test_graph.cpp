#include "helpers.hpp"
#include "oracles.hpp"

#include "whad/graph.hpp"
#include "whad/matcore.hpp"

#include <sstream>

using namespace whad;
using testing::code_of;

namespace {

using IM = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

IM adj(const WGraph& g) { return g.weights().cast<long long>(); }

IM kron(const IM& a, const IM& b) {
  IM k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

WGraph random_graph(std::mt19937_64& rng, Index n, double p, int max_w = 1) {
  std::bernoulli_distribution edge(p);
  std::uniform_int_distribution<int> w(1, max_w);
  WGraph g(n);
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v, w(rng));
  return g;
}

WGraph relabel(const WGraph& g, const std::vector<Index>& p) {
  WGraph h(g.order());
  for (Index u = 0; u < g.order(); ++u)
    for (Index v = u + 1; v < g.order(); ++v)
      if (g.weight(u, v) != 0) h.add_edge(p[u], p[v], g.weight(u, v));
  return h;
}

bool brute_isomorphic(const WGraph& a, const WGraph& b) {
  if (a.order() != b.order()) return false;
  std::vector<Index> p(static_cast<std::size_t>(a.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (relabel(a, p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("named families") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(empty_graph(4).edge_count() == 0);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(path_graph(4).weight(1, 2) == 1);
  CHECK(cycle_graph(4).weight(3, 0) == 1);
  const auto k = complete_minus_edge(4);
  CHECK(k.edge_count() == 5);
  CHECK(k.weight(0, 1) == 0);
  CHECK(complete_graph(4).regular_degree() == 3);
  CHECK_FALSE(path_graph(3).regular_degree().has_value());
}

TEST_CASE("Laplacian is D - A with zero row sums") {
  std::mt19937_64 rng(oracle::seed());
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph(rng, 1 + trial % 7, 0.5, 3);
    const ExactMatrix l = g.laplacian();
    CHECK(l == ExactMatrix(g.degree_matrix() - g.adjacency()));
    for (Index i = 0; i < g.order(); ++i) CHECK(l.row(i).sum() == 0);
    CHECK(to_exact(oracle::laplacian_d(g).cast<long long>()) == l);
  }
}

TEST_CASE("operations match their adjacency formulas") {
  std::mt19937_64 rng(oracle::seed() + 1);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 1 + trial % 4, m = 1 + (trial / 4) % 4;
    const auto x = random_graph(rng, n, 0.5), y = random_graph(rng, m, 0.5);
    const IM ix = IM::Identity(n, n), iy = IM::Identity(m, m);

    IM u = IM::Zero(n + m, n + m);
    u.topLeftCorner(n, n) = adj(x);
    u.bottomRightCorner(m, m) = adj(y);
    CHECK(adj(disjoint_union({x, y})) == u);

    IM j = u;
    j.topRightCorner(n, m).setOnes();
    j.bottomLeftCorner(m, n).setOnes();
    CHECK(adj(join(x, y)) == j);

    CHECK(adj(complement(x)) == IM(IM::Ones(n, n) - ix - adj(x)));

    CHECK(adj(product(x, y, ProductFormula::Cartesian)) == IM(kron(adj(x), iy) + kron(ix, adj(y))));
    CHECK(adj(product(x, y, ProductFormula::Tensor)) == kron(adj(x), adj(y)));
    CHECK(adj(product(x, y, ProductFormula::Full)) ==
          IM(kron(adj(x), iy) + kron(ix, adj(y)) + kron(adj(x), adj(y))));

    if (n == m) {
      const ExactMatrix lx = x.laplacian(), dy = y.degree_matrix(), ay = y.adjacency();
      for (int w1 = 1; w1 <= 2; ++w1)
        for (int w2 = 1; w2 <= 2; ++w2) {
          ExactMatrix want(2 * n, 2 * n);
          const ExactMatrix diag = lx * Integer(w1) + dy * Integer(w2);
          want << diag, -ay * Integer(w2), -ay * Integer(w2), diag;
          CHECK(merge(x, y, w1, w2).laplacian() == want);
        }
    } else {
      CHECK(code_of([&] { merge(x, y); }) == ErrorCode::SizeMismatch);
    }
  }
}

TEST_CASE("complement of a weighted graph is undefined") {
  WGraph g(3);
  g.add_edge(0, 1, 2);
  CHECK(code_of([&] { complement(g); }) == ErrorCode::WeightedComplementUndefined);
}

TEST_CASE("isomorphism agrees with brute force") {
  std::mt19937_64 rng(oracle::seed() + 2);
  int iso = 0, non = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = 2 + trial % 6;
    const auto a = random_graph(rng, n, 0.5);
    WGraph b;
    if (trial % 2 == 0) {
      std::vector<Index> p(static_cast<std::size_t>(n));
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      b = relabel(a, p);
    } else {
      b = random_graph(rng, n, 0.5);
    }
    const bool want = brute_isomorphic(a, b);
    REQUIRE(is_isomorphic(a, b) == want);
    (want ? iso : non)++;
  }
  CHECK(iso > 100);
  CHECK(non > 50);
  CHECK(code_of([] { is_isomorphic(empty_graph(13), empty_graph(13)); }) == ErrorCode::DimensionTooLarge);
}

TEST_CASE("known isomorphisms among eight-vertex graphs") {
  const auto e = [](const char* s) { return graph_from_expression(s); };
  CHECK(is_isomorphic(e("merge(O4, K4)"), e("cartesian(cartesian(K2, K2), K2)")));
  CHECK(is_isomorphic(e("complement(merge(O4, K4))"), e("cartesian(K2, K4)")));
  CHECK(is_isomorphic(e("join(K4-e, K4)"), e("K8-e")));
  CHECK(is_isomorphic(e("join(K4, K4)"), e("K8")));
  CHECK(is_isomorphic(e("join(O2, O2)"), e("C4")));
  CHECK(is_isomorphic(e("join(K4-e, K4-e)"), e("join(C4, K4)")));
  CHECK_FALSE(is_isomorphic(e("join(K4-e, K4-e)"), e("K8-e")));
  CHECK(is_isomorphic(e("double(K4)"), e("cartesian(cartesian(K2, K2), K2)")));
  CHECK(e("double(C4)").edge_count() == 8);
}

TEST_CASE("expressions") {
  const auto g = graph_from_expression("join(K4-e, union(O2, K2))");
  CHECK(g.order() == 8);
  CHECK(g.weight(0, 1) == 0);
  CHECK(g.weight(6, 7) == 1);
  CHECK(g.weight(4, 5) == 0);
  CHECK(g.weight(0, 7) == 1);
  const auto m = graph_from_expression("merge(K2, K2, 2, 3)");
  CHECK(m.weight(0, 1) == 2);
  CHECK(m.weight(0, 3) == 3);
  CHECK(m.weight(0, 2) == 0);
  for (const char* bad : {"", "X4", "join(K4)", "merge(K2, K3)", "union(K2, 3)", "K0", "join(K2, K2", "foo(K2)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(graph_from_expression(bad), Error);
  }
}

TEST_CASE("graph text round-trips") {
  std::mt19937_64 rng(oracle::seed() + 3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph(rng, 1 + trial % 8, 0.4, 3);
    std::ostringstream s;
    write_graph(s, g);
    REQUIRE(parse_graph_text(s.str()) == g);
  }
  CHECK(parse_graph_text("# path\n3\n1 2\n2 3\n") == path_graph(3));
  CHECK(code_of([] { parse_graph_text("2\n1 1\n"); }) == ErrorCode::ParseError);
  CHECK_THROWS_AS(parse_graph_text("2\n1 x\n"), Error);
  CHECK_THROWS_AS(parse_graph_text("2\n1 3\n"), Error);
}

TEST_CASE("from_weights rejects asymmetric input") {
  WGraph::WeightMatrix w = WGraph::WeightMatrix::Zero(2, 2);
  w(0, 1) = 1;
  CHECK(code_of([&] { WGraph::from_weights(w); }) == ErrorCode::ParseError);
  w(1, 0) = 1;
  CHECK(WGraph::from_weights(w) == complete_graph(2));
}
