#include "oracles.hpp"

#include "whad/io.hpp"
#include "whad/matcore.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>

using namespace whad;

namespace {

ExactMatrix random_int_matrix(std::mt19937_64& rng, Index r, Index c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  ExactMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// det(xI - M) at integer x, by the permutation expansion.
long long char_poly_at(const ExactMatrix& m, long long x) {
  auto a = oracle::to_imat(m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (auto& e : a[i]) e = -e;
    a[i][i] += x;
  }
  return oracle::leibniz_det(a);
}

}  // namespace

TEST_CASE("determinant agrees with the permutation expansion") {
  std::mt19937_64 rng(oracle::seed());
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = 1 + trial % 6;
    const ExactMatrix m = random_int_matrix(rng, n, n, -3, 3);
    REQUIRE(determinant(m) == oracle::leibniz_det(oracle::to_imat(m)));
  }
}

TEST_CASE("determinant of known matrices") {
  ExactMatrix h(2, 2);
  h << 1, 1, 1, -1;
  CHECK(determinant(h) == -2);
  CHECK(determinant(identity<Integer>(5)) == 1);
  ExactMatrix z = ExactMatrix::Zero(3, 3);
  CHECK(determinant(z) == 0);
  ExactMatrix r(2, 3);
  r.setZero();
  CHECK_THROWS_AS(determinant(r), Error);
}

TEST_CASE("rank and kernel are consistent") {
  std::mt19937_64 rng(oracle::seed() + 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
    const RationalMatrix m = to_rational(random_int_matrix(rng, r, c, -1, 1));
    const RationalMatrix k = kernel_basis(m);
    REQUIRE(k.rows() == c);
    REQUIRE(rank(m) + k.cols() == c);
    if (k.cols() > 0) {
      REQUIRE((m * k).isZero());
      REQUIRE(rank(k) == k.cols());
    }
  }
}

TEST_CASE("rref produces pivots with unit entries") {
  RationalMatrix m(3, 3);
  m << 2, 4, 6, 1, 2, 3, 0, 1, 1;
  const auto piv = rref_in_place(m);
  REQUIRE(piv == std::vector<Index>{0, 1});
  CHECK(m(0, 0) == 1);
  CHECK(m(1, 1) == 1);
  CHECK(m.row(2).isZero());
}

TEST_CASE("inverse times matrix is the identity") {
  std::mt19937_64 rng(oracle::seed() + 2);
  int tested = 0;
  while (tested < 100) {
    const Index n = 1 + tested % 5;
    const RationalMatrix m = to_rational(random_int_matrix(rng, n, n, -4, 4));
    if (rank(m) < n) {
      CHECK_THROWS_AS(inverse(m), Error);
      continue;
    }
    REQUIRE(m * inverse(m) == identity<Rational>(n));
    ++tested;
  }
}

TEST_CASE("singular inverse reports the error code") {
  RationalMatrix m = RationalMatrix::Zero(2, 2);
  try {
    inverse(m);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Singular);
  }
}

TEST_CASE("characteristic polynomial agrees with det(xI - M)") {
  std::mt19937_64 rng(oracle::seed() + 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 1 + trial % 6;
    const ExactMatrix m = random_int_matrix(rng, n, n, -3, 3);
    const IntPolynomial p = char_poly(m);
    REQUIRE(p.degree() == n);
    REQUIRE(p.leading() == 1);
    for (long long x = -3; x <= 3; ++x) REQUIRE(p.evaluate(x) == char_poly_at(m, x));
  }
}

TEST_CASE("integer roots with multiplicities") {
  // (x - 2)^2 (x + 3) x^2 (x^2 + 1)
  IntPolynomial p = IntPolynomial::linear(2) * IntPolynomial::linear(2) * IntPolynomial::linear(-3) *
                    IntPolynomial::monomial(1, 2) * IntPolynomial(std::vector<Integer>{1, 0, 1});
  const auto r = integer_roots(p);
  REQUIRE(r.roots.size() == 3);
  CHECK(r.roots[0] == RootMultiplicity{-3, 1});
  CHECK(r.roots[1] == RootMultiplicity{0, 2});
  CHECK(r.roots[2] == RootMultiplicity{2, 2});
  CHECK_FALSE(r.fully_integral);
  CHECK(r.remainder == IntPolynomial(std::vector<Integer>{1, 0, 1}));
  CHECK_THROWS_AS(integer_roots(IntPolynomial()), Error);
}

TEST_CASE("integer roots of random split polynomials") {
  std::mt19937_64 rng(oracle::seed() + 4);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<int, int> want;
    IntPolynomial p(std::vector<Integer>{1});
    for (int k = 0; k < 1 + trial % 7; ++k) {
      const int r = d(rng);
      ++want[r];
      p = p * IntPolynomial::linear(r);
    }
    const auto got = integer_roots(p);
    REQUIRE(got.fully_integral);
    REQUIRE(got.roots.size() == want.size());
    for (const auto& [root, mult] : got.roots) REQUIRE(want.at(root.convert_to<int>()) == mult);
  }
}

TEST_CASE("polynomial printing") {
  std::ostringstream s;
  s << IntPolynomial(std::vector<Integer>{0, -2, 0, 1});
  CHECK(s.str() == "x^3 - 2x");
}

TEST_CASE("matrix text round-trips") {
  std::mt19937_64 rng(oracle::seed() + 5);
  for (int trial = 0; trial < 50; ++trial) {
    const ExactMatrix m = random_int_matrix(rng, 1 + trial % 4, 1 + trial % 5, -9, 9);
    std::ostringstream s;
    write_matrix(s, m);
    REQUIRE(parse_matrix(s.str()) == m);
  }
  RationalMatrix q(1, 2);
  q << Rational(1, 2), Rational(-3);
  std::ostringstream s;
  write_matrix(s, q);
  CHECK(s.str().find("1/2") != std::string::npos);
}

TEST_CASE("matrix parse errors") {
  CHECK_THROWS_AS(parse_matrix("2 2\n1 0\n0"), Error);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 x\n0 1"), Error);
  CHECK_THROWS_AS(parse_matrix("0 2\n"), Error);
  CHECK(parse_matrix("# comment\n1 1\n7\n")(0, 0) == 7);
}

TEST_CASE("gram and tridiagonality") {
  ExactMatrix p(3, 3);
  p << 1, 1, 0, 1, 0, 1, 1, -1, -1;
  const ExactMatrix g = gram(p);
  CHECK(g(0, 0) == 3);
  CHECK(is_tridiagonal(identity<Integer>(4)));
  ExactMatrix t = identity<Integer>(3);
  t(0, 2) = t(2, 0) = 1;
  CHECK_FALSE(is_tridiagonal(t));
  REQUIRE(first_far_entry(t).has_value());
  CHECK(first_far_entry(t)->second == 2);
}
