#include <gkzhodge/linalg.hpp>

#include <doctest.h>
#include <test_util.hpp>

#include <functional>

using namespace gkz;
using gkz::test::uniform;
using gkz::test::v;

namespace {

// Laplace expansion; independent of the elimination code under test.
Int laplace_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Int term = m[0][j] * laplace_det(minor);
    out += (j % 2 == 0) ? term : Int(-term);
  }
  return out;
}

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// gcd of all k x k minors.
Int determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Int g = 0;
  subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
    subsets(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<Int>> sub;
      for (auto r : rows) {
        std::vector<Int> row;
        for (auto c : cols) row.push_back(m(r, c));
        sub.push_back(row);
      }
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(laplace_det(sub)).get_mpz_t());
    });
  });
  return g;
}

std::size_t minor_rank(const IntMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
    if (determinantal_divisor(m, k) != 0) return k;
  return 0;
}

IntMatrix random_matrix(std::size_t r, std::size_t c, long lo, long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

}  // namespace

TEST_CASE("smith normal form of a known matrix") {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto snf = smith_normal_form(m);
  CHECK(snf.C * snf.E * snf.F == m);
  CHECK(snf.diagonal() == v({2, 6, 12}));
  CHECK(snf.rank == 3);
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(3, 4, -4, 4);
    auto snf = smith_normal_form(m);
    REQUIRE(snf.C * snf.E * snf.F == m);
    CHECK(snf.C * snf.C_inv == IntMatrix::identity(3));
    CHECK(snf.F * snf.F_inv == IntMatrix::identity(4));
    IntVec diag = snf.diagonal();
    Int prev = 1;
    for (std::size_t k = 1; k <= 3; ++k) {
      Int dk = determinantal_divisor(m, k);
      if (dk == 0) {
        CHECK(snf.rank < k);
        break;
      }
      CHECK(diag[k - 1] == dk / prev);
      prev = dk;
    }
    for (std::size_t i = 0; i + 1 < snf.rank; ++i) CHECK(diag[i + 1] % diag[i] == 0);
  }
}

TEST_CASE("rank matches the largest nonvanishing minor") {
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(3, 4, -2, 2);
    CHECK(rank(m) == minor_rank(m));
  }
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(IntMatrix(2, 3)) == 0);
}

TEST_CASE("kernel lattice is saturated and of the right size") {
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = random_matrix(2, 4, -3, 3);
    auto ker = kernel_lattice(m);
    CHECK(ker.vectors.size() == 4 - rank(m));
    for (auto& k : ker.vectors) CHECK(m.apply(k) == IntVec(2, Int(0)));
    if (ker.vectors.empty()) continue;
    IntMatrix basis = IntMatrix::from_columns(ker.vectors, 4);
    // Saturated: the maximal minors of the basis are coprime.
    CHECK(determinantal_divisor(basis, ker.vectors.size()) == 1);
  }
}

TEST_CASE("determinant and full lattice span") {
  CHECK(determinant(IntMatrix{{2, 1}, {1, 1}}) == 1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(spans_full_lattice(IntMatrix{{1, 1, 1}, {0, 1, 2}}));
  CHECK_FALSE(spans_full_lattice(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("nonnegative solutions agree with enumeration") {
  IntMatrix m{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}};
  for (long a = 0; a <= 4; ++a)
    for (long b = -1; b <= 4; ++b)
      for (long c = -1; c <= 4; ++c) {
        IntVec t = v({a, b, c});
        bool brute = false;
        for (long k0 = 0; k0 <= 4 && !brute; ++k0)
          for (long k1 = 0; k1 <= 4 && !brute; ++k1)
            for (long k2 = 0; k2 <= 4 && !brute; ++k2)
              for (long k3 = 0; k3 <= 4 && !brute; ++k3)
                if (m.apply(v({k0, k1, k2, k3})) == t) brute = true;
        auto sol = nonneg_integer_solve(m, t);
        CHECK(sol.has_value() == brute);
        if (sol) CHECK(m.apply(*sol) == t);
      }
}

TEST_CASE("nonneg_solutions_upto lists every solution in order") {
  IntMatrix m{{1, 1, 1}, {0, 1, 2}};
  auto sols = nonneg_solutions_upto(m, v({2, 2}), 2);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0] == v({0, 2, 0}));
  CHECK(sols[1] == v({1, 0, 1}));
}

TEST_CASE("search that gives up throws BoundExceeded") {
  // The smallest solution is (0, 40, 1), far past the bound.
  IntMatrix m{{1, -1, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(nonneg_integer_solve(m, v({-40, 1}), SolveOptions{3}), BoundExceeded);
}

TEST_CASE("matrix files round-trip") {
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m = random_matrix(static_cast<std::size_t>(uniform(1, 4)), static_cast<std::size_t>(uniform(1, 5)),
                                -9, 9);
    CHECK(parse_matrix(matrix_to_json(m)) == m);
    CHECK(parse_matrix(matrix_to_text(m)) == m);
  }
  IntMatrix big(1, 1);
  big(0, 0) = Int("123456789012345678901234567890");
  CHECK(parse_matrix(matrix_to_json(big)) == big);
  CHECK(parse_matrix("# comment\n1 2\n3 4\n") == IntMatrix{{1, 2}, {3, 4}});
  CHECK_THROWS(parse_matrix(R"({"rows": 2, "entries": [[1]]})"));
}
