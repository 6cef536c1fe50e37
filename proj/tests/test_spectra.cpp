#include "doctest.h"

#include <cmath>
#include <random>

#include "centspec/error.hpp"
#include "centspec/spectra.hpp"
#include "oracles.hpp"

using namespace centspec;

namespace {

using Parts = std::vector<std::int64_t>;

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, long lo, long hi, bool symmetric) {
  std::uniform_int_distribution<long> entry(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
      m(i, j) = entry(rng);
      if (symmetric) m(j, i) = m(i, j);
    }
  return m;
}

Graph random_graph(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("matrices of small graphs") {
  const Parts k2{2};
  CHECK(matrix_of(clique_union_graph(k2), MatrixKind::Adjacency) == IntMatrix{{0, 1}, {1, 0}});
  CHECK(matrix_of(clique_union_graph(k2), MatrixKind::SignlessLaplacian) == IntMatrix{{1, 1}, {1, 1}});
  const Parts star{1, 2};
  CHECK(matrix_of(complete_multipartite_graph(star), MatrixKind::Laplacian) ==
        IntMatrix{{2, -1, -1}, {-1, 1, 0}, {-1, 0, 1}});
}

TEST_CASE("matrix row sums") {
  std::mt19937 rng(3);
  const Graph g = random_graph(rng, 12, 0.4);
  const IntMatrix l = matrix_of(g, MatrixKind::Laplacian), q = matrix_of(g, MatrixKind::SignlessLaplacian);
  for (std::size_t i = 0; i < g.order(); ++i) {
    std::int64_t ls = 0, qs = 0;
    for (std::size_t j = 0; j < g.order(); ++j) {
      ls += l(i, j);
      qs += q(i, j);
    }
    CHECK(ls == 0);
    CHECK(qs == 2 * static_cast<std::int64_t>(g.degree(i)));
  }
  CHECK(l.is_symmetric());
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(IntMatrix::identity(3)) == IntPolynomial{-1, 3, -3, 1});
  const Parts star{4, 1};
  CHECK(char_poly(matrix_of(complete_multipartite_graph(star), MatrixKind::Adjacency)) ==
        IntPolynomial{0, 0, 0, -4, 0, 1});
  const Parts k313{3, 1, 3};
  const IntMatrix a = matrix_of(complete_multipartite_graph(k313), MatrixKind::Adjacency);
  const IntPolynomial expected = IntPolynomial::monomial(4) * IntPolynomial{-18, -15, 0, 1};
  CHECK(char_poly(a) == expected);
  CHECK(oracle::leibniz_charpoly(a) == expected);
  CHECK(char_poly(IntMatrix(0, 0)) == IntPolynomial{1});
}

TEST_CASE("char_poly agrees with independent oracles on random matrices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const IntMatrix m = random_matrix(rng, n, -9, 9, trial % 2 == 0);
    CAPTURE(n);
    const IntPolynomial cp = char_poly(m);
    CHECK(cp == oracle::faddeev_leverrier(m));
    CHECK(cp == oracle::charpoly_by_interpolation(m));
    if (n <= 6) CHECK(cp == oracle::leibniz_charpoly(m));
    // p(0) = (-1)^n det(m)
    const mpz_class det = oracle::bareiss_det(oracle::to_big(m));
    CHECK(cp.coeff(0) == (n % 2 ? -det : det));
  }
}

TEST_CASE("char_poly with large entries needs many primes") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    const IntMatrix m = random_matrix(rng, 12, -1000000000L, 1000000000L, false);
    CHECK(char_poly(m) == oracle::faddeev_leverrier(m));
  }
}

TEST_CASE("char_poly of graph matrices up to 40 vertices") {
  std::mt19937 rng(5);
  for (std::size_t n : {20u, 33u, 40u}) {
    const Graph g = random_graph(rng, n, 0.5);
    for (MatrixKind kind : kAllKinds) CHECK(char_poly(matrix_of(g, kind)) == oracle::faddeev_leverrier(matrix_of(g, kind)));
  }
}

TEST_CASE("extract_spectrum examples") {
  const IntPolynomial x3 = IntPolynomial::monomial(3);
  const ExactSpectrum s1 = extract_spectrum(x3 * IntPolynomial{-4, 0, 1});
  CHECK(s1 == ExactSpectrum{{0, 3}, {2, 1}, {-2, 1}});
  CHECK(s1.is_integral());

  const ExactSpectrum s2 = extract_spectrum(x3 * IntPolynomial{-2, 0, 1});
  CHECK(s2.multiplicity(0) == 3);
  REQUIRE(s2.residuals().size() == 1);
  CHECK(s2.residuals()[0].factor == IntPolynomial{-2, 0, 1});
  CHECK_FALSE(is_integral(s2));

  const ExactSpectrum s3 = extract_spectrum(IntPolynomial::monomial(4) * IntPolynomial{-18, -15, 0, 1});
  CHECK(s3.multiplicity(0) == 4);
  CHECK(s3.multiplicity(-3) == 1);
  REQUIRE(s3.residuals().size() == 1);
  CHECK(s3.residuals()[0].factor == IntPolynomial{-6, -3, 1});
  CHECK(s3.dimension() == 7);

  CHECK(ExactSpectrum().is_integral());
  CHECK(ExactSpectrum().dimension() == 0);
}

TEST_CASE("extract_spectrum is a factorization") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> root(-30, 30), coeff(-20, 20);
  for (int trial = 0; trial < 60; ++trial) {
    IntPolynomial p{1};
    for (int i = trial % 5; i >= 0; --i) p = p * IntPolynomial::linear_root(root(rng));
    IntPolynomial extra{coeff(rng), coeff(rng), 1};
    p = p * extra * (trial % 3 == 0 ? extra : IntPolynomial{1});
    const ExactSpectrum s = extract_spectrum(p);
    CHECK(s.to_polynomial() == p);
    CHECK(s.dimension() == p.degree());
    for (const auto& r : s.residuals()) {
      CHECK(r.factor.degree() >= 2);
      CHECK(r.factor.is_monic());
      for (long x = -60; x <= 60; ++x) CHECK(r.factor.evaluate(x) != 0);
    }
  }
}

TEST_CASE("extract_spectrum with huge constant terms") {
  // roots far beyond the divisor scan limit
  const mpz_class big("1000000007");
  const IntPolynomial p = IntPolynomial::linear_root(big) * IntPolynomial::linear_root(-big + 4) * IntPolynomial{-3, 0, 1};
  const ExactSpectrum s = extract_spectrum(p);
  CHECK(s.multiplicity(big) == 1);
  CHECK(s.multiplicity(-big + 4) == 1);
  CHECK(s.to_polynomial() == p);
}

TEST_CASE("spectrum multiplicities agree with exact nullities") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = random_graph(rng, 10, 0.5);
    for (MatrixKind kind : kAllKinds) {
      const IntMatrix m = matrix_of(g, kind);
      const ExactSpectrum s = extract_spectrum(char_poly(m));
      for (const auto& [value, mult] : s.eigenvalues())
        CHECK(oracle::nullity(m, value.get_si()) == static_cast<std::size_t>(mult));
    }
  }
}

TEST_CASE("normalization merges and drops zero multiplicities") {
  ExactSpectrum a{{1, 2}, {1, 1}, {5, 0}};
  CHECK(a.multiplicity(1) == 3);
  CHECK(a.multiplicity(5) == 0);
  ExactSpectrum r;
  r.add_residual(IntPolynomial{-2, 0, 1}, 1);
  r.add_residual(IntPolynomial{-2, 0, 1}, 1);
  ExactSpectrum r2;
  r2.add_residual(IntPolynomial{-2, 0, 1}.pow(2), 1);
  CHECK(r == r2);
  ExactSpectrum split;
  split.add_residual(IntPolynomial{-4, 0, 1}, 1);
  CHECK(split == ExactSpectrum{{2, 1}, {-2, 1}});
  CHECK_THROWS(split.add_residual(IntPolynomial{1, 2}, 1));
}

TEST_CASE("power sums") {
  ExactSpectrum s{{3, 1}, {-1, 2}};
  s.add_residual(IntPolynomial{-3, -3, 1}, 1);  // roots sum 3, squares 9 + 6 = 15
  CHECK(s.power_sum(0) == 5);
  CHECK(s.power_sum(1) == 3 - 2 + 3);
  CHECK(s.power_sum(2) == 9 + 2 + 15);
}

TEST_CASE("trace identities on random graphs") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(rng, 6 + trial, 0.45);
    const mpz_class e2 = 2 * mpz_class(static_cast<unsigned long>(g.edge_count()));
    const auto a = extract_spectrum(char_poly(matrix_of(g, MatrixKind::Adjacency)));
    const auto l = extract_spectrum(char_poly(matrix_of(g, MatrixKind::Laplacian)));
    const auto q = extract_spectrum(char_poly(matrix_of(g, MatrixKind::SignlessLaplacian)));
    CHECK(a.power_sum(1) == 0);
    CHECK(a.power_sum(2) == e2);
    CHECK(l.power_sum(1) == e2);
    CHECK(q.power_sum(1) == e2);
  }
}

TEST_CASE("stars are bipartite so L and Q spectra coincide") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    const Parts star{n, 1};
    const Graph g = complete_multipartite_graph(star);
    CHECK(extract_spectrum(char_poly(matrix_of(g, MatrixKind::Laplacian))) ==
          extract_spectrum(char_poly(matrix_of(g, MatrixKind::SignlessLaplacian))));
  }
}

TEST_CASE("complement Laplacian transfer") {
  CHECK(complement_L_spectrum(ExactSpectrum{{0, 3}, {3, 4}}, 7) == ExactSpectrum{{0, 1}, {4, 4}, {7, 2}});
  CHECK(complement_L_spectrum(ExactSpectrum{{0, 5}}, 5) == ExactSpectrum{{0, 1}, {5, 4}});
  CHECK_THROWS_AS(complement_L_spectrum(ExactSpectrum{{1, 2}}, 2), MissingZero);
  std::mt19937 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = random_graph(rng, 4 + trial % 8, 0.5);
    const auto l = extract_spectrum(char_poly(matrix_of(g, MatrixKind::Laplacian)));
    const auto lc = extract_spectrum(char_poly(matrix_of(g.complement(), MatrixKind::Laplacian)));
    CHECK(complement_L_spectrum(l, static_cast<std::int64_t>(g.order())) == lc);
  }
}

TEST_CASE("quotient matrices") {
  const Parts psl1{3, 3, 1};
  CHECK(quotient_matrix(psl1, MatrixKind::SignlessLaplacian, PartitionVariant::Multipartite) ==
        IntMatrix{{4, 3, 1}, {3, 4, 1}, {3, 3, 6}});
  for (std::int64_t m = 1; m <= 6; ++m) {
    const Parts single{m};
    CHECK(quotient_matrix(single, MatrixKind::Adjacency, PartitionVariant::CliqueUnion) == IntMatrix{{m - 1}});
  }
  const IntMatrix lp{{4, 3, 1}, {3, 4, 1}, {3, 3, 6}};
  CHECK(char_poly(lp) == IntPolynomial{-36, 49, -14, 1});
  CHECK(extract_spectrum(char_poly(lp)) == ExactSpectrum{{1, 1}, {4, 1}, {9, 1}});
}

TEST_CASE("equitable quotients divide the full characteristic polynomial") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> count(1, 4), size(1, 6);
    Parts parts;
    for (int i = count(rng); i > 0; --i) parts.push_back(size(rng));
    for (MatrixKind kind : kAllKinds) {
      const Graph g = complete_multipartite_graph(parts);
      const IntMatrix m = matrix_of(g, kind);
      const auto cells = components(g.complement());
      const auto q = equitable_quotient(m, cells);
      REQUIRE(q.has_value());
      CHECK(*q == quotient_matrix(parts, kind, PartitionVariant::Multipartite));
      CHECK(char_poly(m).divmod_monic(char_poly(*q)).second.is_zero());
    }
  }
  // a path split into {end, end} and {middle} is equitable; {0,1},{2} is not
  const IntMatrix p3 = matrix_of(path_graph(3), MatrixKind::Adjacency);
  CHECK(equitable_quotient(p3, {{0, 2}, {1}}) == IntMatrix{{0, 1}, {2, 0}});
  CHECK_FALSE(equitable_quotient(p3, {{0, 1}, {2}}).has_value());
}

TEST_CASE("approximate roots") {
  auto near = [](double a, double b) { return std::fabs(a - b) < 1e-10; };
  const auto r2 = approx_roots(IntPolynomial{-2, 0, 1});
  REQUIRE(r2.size() == 2);
  CHECK(near(r2[0], -std::sqrt(2.0)));
  CHECK(near(r2[1], std::sqrt(2.0)));
  const auto r33 = approx_roots(IntPolynomial{-6, -3, 1});
  REQUIRE(r33.size() == 2);
  CHECK(near(r33[0], (3 - std::sqrt(33.0)) / 2));
  CHECK(near(r33[1], (3 + std::sqrt(33.0)) / 2));
  const auto r5 = approx_roots(IntPolynomial{-5, 1});
  REQUIRE(r5.size() == 1);
  CHECK(near(r5[0], 5.0));
  const auto cubic = approx_roots(IntPolynomial{-1200, 441, -42, 1});
  REQUIRE(cubic.size() == 3);
  for (double x : cubic) CHECK(std::fabs(((x - 42) * x + 441) * x - 1200) < 1e-6);
}

TEST_CASE("Sturm counts") {
  const IntPolynomial p = IntPolynomial{-2, 0, 1} * IntPolynomial{-3, 1};
  const auto seq = sturm_sequence(p);
  CHECK(count_real_roots(seq, -10, 10, 0) == 3);
  CHECK(count_real_roots(seq, 0, 2, 0) == 1);
  CHECK(count_real_roots(seq, 2, 3, 0) == 1);  // (2, 3] contains 3
}

TEST_CASE("kind names") {
  CHECK(parse_kind("signless") == MatrixKind::SignlessLaplacian);
  CHECK(kind_name(MatrixKind::Laplacian) == "laplacian");
  CHECK_THROWS_AS(parse_kind("normalized"), InvalidParams);
}
