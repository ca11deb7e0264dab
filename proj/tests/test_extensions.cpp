#include "oracles.hpp"

#include "pivotal/decomposition.hpp"
#include "pivotal/error.hpp"
#include "pivotal/extensions.hpp"

#include <doctest.h>

#include <random>

using namespace pivotal;

namespace {

std::vector<Rational> vertices_of_mask(std::size_t n, unsigned mask) {
  std::vector<Rational> v;
  for (unsigned s = 0; s < (1U << n); ++s) v.emplace_back(static_cast<int>((mask >> s) & 1U));
  return v;
}

// Nondecreasing on {0,1}^n by brute force over all comparable pairs.
bool nondecreasing(const std::vector<Rational>& v) {
  for (unsigned a = 0; a < v.size(); ++a) {
    for (unsigned b = 0; b < v.size(); ++b) {
      if ((a & b) == a && v[a] > v[b]) return false;
    }
  }
  return true;
}

std::vector<Rational> random_vertices(std::mt19937& rng, std::size_t n) {
  std::vector<Rational> v;
  for (unsigned s = 0; s < (1U << n); ++s) v.push_back(oracle::random_rational(rng));
  return v;
}

}  // namespace

TEST_SUITE("extensions") {
  TEST_CASE("sop_form examples") {
    const FunctionTable and2 = FunctionTable::boolean_from_mask(2, 0b1000);
    // Vertex order is by subset mask, bit 0 for x1.
    CHECK(sop_form(and2).vertex_values() == std::vector<Rational>{0, 0, 0, 1});
    const MultilinearForm x = sop_form(FunctionTable::boolean_from_mask(2, 0b0110));
    CHECK(x.vertex_values() == std::vector<Rational>{0, 1, 1, 0});
    const auto poly = monomial_coefficients(x);
    // x1(1−x2) + (1−x1)x2 = x1 + x2 − 2 x1 x2
    CHECK(poly == std::vector<Rational>{0, 1, 1, -2});
    CHECK(poly[3] == oracle::expand(x.vertex_values(), 2)[3]);
    const MultilinearForm one = sop_form(FunctionTable::constant(3, Sort::boolean(), Sort::boolean(), 1));
    for (const auto& p : oracle::grid_points(4, 3)) CHECK(mle_evaluate(one, p) == 1);
  }

  TEST_CASE("vertex_index and characteristic vectors") {
    const FunctionTable f = FunctionTable::constant(3, Sort::chain(3), Sort::chain(3), 0);
    for (unsigned s = 0; s < 8; ++s) {
      const Point x = characteristic_vector(3, s);
      CHECK(f.index_of(x) == vertex_index(f, s));
      for (std::size_t i = 0; i < 3; ++i) CHECK(x[i] == ((s >> i) & 1U));
    }
  }

  TEST_CASE("mle_evaluate examples") {
    const MultilinearForm and2(2, {0, 0, 0, 1});
    const Rational h(1, 2);
    const std::vector<Rational> hh{h, h};
    CHECK(mle_evaluate(and2, hh) == Rational(1, 4));
    CHECK(oracle::lagrange(and2.vertex_values(), hh) == Rational(1, 4));
    const MultilinearForm xor2(2, {0, 1, 1, 0});
    CHECK(mle_evaluate(xor2, hh) == h);
    const std::vector<Rational> out{2, 0};
    CHECK_THROWS_AS(mle_evaluate(and2, out), DomainError);
    const std::vector<Rational> short_point{h};
    CHECK_THROWS_AS(mle_evaluate(and2, short_point), DomainError);
  }

  TEST_CASE("interpolation and agreement with the Lagrange oracle") {
    std::mt19937 rng(1);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto v = random_vertices(rng, n);
        const MultilinearForm m(n, v);
        for (unsigned s = 0; s < (1U << n); ++s) {
          const Point x = characteristic_vector(n, s);
          CHECK(mle_evaluate(m, x) == v[s]);
        }
        if (n <= 3) {
          for (const auto& x : oracle::grid_points(4, n)) CHECK(mle_evaluate(m, x) == oracle::lagrange(v, x));
        }
      }
    }
  }

  TEST_CASE("mle_partial examples") {
    const Rational h(1, 2);
    const std::vector<Rational> x{0, h};
    CHECK(mle_partial(MultilinearForm(2, {0, 0, 0, 1}), 1, x) == h);
    CHECK(mle_partial(MultilinearForm(2, {3, 3, 3, 3}), 2, x) == 0);
    CHECK(mle_partial(MultilinearForm(2, {0, 1, 1, 0}), 1, x) == 0);
    CHECK_THROWS_AS(mle_partial(MultilinearForm(2, {0, 1, 1, 0}), 3, x), DomainError);
  }

  TEST_CASE("mle_partial equals the symbolic derivative") {
    std::mt19937 rng(2);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto v = random_vertices(rng, n);
        const MultilinearForm m(n, v);
        const auto poly = oracle::expand(v, n);
        for (std::size_t k = 1; k <= n; ++k) {
          const auto d = oracle::derivative(poly, k);
          for (const auto& x : oracle::grid_points(4, n)) CHECK(mle_partial(m, k, x) == oracle::evaluate_poly(d, x));
        }
      }
    }
  }

  TEST_CASE("monomial coefficients match the expanded polynomial") {
    std::mt19937 rng(3);
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto v = random_vertices(rng, n);
      const auto c = monomial_coefficients(MultilinearForm(n, v));
      const auto poly = oracle::expand(v, n);
      for (unsigned s = 0; s < c.size(); ++s) {
        const auto it = poly.find(s);
        CHECK(c[s] == (it == poly.end() ? Rational(0) : it->second));
      }
    }
  }

  TEST_CASE("check_mle_identity") {
    std::mt19937 rng(4);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto r = check_mle_identity(MultilinearForm(n, random_vertices(rng, n)));
        CHECK(r.holds);
        CHECK(r.per_pivot.size() == n);
        CHECK_FALSE(r.witness);
      }
    }
    // x1^2 + x2 agrees with a multilinear form on {0,1}^2 but not off it.
    const Evaluator square = [](std::span<const Rational> x) { return Rational(x[0] * x[0] + x[1]); };
    const auto bad = check_mle_identity(square, 2);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness);
    CHECK(bad.witness->second == 1);
    CHECK_FALSE(bad.per_pivot[0]);
    CHECK(bad.per_pivot[1]);

    // Unary forms: x·f(1) + (1−x)·f(0) equals the mle-affine pivot on the grid.
    const MultilinearForm u(1, {Rational(2), Rational(-1, 3)});
    for (const auto& p : oracle::grid(4)) {
      const std::vector<Rational> x{p};
      CHECK(mle_evaluate(u, x) == *PivotalFunction::mle_affine().apply(p, Rational(-1, 3), 2));
    }
  }

  TEST_CASE("grid identity for every form agrees with the oracle") {
    std::mt19937 rng(5);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto v = random_vertices(rng, n);
      for (const auto& x : oracle::grid_points(4, n)) {
        for (std::size_t k = 0; k < n; ++k) {
          auto hi = x;
          auto lo = x;
          hi[k] = 1;
          lo[k] = 0;
          CHECK(oracle::lagrange(v, x) == x[k] * oracle::lagrange(v, hi) + (1 - x[k]) * oracle::lagrange(v, lo));
        }
      }
    }
  }

  TEST_CASE("monotone identity characterizes nondecreasing vertex tables") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (unsigned mask = 0; mask < (1U << (1U << n)); ++mask) {
        const auto v = vertices_of_mask(n, mask);
        CHECK(check_monotone_mle_identity(MultilinearForm(n, v)).holds == nondecreasing(v));
      }
    }
  }

  TEST_CASE("mobius examples") {
    const std::vector<Rational> card{0, 1, 1, 2};
    CHECK(mobius(2, card).coefficients() == std::vector<Rational>{0, 1, 1, 0});
    const std::vector<Rational> c{5, 5, 5, 5};
    CHECK(mobius(2, c).coefficients() == std::vector<Rational>{5, 0, 0, 0});
    const std::vector<Rational> lov{0, 0, 0, 1, 0, 0, 1, 2};
    const auto l = mobius(3, lov);
    for (unsigned s = 0; s < 8; ++s) CHECK(l.coefficient(s) == ((s == 3 || s == 6) ? 1 : 0));
    CHECK(l.coefficients() == oracle::mobius(lov));
  }

  TEST_CASE("mobius and zeta round trip") {
    std::mt19937 rng(6);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto v = random_vertices(rng, n);
        const auto l = mobius(n, v);
        CHECK(l.coefficients() == oracle::mobius(v));
        CHECK(zeta(l) == v);
      }
    }
    const FunctionTable t(2, Sort::boolean(), Sort::rational(), {0, 1, 1, 2});
    CHECK(mobius(t).coefficients() == std::vector<Rational>{0, 1, 1, 0});
  }

  TEST_CASE("lovasz_evaluate examples") {
    const LovaszForm l(3, {0, 0, 0, 1, 0, 0, 1, 0});
    const Rational h(1, 2);
    const std::vector<Rational> a{h, h, h};
    const std::vector<Rational> b{Rational(1, 4), h, Rational(3, 4)};
    CHECK(lovasz_evaluate(l, a) == 1);
    CHECK(lovasz_evaluate(l, b) == Rational(3, 4));
    const LovaszForm zero(3, std::vector<Rational>(8, 0));
    CHECK(lovasz_evaluate(zero, b) == 0);
    const std::vector<Rational> out{h, h, 2};
    CHECK_THROWS_AS(lovasz_evaluate(l, out), DomainError);
  }

  TEST_CASE("lovasz agrees with the vertex table and the oracle") {
    std::mt19937 rng(7);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto v = random_vertices(rng, n);
        const auto l = mobius(n, v);
        for (unsigned s = 0; s < (1U << n); ++s) CHECK(lovasz_evaluate(l, characteristic_vector(n, s)) == v[s]);
        for (const auto& x : oracle::grid_points(4, n)) CHECK(lovasz_evaluate(l, x) == oracle::lovasz(l.coefficients(), x));
      }
    }
  }

  TEST_CASE("binary lovasz pivotals validate on random coefficients") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Rational> a{oracle::random_rational(rng), oracle::random_rational(rng), oracle::random_rational(rng),
                              oracle::random_rational(rng)};
      if (trial % 3 == 0) a[2] = 0;
      if (trial % 3 == 1) a[1] = 0;
      if (trial % 5 == 0) a[3] = 0;
      const LovaszForm l(2, a);
      const auto [p1, p2] = binary_lovasz_pivotals(l);
      const std::vector<PivotalFunction> pis{p1, p2};
      const FunctionTable f = sample_on_grid(l, 4);
      CHECK(check_componentwise(f, pis).holds);
    }
  }

  TEST_CASE("sample_on_grid") {
    const MultilinearForm m(2, {0, 0, 0, 1});
    const FunctionTable f = sample_on_grid(m, 2);
    CHECK(f.domain() == Sort::grid(2));
    CHECK(f.size() == 9);
    CHECK(evaluate(f, {Rational(1, 2), Rational(1, 2)}) == Rational(1, 4));
  }

  TEST_CASE("monotone_witness examples") {
    const FunctionTable nand(2, Sort::boolean(), Sort::rational(), {0, 1, 0, 0});
    const auto w = monotone_witness(nand);
    REQUIRE(w);
    CHECK(w->phis == std::vector<Orientation>{Orientation::negation, Orientation::identity});
    const FunctionTable g = apply_orientation(nand, *w);
    CHECK(nondecreasing(vertex_values(g)));

    const FunctionTable or2(2, Sort::boolean(), Sort::rational(), {0, 1, 1, 1});
    CHECK(monotone_witness(or2)->phis == std::vector<Orientation>{Orientation::identity, Orientation::identity});
    const FunctionTable c(2, Sort::boolean(), Sort::rational(), {3, 3, 3, 3});
    CHECK(monotone_witness(c)->phis == std::vector<Orientation>{Orientation::identity, Orientation::identity});

    const FunctionTable xor2(2, Sort::boolean(), Sort::rational(), {0, 1, 1, 0});
    CHECK_FALSE(monotone_witness(xor2));
  }

  TEST_CASE("monotone_witness agrees with orientation brute force") {
    std::mt19937 rng(9);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<Value> v;
        for (std::size_t i = 0; i < (1U << n); ++i) v.emplace_back(static_cast<int>(rng() % 3));
        const FunctionTable f(n, Sort::boolean(), Sort::rational(), v);
        // Try every orientation: the table composed with flips is nondecreasing for some flip set.
        bool exists = false;
        for (unsigned flips = 0; flips < (1U << n) && !exists; ++flips) {
          std::vector<Rational> g(1U << n);
          for (unsigned s = 0; s < (1U << n); ++s) g[s] = vertex_values(f)[s ^ flips];
          exists = nondecreasing(g);
        }
        const auto w = monotone_witness(f);
        CHECK(w.has_value() == exists);
        if (w) {
          CHECK(nondecreasing(vertex_values(apply_orientation(f, *w))));
          CHECK(check_componentwise(f, orientation_pivotals(f, *w)).holds);
        }
      }
    }
  }
}
