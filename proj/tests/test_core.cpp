#include "fixtures.hpp"
#include "oracles.hpp"

#include "pivotal/equivalence.hpp"
#include "pivotal/error.hpp"
#include "pivotal/function_table.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace pivotal;

namespace {

FunctionTable and2() { return oracle::boolean(2, [](const auto& x) { return x[0] & x[1]; }); }
FunctionTable parity(std::size_t n) {
  return oracle::boolean(n, [](const auto& x) {
    int p = 0;
    for (int b : x) p ^= b;
    return p;
  });
}

std::vector<FunctionTable> all_boolean(std::size_t n) {
  std::vector<FunctionTable> out;
  for (unsigned long long m = 0; m < (1ULL << (1ULL << n)); ++m) out.push_back(oracle::boolean_mask(n, m));
  return out;
}

// Every table of arity n over a sort of the given size into the same sort.
std::vector<FunctionTable> all_tables(const Sort& s, std::size_t n) {
  const std::size_t points = oracle::ipow(s.size(), n);
  std::vector<FunctionTable> out;
  for (std::size_t code = 0; code < oracle::ipow(s.size(), points); ++code) {
    std::vector<Value> values;
    for (std::size_t d : oracle::digits(code, s.size(), points)) values.push_back(s.element(d));
    out.emplace_back(n, s, s, values);
  }
  return out;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("evaluate") {
    CHECK(evaluate(and2(), {1, 1}) == 1);
    CHECK(evaluate(and2(), {1, 0}) == 0);
    // Fold of XOR over (1,1,0).
    CHECK(evaluate(parity(3), {1, 1, 0}) == (1 ^ 1 ^ 0));
    CHECK_THROWS_AS(evaluate(and2(), {1}), DomainError);
    CHECK_THROWS_AS(evaluate(and2(), {1, 2}), DomainError);
    CHECK_THROWS_AS(evaluate(and2(), {Rational(1, 2), 0}), DomainError);
  }

  TEST_CASE("substitute") {
    CHECK(substitute({0, 1}, 1, 1) == Point{1, 1});
    CHECK(substitute({1, 1}, 1, 1) == Point{1, 1});
    const Rational h(1, 2);
    CHECK(substitute({h, h, h}, 2, 0) == Point{h, 0, h});
    CHECK_THROWS_AS(substitute({0, 1}, 0, 1), DomainError);
    CHECK_THROWS_AS(substitute({0, 1}, 3, 1), DomainError);
  }

  TEST_CASE("cofactor") {
    const FunctionTable id = oracle::boolean(1, [](const auto& x) { return x[0]; });
    CHECK(cofactor(and2(), 1, 1) == id);
    CHECK(cofactor(and2(), 1, 0) == FunctionTable::constant(1, Sort::boolean(), Sort::boolean(), 0));
    CHECK(cofactor(parity(3), 2, 1) == oracle::boolean(2, [](const auto& x) { return !(x[0] ^ x[1]); }));

    // n = 1: a unary table whose argument is inessential.
    const FunctionTable c = cofactor(id, 1, 1);
    CHECK(c.arity() == 1);
    CHECK(c.is_constant());
    CHECK(c.at(0) == 1);
    CHECK(essential_arguments(c).empty());

    CHECK_THROWS_AS(cofactor(and2(), 3, 1), DomainError);
    CHECK_THROWS_AS(cofactor(and2(), 1, 2), DomainError);
  }

  TEST_CASE("section") {
    CHECK(section(and2(), {1, 2}, {0, 0}) == and2());
    CHECK(section(and2(), {1}, {0, 1}) == oracle::boolean(1, [](const auto& x) { return x[0]; }));

    const Sort l = fixture::lattice(fixture::chain3());
    const Value m = l.parse("m");
    const FunctionTable meet = FunctionTable::tabulate(2, l, l, [&](const Point& x) { return l.meet(x[0], x[1]); });
    const FunctionTable s = section(meet, {1}, {0, m});
    for (std::size_t a = 0; a < l.size(); ++a) CHECK(evaluate(s, {l.element(a)}) == l.meet(l.element(a), m));

    CHECK_THROWS_AS(section(and2(), {}, {0, 0}), DomainError);
    CHECK_THROWS_AS(section(and2(), {1}, {0}), DomainError);
    CHECK_THROWS_AS(section(and2(), {3}, {0, 0}), DomainError);
  }

  TEST_CASE("essential arguments") {
    CHECK(essential_arguments(oracle::boolean(2, [](const auto& x) { return x[0]; })) == IndexSet{1});
    CHECK(essential_arguments(FunctionTable::constant(3, Sort::boolean(), Sort::boolean(), 1)).empty());
    const FunctionTable chi11 = oracle::boolean(2, [](const auto& x) { return x[0] == 1 && x[1] == 1; });
    CHECK(essential_arguments(chi11) == oracle::essential(chi11));
    CHECK(essential_arguments(chi11) == IndexSet{1, 2});
  }

  TEST_CASE("remap") {
    const FunctionTable id = oracle::boolean(1, [](const auto& x) { return x[0]; });
    const std::vector<std::size_t> to2{2};
    CHECK(remap(id, to2, 2) == oracle::boolean(2, [](const auto& x) { return x[1]; }));
    const std::vector<std::size_t> diag{1, 1};
    CHECK(remap(and2(), diag, 1) == id);
    const std::vector<std::size_t> swap{2, 1};
    CHECK(remap(and2(), swap, 2) == and2());
    const std::vector<std::size_t> bad{3, 1};
    CHECK_THROWS_AS(remap(and2(), bad, 2), DomainError);
  }

  TEST_CASE("is_equivalent examples") {
    const FunctionTable g = oracle::boolean(3, [](const auto& x) { return x[1] & x[2]; });
    const auto w = is_equivalent(and2(), g);
    REQUIRE(w);
    CHECK(verify_witness(and2(), g, *w));

    const FunctionTable c0 = FunctionTable::constant(1, Sort::boolean(), Sort::boolean(), 0);
    const FunctionTable c1 = FunctionTable::constant(1, Sort::boolean(), Sort::boolean(), 1);
    CHECK_FALSE(is_equivalent(c0, c1));

    const FunctionTable f = oracle::boolean(2, [](const auto& x) { return x[0] & !x[1]; });
    const FunctionTable h = oracle::boolean(2, [](const auto& x) { return !x[0] & x[1]; });
    CHECK(oracle::equivalent(f, h));
    const auto t = is_equivalent(f, h);
    REQUIRE(t);
    CHECK(verify_witness(f, h, *t));

    const FunctionTable rat = FunctionTable(2, Sort::boolean(), Sort::rational(), {0, 0, 0, 1});
    CHECK_THROWS_AS(is_equivalent(and2(), rat), SortError);
  }

  TEST_CASE("index round trip") {
    for (std::size_t size = 2; size <= 4; ++size) {
      const Sort s = Sort::chain(size);
      for (std::size_t n = 1; n <= 3; ++n) {
        const FunctionTable f = FunctionTable::constant(n, s, s, 0);
        for (std::size_t i = 0; i < f.size(); ++i) {
          CHECK(f.index_of(f.point_at(i)) == i);
          const auto d = oracle::digits(i, size, n);
          for (std::size_t k = 1; k <= n; ++k) CHECK(f.digit(i, k) == d[k - 1]);
        }
      }
    }
  }

  TEST_CASE("full section is the identity and cofactors agree with substitution") {
    std::mt19937 rng(11);
    for (std::size_t size = 2; size <= 3; ++size) {
      const Sort s = Sort::chain(size);
      for (std::size_t n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
          std::vector<Value> values;
          for (std::size_t i = 0; i < oracle::ipow(size, n); ++i) values.push_back(s.element(rng() % size));
          const FunctionTable f(n, s, s, values);
          IndexSet all;
          for (std::size_t k = 1; k <= n; ++k) all.push_back(k);
          for (std::size_t i = 0; i < f.size(); ++i) {
            const Point x = f.point_at(i);
            CHECK(section(f, all, x) == f);
            for (std::size_t k = 1; k <= n; ++k) {
              for (std::size_t a = 0; a < size; ++a) {
                const FunctionTable c = cofactor(f, k, s.element(a));
                Point dropped = x;
                if (n > 1) dropped.erase(dropped.begin() + static_cast<long>(k - 1));
                CHECK(evaluate(c, dropped) == evaluate(f, substitute(x, k, s.element(a))));
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("equivalence is an equivalence relation matching the brute-force oracle") {
    std::vector<FunctionTable> tables;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& f : all_boolean(n)) tables.push_back(std::move(f));
    }
    // Partition by the library, then check every pair against the partition.
    std::vector<std::size_t> rep_of(tables.size());
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      std::size_t r = 0;
      while (r < reps.size() && !is_equivalent(tables[reps[r]], tables[i])) ++r;
      if (r == reps.size()) reps.push_back(i);
      rep_of[i] = r;
    }
    std::size_t mismatches = 0;
    std::size_t asymmetric = 0;
    std::size_t bad_witness = 0;
    std::size_t bad_count = 0;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      for (std::size_t j = 0; j < tables.size(); ++j) {
        const auto w = is_equivalent(tables[i], tables[j]);
        if (w.has_value() != (rep_of[i] == rep_of[j])) ++mismatches;
        if (w.has_value() != is_equivalent(tables[j], tables[i]).has_value()) ++asymmetric;
        if (w && !verify_witness(tables[i], tables[j], *w)) ++bad_witness;
        if (w && essential_arguments(tables[i]).size() != essential_arguments(tables[j]).size()) ++bad_count;
      }
    }
    CHECK(mismatches == 0);
    CHECK(asymmetric == 0);
    CHECK(bad_witness == 0);
    CHECK(bad_count == 0);

    // Brute-force (sigma, mu) search on every pair with n, m <= 2 ...
    std::size_t disagreements = 0;
    for (std::size_t i = 0; i < 20; ++i) {
      for (std::size_t j = 0; j < 20; ++j) {
        if (is_equivalent(tables[i], tables[j]).has_value() != oracle::equivalent(tables[i], tables[j])) ++disagreements;
      }
    }
    // ... and on a sample of pairs involving arity 3, half of them equivalent by construction.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
      const FunctionTable& f = tables[rng() % tables.size()];
      FunctionTable g = tables[rng() % tables.size()];
      if (trial % 2 == 0) {
        std::vector<std::size_t> sigma;
        const std::size_t m = 1 + rng() % 3;
        std::vector<std::size_t> perm(f.arity());
        for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        // Re-embed f in arity max(m, n) with permuted arguments.
        const std::size_t target = std::max(m, f.arity());
        if (target > 3) continue;
        std::vector<std::size_t> pick(target);
        for (std::size_t k = 0; k < target; ++k) pick[k] = k + 1;
        std::shuffle(pick.begin(), pick.end(), rng);
        pick.resize(f.arity());
        g = oracle::remap(f, pick, target);
      }
      if (is_equivalent(f, g).has_value() != oracle::equivalent(f, g)) ++disagreements;
    }
    CHECK(disagreements == 0);
  }

  TEST_CASE("equivalent functions have equivalent sections") {
    // f ≡ g implies every f_S^a is equivalent to some g_T^b.
    const auto sections_of = [](const FunctionTable& f) {
      std::vector<FunctionTable> out;
      for (unsigned mask = 1; mask < (1U << f.arity()); ++mask) {
        IndexSet s;
        for (std::size_t k = 0; k < f.arity(); ++k) {
          if ((mask >> k) & 1U) s.push_back(k + 1);
        }
        for (std::size_t i = 0; i < f.size(); ++i) out.push_back(section(f, s, f.point_at(i)));
      }
      return out;
    };
    std::vector<FunctionTable> tables;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& f : all_boolean(n)) tables.push_back(std::move(f));
    }
    std::size_t failures = 0;
    std::size_t pairs = 0;
    std::mt19937 rng(3);
    for (std::size_t i = 0; i < tables.size(); i += 1 + rng() % 3) {
      for (std::size_t j = 0; j < tables.size(); ++j) {
        if (!is_equivalent(tables[i], tables[j])) continue;
        ++pairs;
        const auto gs = sections_of(tables[j]);
        for (const auto& fs : sections_of(tables[i])) {
          // A section over inessential arguments only is constant; g may have no
          // constant section at all, so those are matched against values of g.
          if (fs.is_constant()) {
            const auto& gv = tables[j].values();
            if (std::find(gv.begin(), gv.end(), fs.at(0)) == gv.end()) ++failures;
            continue;
          }
          const bool found = std::any_of(gs.begin(), gs.end(), [&](const auto& gt) { return is_equivalent(fs, gt).has_value(); });
          if (!found) ++failures;
        }
      }
    }
    CHECK(pairs > 100);
    CHECK(failures == 0);
  }

  TEST_CASE("constant sections need not transfer between equivalent functions") {
    const FunctionTable f = FunctionTable::boolean(1, std::vector<int>{0, 1});
    const FunctionTable g = FunctionTable::boolean(2, std::vector<int>{0, 0, 1, 1});
    REQUIRE(is_equivalent(f, g));
    const FunctionTable gs = section(g, IndexSet{2}, Point{0, 0});
    CHECK(gs.is_constant());
    CHECK_FALSE(is_equivalent(gs, section(f, IndexSet{1}, Point{0})));
  }

  TEST_CASE("equivalence over a three-element domain") {
    const Sort s = Sort::chain(3);
    const auto tables = all_tables(s, 1);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Value> values;
      for (int i = 0; i < 9; ++i) values.push_back(s.element(rng() % 3));
      const FunctionTable f(2, s, s, values);
      const std::vector<std::size_t> swap{2, 1};
      const FunctionTable g = oracle::remap(f, swap, 2);
      CHECK(is_equivalent(f, g).has_value());
      CHECK(oracle::equivalent(f, g));
      for (const auto& u : tables) CHECK(is_equivalent(f, u).has_value() == oracle::equivalent(f, u));
    }
  }

  TEST_CASE("table validation") {
    CHECK_THROWS_AS(FunctionTable(2, Sort::boolean(), Sort::boolean(), {0, 1, 1}), DomainError);
    CHECK_THROWS_AS(FunctionTable(1, Sort::boolean(), Sort::boolean(), {0, 2}), DomainError);
    CHECK_THROWS_AS(FunctionTable(0, Sort::boolean(), Sort::boolean(), {0}), DomainError);
    CHECK_THROWS_AS(Sort::rational().size(), SortError);
  }
}
