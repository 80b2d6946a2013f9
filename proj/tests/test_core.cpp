#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "eefx/caps.hpp"
#include "eefx/errors.hpp"
#include "eefx/generators.hpp"
#include "eefx/partitions.hpp"
#include "eefx/rational.hpp"
#include "eefx/valuation.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace eefx;
using testing::goods;

TEST_SUITE("core") {
  TEST_CASE("rationals parse and format exactly") {
    CHECK(parse_rational("12") == 12);
    CHECK(parse_rational("12.34") == Rational(617, 50));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("3/9") == Rational(1, 3));
    CHECK_THROWS_AS(parse_rational("-1"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);

    CHECK(format_rational(Rational(1, 10)) == "0.1");
    CHECK(format_rational(Rational(7)) == "7");
    CHECK(format_rational(Rational(5, 4)) == "1.25");
    CHECK(format_rational(Rational(1, 3)) == "1/3");
    for (const char* s : {"0", "1", "2.5", "0.125", "1/3", "22/7", "100.01"})
      CHECK(parse_rational(format_rational(parse_rational(s))) == parse_rational(s));
  }

  TEST_CASE("bundle set algebra") {
    const Bundle a{0, 2, 5};
    const Bundle b{2, 3};
    CHECK(a.size() == 3);
    CHECK((a | b) == Bundle{0, 2, 3, 5});
    CHECK((a & b) == Bundle{2});
    CHECK((a - b) == Bundle{0, 5});
    CHECK(Bundle{2}.subset_of(a));
    CHECK_FALSE(b.subset_of(a));
    CHECK(Bundle{1, 4}.disjoint(a));
    CHECK(a.span() == 6);
    CHECK(Bundle{}.span() == 0);
    CHECK(a.items() == std::vector<Item>{0, 2, 5});
    CHECK(Bundle::full(64).size() == 64);
    CHECK(Bundle::full(0).empty());

    const SubsetIndex idx(Bundle{1, 4, 6});
    CHECK(idx.size() == 3);
    CHECK(idx.expand(0b101) == Bundle{1, 6});
  }

  TEST_CASE("worked valuation examples") {
    const Instance t1 = table1_instance();
    CHECK(t1.valuations[0].value(goods({1, 2})) == 200);

    const auto cov = ValuationModel::coverage(2, {Rational(1), Rational(1), Rational(1)}, {{0, 1}, {1, 2}});
    CHECK(cov.value(Bundle{0, 1}) == 3);
    CHECK(cov.value(Bundle{0}) == 2);
    CHECK(cov.value(Bundle{}) == 0);
  }

  TEST_CASE("value rejects items beyond m") {
    const auto v = ValuationModel::additive({Rational(1), Rational(2)});
    CHECK_THROWS_AS(v.value(Bundle{2}), InputError);
  }

  TEST_CASE("table construction validates") {
    CHECK_NOTHROW(ValuationModel::table(1, {Rational(0), Rational(1)}));
    CHECK_THROWS_AS(ValuationModel::table(1, {Rational(1), Rational(2)}), InputError);  // v(empty) != 0
    CHECK_THROWS_AS(ValuationModel::table(1, {Rational(0)}), InputError);               // wrong size
    CHECK_THROWS_AS(ValuationModel::table(2, {Rational(0), Rational(2), Rational(1), Rational(1)}), InputError);
  }

  TEST_CASE("non-monotone table is detected") {
    // v({g1}) = 2 > v({g1, g2}) = 1.
    const auto v = ValuationModel::table(2, {Rational(0), Rational(2), Rational(1), Rational(1)}, false);
    CHECK_FALSE(check_monotone(v));
    CHECK_FALSE(serial::check_monotone(v));
    CHECK_FALSE(oracle::is_monotone(oracle::value_table(v)));
  }

  TEST_CASE("property checks agree with pairwise oracles") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const int m = 1 + trial % 6;
      auto v = random_monotone(rng, m);
      if (trial % 5 == 0) {
        // Arbitrary nonnegative tables exercise the negative answers.
        std::vector<Rational> values(std::size_t{1} << m);
        for (std::size_t s = 1; s < values.size(); ++s) values[s] = std::uniform_int_distribution<int>(0, 9)(rng);
        v = ValuationModel::table(m, values, false);
      }
      const auto t = oracle::value_table(v);
      CAPTURE(trial);
      CHECK(check_monotone(v) == oracle::is_monotone(t));
      CHECK(check_submodular(v) == oracle::is_submodular(t));
      CHECK(check_additive(v) == oracle::is_additive(t));
      CHECK(serial::check_monotone(v) == oracle::is_monotone(t));
      CHECK(serial::check_submodular(v) == oracle::is_submodular(t));
      CHECK(serial::check_additive(v) == oracle::is_additive(t));
    }
  }

  TEST_CASE("generated kinds have their structural properties") {
    Rng rng(5);
    for (int m = 0; m <= 7; ++m) {
      const auto a = random_additive(rng, m);
      const auto c = random_coverage(rng, m);
      const auto t = random_monotone_table(rng, m);
      CHECK(oracle::is_additive(oracle::value_table(a)));
      CHECK(oracle::is_submodular(oracle::value_table(c)));
      CHECK(oracle::is_monotone(oracle::value_table(c)));
      CHECK(oracle::is_monotone(oracle::value_table(t)));
    }
  }

  TEST_CASE("property checks refuse large ground sets") {
    const auto v = ValuationModel::additive(std::vector<Rational>(21, Rational(1)));
    CHECK_THROWS_AS(check_monotone(v), SizeError);
    CHECK_THROWS_AS(serial::check_submodular(v), SizeError);
  }

  TEST_CASE("counted oracle counts every query") {
    const auto v = ValuationModel::additive({Rational(1), Rational(2), Rational(3)});
    CountedOracle c(v);
    CHECK(c.value(Bundle{0, 2}) == 4);
    CHECK(c.value(Bundle{}) == 0);
    CHECK(c.query_count() == 2);
    c.reset();
    CHECK(c.query_count() == 0);
  }

  TEST_CASE("caps parse and layer") {
    const Caps c = parse_caps("solve_items=12,agents=6");
    CHECK(c.solve_items == 12);
    CHECK(c.agents == 6);
    CHECK(c.certificate_items == Caps{}.certificate_items);
    CHECK(parse_caps(format_caps(c)).solve_items == 12);
    CHECK(parse_caps("").agents == Caps{}.agents);
    CHECK_THROWS_AS(parse_caps("bogus=1"), InputError);
    CHECK_THROWS_AS(parse_caps("agents=x"), InputError);
    CHECK_THROWS_AS(parse_caps("agents"), InputError);

    ::setenv("EEFX_CAPS", "agents=7", 1);
    CHECK(caps_from_env().agents == 7);
    ::unsetenv("EEFX_CAPS");
    CHECK(caps_from_env().agents == Caps{}.agents);
  }

  TEST_CASE("partition enumeration is canonical and complete") {
    // Bell / Stirling counts, distinctness, and lexicographic RGS order.
    const int bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (int t = 0; t <= 7; ++t) {
      for (int k = 1; k <= t + 1; ++k) {
        std::set<std::vector<std::uint64_t>> seen;
        std::vector<std::vector<int>> order;
        std::uint64_t visits = 0;
        for_each_partition(t, k, [&](std::span<const std::uint64_t> blocks) {
          ++visits;
          std::uint64_t cover = 0;
          std::vector<int> labels(t, -1);
          for (std::size_t j = 0; j < blocks.size(); ++j) {
            CHECK((cover & blocks[j]) == 0);
            cover |= blocks[j];
            for (int p = 0; p < t; ++p)
              if (blocks[j] >> p & 1) labels[p] = static_cast<int>(j);
          }
          CHECK(cover == (std::uint64_t{1} << t) - 1);
          CHECK(labels == oracle::normalize(labels));
          seen.insert({blocks.begin(), blocks.end()});
          order.push_back(labels);
          return true;
        });
        CHECK(visits == seen.size());
        CHECK(visits == count_partitions(t, k));
        CHECK(std::is_sorted(order.begin(), order.end()));
        if (k >= t) CHECK(visits == static_cast<std::uint64_t>(bell[t]));
      }
    }
  }

  TEST_CASE("partition enumeration stops early") {
    int visits = 0;
    for_each_partition(5, 3, [&](std::span<const std::uint64_t>) { return ++visits < 4; });
    CHECK(visits == 4);
  }
}
