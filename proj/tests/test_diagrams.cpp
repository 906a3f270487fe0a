#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>
#include <vector>

#include "mlc/diagrams.hpp"

using namespace mlc;

TEST_SUITE_BEGIN("diagrams");

TEST_CASE("pivot encoding round trip") {
  const PivotVector v = decode(1256, 12);
  CHECK(v.to_string() == "010011101000");
  CHECK(encode(v) == 1256);
  CHECK(v.weight() == 5);
  CHECK(v.bit(2) == 1);
  CHECK(v.bit(1) == 0);
  CHECK(encode(from_bits("010011101000")) == 1256);
  CHECK_THROWS_AS((void)decode(1 << 12, 12), std::domain_error);
  CHECK_THROWS_AS((void)decode(1, 0), std::domain_error);
}

// [PAPER: Sec 2] the worked example vector and its diagram
TEST_CASE("worked example diagram") {
  const PivotVector v = decode(0b00010100011100, 14);
  CHECK(v.to_string() == "00010100011100");
  const FerrersDiagram f = to_diagram(v);
  CHECK(f.rows() == std::vector<int>{6, 5, 2, 2, 2});
  CHECK(f.columns() == std::vector<int>{1, 2, 2, 2, 5, 5});
  CHECK(f.total_dots() == 17);
  CHECK(dot_count(v) == 17);
  CHECK(nu(f, 4, 0) == 5);
  CHECK(nu(f, 4, 1) == 3);
  CHECK(nu(f, 4, 2) == 3);
  CHECK(nu(f, 4, 3) == 4);
  CHECK(ef_upper_exponent(f, 4) == 3);
}

// [PAPER: Sec 2] the four diagram exponents of the (14,8,5) instance
TEST_CASE("exponents of the fourteen eight five clique") {
  const std::vector<std::uint64_t> clique{15872, 992, 1308, 2087};
  const std::vector<int> expected{18, 10, 3, 0};
  for (std::size_t i = 0; i < clique.size(); ++i)
    CHECK(ef_upper_exponent(to_diagram(decode(clique[i], 14)), 4) ==
          expected[i]);
}

// [PAPER: App A.2] a diagram read straight from a pivot listing
TEST_CASE("appendix pivot decodes") {
  CHECK(to_diagram(decode(5214, 15)).rows() ==
        std::vector<int>{6, 5, 2, 1, 1, 1, 1});
}

TEST_CASE("empty diagram") {
  // all ones flushed right leave nothing to the right of any pivot
  const FerrersDiagram f = to_diagram(decode(15, 14));
  CHECK(f.rows().empty());
  CHECK(f.total_dots() == 0);
  CHECK(ef_upper_exponent(f, 4) == 0);
  CHECK_THROWS_AS((void)to_diagram(decode(0, 6)), std::domain_error);
}

TEST_CASE("diagram constructors validate shape") {
  CHECK(FerrersDiagram::from_rows({4, 2, 1}).columns() ==
        std::vector<int>{1, 1, 2, 3});
  CHECK_THROWS_AS((void)FerrersDiagram::from_rows({1, 3}),
                  std::domain_error);
  CHECK_THROWS_AS((void)FerrersDiagram::from_columns({3, 1}),
                  std::domain_error);
  CHECK_THROWS_AS((void)FerrersDiagram::from_rows({2, 0}),
                  std::domain_error);
}

TEST_CASE("transpose is an involution and swaps axes") {
  const FerrersDiagram f = FerrersDiagram::from_rows({6, 5, 2, 2, 2});
  const FerrersDiagram t = f.transposed();
  CHECK(t.rows() == std::vector<int>{5, 5, 2, 2, 2, 1});
  CHECK(t.transposed() == f);
  CHECK(t.total_dots() == f.total_dots());
}

TEST_CASE("hamming distance and adjacency") {
  const PivotVector a = decode(15872, 14);
  const PivotVector b = decode(992, 14);
  CHECK(hamming(a, b) == 8);
  CHECK(adjacent(a, b, 8));
  CHECK_FALSE(adjacent(a, a, 8));
  CHECK_THROWS_AS((void)hamming(a, decode(3, 6)), std::domain_error);
}

TEST_CASE("subdiagram embedding") {
  const FerrersDiagram big = FerrersDiagram::from_rows({4, 3, 2});
  CHECK(subdiagram_embeds(FerrersDiagram::from_rows({3, 2}), big));
  CHECK(subdiagram_embeds(big, big));
  CHECK_FALSE(subdiagram_embeds(FerrersDiagram::from_rows({5}), big));
  CHECK_FALSE(subdiagram_embeds(FerrersDiagram::from_rows({2, 2, 2, 2}), big));
}

TEST_CASE("random vectors keep rows cols and dots consistent") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 17);
    std::uint64_t v = rng() & ((std::uint64_t{1} << n) - 1);
    if (v == 0) v = 1;
    const PivotVector p = decode(v, n);
    const FerrersDiagram f = to_diagram(p);
    const auto sum = [](const std::vector<int>& xs) {
      return std::accumulate(xs.begin(), xs.end(), 0);
    };
    CHECK(sum(f.rows()) == f.total_dots());
    CHECK(sum(f.columns()) == f.total_dots());
    CHECK(f.total_dots() == dot_count(p));
    CHECK(f.transposed().transposed() == f);
    CHECK(encode(decode(v, n)) == v);
    // the smallest exponent index never exceeds the dot total
    for (int delta = 1; delta <= 4; ++delta) {
      const int e = ef_upper_exponent(f, delta);
      CHECK(e >= 0);
      CHECK(e <= f.total_dots());
    }
  }
}

TEST_SUITE_END();
