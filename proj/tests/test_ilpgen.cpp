#include <doctest.h>

#include <mlc/ilpgen.hpp>

using namespace mlc;

TEST_SUITE("ilpgen") {
  TEST_CASE("variant names round trip") {
    for (IlpVariant v : {IlpVariant::edge, IlpVariant::cover,
                         IlpVariant::weighted_fixed_q, IlpVariant::counting}) {
      CHECK(parse_variant(variant_name(v)) == v);
    }
    CHECK_THROWS_AS(parse_variant("nope"), std::invalid_argument);
  }

  TEST_CASE("edge model for (6,4,3) solves to the known optimum") {
    IlpOptions opts;
    opts.variant = IlpVariant::edge;
    IlpModel model = emit(6, 4, 3, opts);
    CHECK(model.maximize);
    CHECK(model.binaries.size() == 20);  // C(6,3)
    auto sol = solve_ilp(model);
    CHECK(sol.objective == 4);  // max clique size, matches the solver's front
  }

  TEST_CASE("literal edge formulation constrains adjacent pairs") {
    IlpOptions plain;
    plain.variant = IlpVariant::edge;
    IlpOptions literal = plain;
    literal.literal_edges = true;
    IlpModel a = emit(6, 4, 3, plain);
    IlpModel b = emit(6, 4, 3, literal);
    // same variables, complementary pair coverage: together every unordered
    // pair appears exactly once
    CHECK(a.binaries == b.binaries);
    size_t pairs = 20 * 19 / 2;
    CHECK(a.constraints.size() + b.constraints.size() == pairs);
    auto sb = solve_ilp(b);
    CHECK(sb.objective >= 1);
  }

  TEST_CASE("cover variant packs at most one vertex per subset") {
    IlpOptions opts;
    opts.variant = IlpVariant::cover;
    IlpModel model = emit(6, 4, 3, opts);
    CHECK(model.maximize);
    for (const auto& con : model.constraints) {
      CHECK(con.sense == '<');
      CHECK(con.rhs == 1);
      CHECK(con.terms.size() >= 2);
    }
  }

  TEST_CASE("weighted fixed-q objective uses evaluated weights") {
    IlpOptions opts;
    opts.variant = IlpVariant::weighted_fixed_q;
    opts.q = 2;
    IlpModel model = emit(6, 4, 3, opts);
    auto sol = solve_ilp(model);
    // best front polynomial q^6+q^2+q+1 at q=2
    CHECK(sol.objective == 71);
  }

  TEST_CASE("weighted fixed-q flags coefficient overflow") {
    IlpOptions opts;
    opts.variant = IlpVariant::weighted_fixed_q;
    opts.q = 9;
    IlpModel model = emit(14, 8, 5, opts);
    CHECK(model.overflow_warning);  // top weight 9^18 exceeds 2^53
  }

  TEST_CASE("counting variant with cardinality cap") {
    IlpOptions opts;
    opts.variant = IlpVariant::counting;
    opts.a1_bound = 4;
    IlpModel model = emit(6, 4, 3, opts);
    auto sol = solve_ilp(model);
    // all-ones counting objective with |C| <= 4 equals the cap
    CHECK(sol.objective == 4);
    bool has_cap = false;
    for (const auto& c : model.constraints) {
      if (c.name == "cardinality") has_cap = true;
    }
    CHECK(has_cap);
  }

  TEST_CASE("fixed a_i pins appear in the bounds section") {
    IlpOptions opts;
    opts.variant = IlpVariant::counting;
    opts.a1_bound = 4;
    opts.fixed_a[6] = 1;
    IlpModel model = emit(6, 4, 3, opts);
    bool pinned = false;
    for (const auto& b : model.general_bounds) {
      if (b.var == "a6" && b.lo == 1 && b.hi == 1) pinned = true;
    }
    CHECK(pinned);
  }

  TEST_CASE("LP text round trip") {
    for (IlpVariant v : {IlpVariant::edge, IlpVariant::counting}) {
      IlpOptions opts;
      opts.variant = v;
      if (v == IlpVariant::counting) opts.a1_bound = 4;
      IlpModel model = emit(6, 4, 3, opts);
      IlpModel back = parse_lp_text(model.to_lp_text());
      CHECK(back.maximize == model.maximize);
      CHECK(back.objective.size() == model.objective.size());
      CHECK(back.constraints.size() == model.constraints.size());
      CHECK(back.binaries == model.binaries);
      auto s1 = solve_ilp(model);
      auto s2 = solve_ilp(back);
      CHECK(s1.objective == s2.objective);
    }
  }
}
