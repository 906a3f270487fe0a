#include <doctest.h>

#include <mlc/qpoly.hpp>
#include <mlc/search.hpp>
#include <mlc/spreads.hpp>

#include <set>

using namespace mlc;

namespace {

// Two fronts are equivalent when every element of one is matched (not strictly
// beaten) by some element of the other, pointwise over the given q values.
bool fronts_equivalent(const std::vector<CliqueRecord>& a,
                       const std::vector<CliqueRecord>& b, long q_lo,
                       long q_hi) {
  auto covered = [&](const CliqueRecord& r,
                     const std::vector<CliqueRecord>& other) {
    for (long q = q_lo; q <= q_hi; ++q) {
      bool ok = false;
      for (const auto& u : other) {
        if (cmp_at(u.weight, r.weight, q) != Ordering::less) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };
  for (const auto& r : a) {
    if (!covered(r, b)) return false;
  }
  for (const auto& r : b) {
    if (!covered(r, a)) return false;
  }
  return true;
}

bool is_clique(const Instance& inst, const std::vector<std::uint64_t>& mem) {
  for (size_t i = 0; i < mem.size(); ++i) {
    for (size_t j = i + 1; j < mem.size(); ++j) {
      if (std::popcount(mem[i] ^ mem[j]) < inst.d) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("instance build orders vertices by descending weight exponent") {
    Instance inst = Instance::build(8, 4, 4, Regime::upper, 14, 14);
    CHECK(inst.vertices.size() == 70);
    int prev = 1 << 30;
    for (const auto& w : inst.wbar) {
      auto e = w.monomial_exponent();
      REQUIRE(e.has_value());
      CHECK(*e <= prev);
      prev = *e;
    }
  }

  TEST_CASE("known symbolic optima") {
    SUBCASE("trivial spread (4,4,2)") {
      Instance inst = Instance::build(4, 4, 2, Regime::upper, 2, 2);
      auto front = solve(inst);
      REQUIRE(front.stats.complete);
      REQUIRE(front.cliques.size() == 1);
      CHECK(render(front.cliques[0].weight) == "q^2+1");
    }
    SUBCASE("(6,4,3)") {
      Instance inst = Instance::build(6, 4, 3, Regime::upper, 4, 4);
      auto front = solve(inst);
      REQUIRE(front.stats.complete);
      REQUIRE(front.cliques.size() == 1);
      CHECK(render(front.cliques[0].weight) == "q^6+q^2+q+1");
    }
    SUBCASE("(15,10,6) barred regime") {
      Instance inst = Instance::build(15, 10, 6, Regime::lower, 3, 3);
      auto front = solve(inst);
      REQUIRE(front.stats.complete);
      REQUIRE(front.cliques.size() == 1);
      CHECK(render(front.cliques[0].weight) == "q^18+q^5+1");
      CHECK(is_clique(inst, front.cliques[0].members));
    }
  }

  TEST_CASE("solve matches the exhaustive oracle on small instances") {
    struct Case {
      int n, d, k, ub;
    };
    // modest sizes; the acceptance binary sweeps the full n <= 8 grid
    for (Case c : {Case{6, 4, 2, 3}, Case{7, 4, 3, 7}, Case{7, 6, 3, 2},
                   Case{8, 6, 3, 2}, Case{8, 6, 4, 2}, Case{8, 8, 4, 2}}) {
      CAPTURE(c.n);
      CAPTURE(c.d);
      CAPTURE(c.k);
      Instance inst =
          Instance::build(c.n, c.d, c.k, Regime::upper, c.ub, c.ub);
      auto exact = solve(inst);
      auto oracle = brute_force_front(inst);
      REQUIRE(exact.stats.complete);
      CHECK(fronts_equivalent(exact.cliques, oracle.cliques, 2, 9));
    }
  }

  TEST_CASE("oracle guard rails") {
    Instance big = Instance::build(12, 4, 6, Regime::upper, 20, 20);
    CHECK_THROWS_AS(brute_force_front(big), std::domain_error);
  }

  TEST_CASE("every front member is a clique of the right size") {
    Instance inst = Instance::build(8, 4, 4, Regime::upper, 14, 14);
    auto front = solve(inst);
    REQUIRE(front.stats.complete);
    for (const auto& rec : front.cliques) {
      CHECK(is_clique(inst, rec.members));
      CHECK(rec.members.size() <= 14);
      std::set<std::uint64_t> uniq(rec.members.begin(), rec.members.end());
      CHECK(uniq.size() == rec.members.size());
    }
  }

  TEST_CASE("fixed-q mode returns a single winner") {
    Instance inst =
        Instance::build(10, 4, 5, Regime::upper, 36, 36, QMode::fixed(2));
    auto front = solve(inst);
    REQUIRE(front.stats.complete);
    REQUIRE(front.cliques.size() == 1);
    CHECK(front.cliques[0].weight.eval(2) == 1167355);
  }

  TEST_CASE("budget truncation reports an incomplete front") {
    Instance inst = Instance::build(14, 6, 4, Regime::upper, 14, 14);
    SolveOptions opts;
    opts.budget_seconds = 0.01;
    auto front = solve(inst, opts);
    CHECK_FALSE(front.stats.complete);
    // truncated output is still a set of valid cliques
    for (const auto& rec : front.cliques) {
      CHECK(is_clique(inst, rec.members));
    }
  }

  TEST_CASE("seeding preserves the exact front") {
    Instance inst = Instance::build(6, 4, 3, Regime::upper, 4, 4);
    auto plain = solve(inst);
    SolveOptions opts;
    opts.seed = &plain;
    auto seeded = solve(inst, opts);
    REQUIRE(seeded.stats.complete);
    CHECK(fronts_equivalent(plain.cliques, seeded.cliques, 2, 9));
  }

  TEST_CASE("staged_solve equals plain solve") {
    Instance inst = Instance::build(14, 8, 5, Regime::upper, 4, 4);
    auto plain = solve(inst);
    auto staged = staged_solve(inst, nullptr, {2, 3, 4});
    REQUIRE(staged.stats.complete);
    REQUIRE(plain.cliques.size() == staged.cliques.size());
    CHECK(fronts_equivalent(plain.cliques, staged.cliques, 2, 9));
  }

  TEST_CASE("staged_solve rejects a schedule that stops short of ub") {
    Instance inst = Instance::build(14, 8, 5, Regime::upper, 4, 4);
    CHECK_THROWS_AS(staged_solve(inst, nullptr, {2, 3}), std::domain_error);
  }

  TEST_CASE("ub_extend dominates every completion") {
    Instance inst = Instance::build(8, 4, 4, Regime::upper, 14, 14);
    auto front = solve(inst);
    REQUIRE(!front.cliques.empty());
    const auto& best = front.cliques.front();
    std::vector<std::uint64_t> prefix(best.members.begin(),
                                      best.members.begin() + 2);
    QPolynomial cap = ub_extend(inst, prefix, inst.ub);
    for (long q = 2; q <= 9; ++q) {
      CHECK(cmp_at(cap, best.weight, q) != Ordering::less);
    }
  }

  TEST_CASE("solve_fixed_q agrees with symbolic evaluation") {
    Instance inst = Instance::build(8, 4, 4, Regime::upper, 14, 14);
    auto symbolic = solve(inst);
    for (long q : {2L, 3L, 5L}) {
      Instance fq = Instance::build(8, 4, 4, Regime::upper, 14, 14);
      auto front = solve_fixed_q(fq, q);
      REQUIRE(front.stats.complete);
      REQUIRE(front.cliques.size() == 1);
      mpz_class best = 0;
      for (const auto& rec : symbolic.cliques) {
        mpz_class v = rec.weight.eval(q);
        if (v > best) best = v;
      }
      CHECK(front.cliques[0].weight.eval(q) == best);
    }
  }

  TEST_CASE("range mode front is covered by the symbolic front") {
    Instance all = Instance::build(10, 4, 5, Regime::upper, 36, 36);
    auto sym = solve(all);
    Instance tail = Instance::build(10, 4, 5, Regime::upper, 36, 36,
                                    QMode::range(3, std::nullopt));
    auto rng = solve(tail);
    REQUIRE(rng.stats.complete);
    for (const auto& rec : rng.cliques) {
      for (long q = 3; q <= 16; ++q) {
        bool covered = false;
        for (const auto& s : sym.cliques) {
          if (cmp_at(s.weight, rec.weight, q) != Ordering::less) {
            covered = true;
            break;
          }
        }
        CHECK(covered);
      }
    }
  }
}
