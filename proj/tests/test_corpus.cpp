#include <doctest.h>

#include <mlc/corpus.hpp>

using namespace mlc;

TEST_SUITE("corpus") {
  TEST_CASE("embedded corpus loads with the expected shape") {
    const Corpus& c = load_corpus();
    CHECK(c.entries.size() >= 78);
    CHECK(c.diagrams.size() >= 25);
  }

  TEST_CASE("find_entry") {
    const auto* e = find_entry(14, 8, 5);
    REQUIRE(e != nullptr);
    CHECK(e->ub == 4);
    REQUIRE(e->fronts.size() == 1);
    CHECK(e->fronts[0].poly == "q^18+q^10+q^3+1");
    CHECK(find_entry(63, 2, 1) == nullptr);
  }

  TEST_CASE("q-split entries store one front per regime of q") {
    const auto* e = find_entry(19, 10, 9);
    REQUIRE(e != nullptr);
    REQUIRE(e->fronts.size() == 2);
    CHECK(e->fronts[0].q != e->fronts[1].q);
  }

  TEST_CASE("tier-0 audit passes on the whole corpus") {
    VerifyReport rep = verify_corpus(0);
    CHECK(rep.ok());
    CHECK(rep.failed == 0);
    CHECK(rep.passed >= 100);
  }

  TEST_CASE("filters narrow the audit") {
    VerifyFilter f;
    f.n = 14;
    f.d = 8;
    f.k = 5;
    VerifyReport rep = verify_corpus(0, f);
    CHECK(rep.ok());
    CHECK(rep.passed >= 1);
    CHECK(rep.passed + rep.skipped + rep.failed >= rep.passed);
  }

  TEST_CASE("tier-1 re-solves a cheap instance") {
    VerifyFilter f;
    f.n = 14;
    f.d = 8;
    f.k = 5;
    VerifyReport rep = verify_corpus(1, f);
    CHECK(rep.ok());
  }

  TEST_CASE("johnson_bound reference values") {
    // d = 2k reduces to the spread count
    CHECK(johnson_bound(8, 8, 4) == 2);
    CHECK(johnson_bound(14, 6, 4) >= 14);
    CHECK(johnson_bound(10, 4, 5) >= 36);
    // monotone in n
    CHECK(johnson_bound(18, 10, 8) >= johnson_bound(17, 10, 8));
  }
}
