#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlc/qpoly.hpp"

namespace mlc {

// one Pareto-front side of a table entry; q names the field sizes the
// polynomial is optimal for ("all", "q=2", "q>=3", ...)
struct CorpusFront {
  std::string q = "all";
  std::string poly;
  std::vector<std::uint64_t> clique;
};

struct CorpusEntry {
  int n = 0, d = 0, k = 0;
  std::string kind;  // "exact" or "conjectured"
  std::string source;
  int ub = 0;
  int max_dive = 0;
  std::vector<CorpusFront> fronts;
};

struct DiagramEntry {
  std::uint64_t pivot = 0;
  int n = 0;
  int delta = 0;
  std::vector<int> rows;  // of the full pivot diagram
  int best_known = 0;
  int optimal = 0;
  std::string tag;
  std::string source;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<DiagramEntry> diagrams;
};

// parses the JSON document embedded at build time; cached after first use
const Corpus& load_corpus();

// entry lookup for CLI defaults
const CorpusEntry* find_entry(int n, int d, int k);

struct VerifyFilter {
  std::optional<int> n, d, k;
};

struct VerifyItem {
  std::string name;
  std::string status;  // "pass", "fail", "skip"
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  int passed = 0, failed = 0, skipped = 0;
  [[nodiscard]] bool ok() const { return failed == 0; }
};

// tier 0: clique validity and weight audits only
// tier 1: additionally re-solve the cheap instances (d >= 10 or n <= 14)
// tier 2: re-solve everything
VerifyReport verify_corpus(int tier, const VerifyFilter& filter = {});

// nested packing bound on the size of a binary constant-weight code; a valid
// clique-size cap whenever no sharper value is known
long long johnson_bound(int n, int d, int k);

}  // namespace mlc
