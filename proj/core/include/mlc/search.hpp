#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlc/diagrams.hpp"
#include "mlc/qpoly.hpp"
#include "mlc/weights.hpp"

namespace mlc {

// which field sizes the Pareto comparisons range over
struct QMode {
  enum class Kind { all, fixed, range };
  Kind kind = Kind::all;
  long q = 0;                      // fixed
  long q_min = 2;                  // range
  std::optional<long> q_max;       // range; absent means unbounded

  static QMode all() { return {}; }
  static QMode fixed(long q) { return {Kind::fixed, q, 2, std::nullopt}; }
  static QMode range(long lo, std::optional<long> hi) {
    return {Kind::range, 0, lo, hi};
  }
  [[nodiscard]] std::string to_string() const;
};

struct Instance {
  int n = 0, d = 0, k = 0, delta = 0;
  Regime regime = Regime::upper;
  int ub = 0;        // upper bound on the maximum clique size
  int max_dive = 0;  // depth cap for the exact front
  QMode qmode;
  // vertices ordered by nonincreasing wbar (monomials: exponent descending,
  // ties by descending encoding)
  std::vector<std::uint64_t> vertices;
  std::vector<QPolynomial> w;
  std::vector<QPolynomial> wbar;
  QValidity weight_validity;  // lower regime: range where the weights are proven

  static Instance build(int n, int d, int k, Regime regime, int ub,
                        int max_dive, QMode qmode = QMode::all());
};

struct CliqueRecord {
  std::vector<std::uint64_t> members;  // sorted ascending
  QPolynomial weight;                  // w(members)
  QPolynomial ub_weight;               // UB-completed weight, for the hat front
};

struct SearchStats {
  std::uint64_t dive_calls = 0;
  std::uint64_t newrecord_calls = 0;
  double seconds = 0.0;
  bool complete = true;
};

struct ParetoFront {
  std::vector<CliqueRecord> cliques;      // the list U
  std::vector<CliqueRecord> hat_cliques;  // the list U-hat
  SearchStats stats;
};

struct SolveOptions {
  double budget_seconds = 0.0;  // 0 means unlimited
  const std::atomic<bool>* cancel = nullptr;
  const ParetoFront* seed = nullptr;
};

// upper bound for the weight of every clique extension of `clique`, greedily
// completed up to `cap` members in vertex order
QPolynomial ub_extend(const Instance& inst,
                      const std::vector<std::uint64_t>& clique, int cap);

ParetoFront solve(const Instance& inst, const SolveOptions& opts = {});

ParetoFront solve_fixed_q(Instance inst, long q,
                          const SolveOptions& opts = {});

// warm-started runs with increasing ub; the last schedule entry must be the
// true bound, so the final stage equals a plain solve
ParetoFront staged_solve(Instance inst, const ParetoFront* seed,
                         const std::vector<int>& ub_schedule);

// exhaustive oracle; refuses instances beyond C(n,k) <= 300 or max_dive > 16
ParetoFront brute_force_front(const Instance& inst);

}  // namespace mlc
