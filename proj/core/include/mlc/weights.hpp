#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "mlc/diagrams.hpp"
#include "mlc/qpoly.hpp"

namespace mlc {

enum class Regime { upper, lower, spread };

std::string regime_name(Regime r);
Regime parse_regime(const std::string& s);

// validity of a lower-bound witness over field sizes; q_min == 2 means
// every prime power
struct QValidity {
  int q_min = 2;

  [[nodiscard]] bool all() const { return q_min <= 2; }
  [[nodiscard]] std::string to_string() const;
  static QValidity intersect(QValidity a, QValidity b) {
    return {std::max(a.q_min, b.q_min)};
  }
};

struct LowerBoundWitness {
  int dimension = 0;
  std::string theorem = "none";
  std::map<std::string, std::string> params;
  QValidity q_validity;
  bool optimal = false;
};

// monomial q^e with e the Theorem-2.2 style exponent of v's diagram
QPolynomial upper_weight(const PivotVector& v, int delta);

// m_i table: number of weight-k pivot vectors whose weight is q^i
std::map<int, long long> weight_histogram(int n, int d, int k, Regime regime);

// best dimension provable by the implemented construction checkers
LowerBoundWitness lower_dimension(const FerrersDiagram& f, int delta);

// monomial q^(n-j) where j is the position of the last one; the flag tells
// whether the bound is known to be attained (j <= n-k)
std::pair<QPolynomial, bool> spread_weight(const PivotVector& v, int n, int k);

}  // namespace mlc
