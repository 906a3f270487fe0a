#pragma once

#include <vector>

#include "mlc/diagrams.hpp"
#include "mlc/qpoly.hpp"

namespace mlc {

struct SpreadParams {
  int n = 0;
  int k = 0;
};

// closed form for the best multilevel code with d = 2k:
// sum q^(ik) for i < n/k when k divides n, else 1 + sum q^(n-ik)
QPolynomial spread_polynomial(const SpreadParams& p);

// the canonical attaining family of block pivot vectors 0^(ik) 1^k 0^(rest)
std::vector<PivotVector> spread_clique(const SpreadParams& p);

}  // namespace mlc
