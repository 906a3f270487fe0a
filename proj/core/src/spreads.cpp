#include "mlc/spreads.hpp"

#include <stdexcept>

namespace mlc {

QPolynomial spread_polynomial(const SpreadParams& p) {
  if (p.k < 1 || p.n < p.k) throw std::domain_error("need n >= k >= 1");
  std::vector<std::pair<int, mpz_class>> terms;
  if (p.n % p.k == 0) {
    for (int i = 0; i < p.n / p.k; ++i) terms.emplace_back(i * p.k, 1);
  } else {
    terms.emplace_back(0, 1);
    for (int i = 1; i <= p.n / p.k - 1; ++i) {
      terms.emplace_back(p.n - i * p.k, 1);
    }
  }
  return QPolynomial(std::move(terms));
}

std::vector<PivotVector> spread_clique(const SpreadParams& p) {
  if (p.k < 1 || p.n < p.k) throw std::domain_error("need n >= k >= 1");
  std::vector<PivotVector> out;
  std::uint64_t block = (std::uint64_t{1} << p.k) - 1;
  for (int i = 0; i + p.k <= p.n; i += p.k) {
    int shift = p.n - p.k - i;
    out.push_back(PivotVector{p.n, block << shift});
  }
  return out;
}

}  // namespace mlc
