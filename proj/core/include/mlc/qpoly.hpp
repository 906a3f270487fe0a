#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mlc {

enum class Ordering { less, equal, greater };

// Sparse polynomial in q with exact arbitrary-precision integer coefficients.
// Terms are kept sorted by ascending exponent and never store a zero
// coefficient. Values are immutable in spirit: all operations return new
// polynomials, so instances can be shared freely across threads.
class QPolynomial {
 public:
  // generous cap; the application never needs exponents beyond n*k <= 171
  static constexpr int kMaxExponent = 4096;

  QPolynomial() = default;
  explicit QPolynomial(std::vector<std::pair<int, mpz_class>> terms);

  static QPolynomial monomial(int exponent, mpz_class coeff = 1);
  static QPolynomial constant(mpz_class value);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  // degree of the zero polynomial is reported as -1
  [[nodiscard]] int degree() const;
  [[nodiscard]] mpz_class coeff(int exponent) const;
  [[nodiscard]] const std::vector<std::pair<int, mpz_class>>& terms() const {
    return terms_;
  }
  // exponent if the polynomial is a single term with coefficient one
  [[nodiscard]] std::optional<int> monomial_exponent() const;
  [[nodiscard]] mpz_class coeff_sum() const;

  [[nodiscard]] mpz_class eval(const mpz_class& q) const;
  [[nodiscard]] mpz_class eval(long q) const { return eval(mpz_class(q)); }

  QPolynomial operator+(const QPolynomial& other) const;
  QPolynomial operator-(const QPolynomial& other) const;
  QPolynomial operator*(const mpz_class& scalar) const;
  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  bool operator==(const QPolynomial& other) const = default;

 private:
  void normalize();
  std::vector<std::pair<int, mpz_class>> terms_;
};

// sign of f(q) - g(q); requires q >= 2
Ordering cmp_at(const QPolynomial& f, const QPolynomial& g, long q);

// total order by the highest differing coefficient
Ordering cmp_infty(const QPolynomial& f, const QPolynomial& g);

// true iff f(q) > g(q) for at least one integer q >= 2
bool is_strictly_better(const QPolynomial& f, const QPolynomial& g);

// true iff f(q) > g(q) for at least one integer q in [q_min, q_max];
// an absent q_max means the range is unbounded above
bool restrict_better(const QPolynomial& f, const QPolynomial& g, long q_min,
                     std::optional<long> q_max);

// canonical text form, e.g. "q^18+q^5+1"; zero renders as "0"
std::string render(const QPolynomial& p);

// accepts the canonical form plus common variants ("q^0", "2\cdot q^5",
// "2*q^5", whitespace); throws std::invalid_argument with the offending
// position on malformed input
QPolynomial parse_poly(const std::string& text);

}  // namespace mlc
