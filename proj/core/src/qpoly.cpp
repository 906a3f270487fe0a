#include "mlc/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mlc {

QPolynomial::QPolynomial(std::vector<std::pair<int, mpz_class>> terms)
    : terms_(std::move(terms)) {
  normalize();
}

void QPolynomial::normalize() {
  std::map<int, mpz_class> acc;
  for (auto& [e, c] : terms_) {
    if (e < 0 || e > kMaxExponent) {
      throw std::domain_error("exponent out of range");
    }
    acc[e] += c;
  }
  terms_.clear();
  for (auto& [e, c] : acc) {
    if (c != 0) terms_.emplace_back(e, c);
  }
}

QPolynomial QPolynomial::monomial(int exponent, mpz_class coeff) {
  return QPolynomial({{exponent, std::move(coeff)}});
}

QPolynomial QPolynomial::constant(mpz_class value) {
  return monomial(0, std::move(value));
}

int QPolynomial::degree() const {
  return terms_.empty() ? -1 : terms_.back().first;
}

mpz_class QPolynomial::coeff(int exponent) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const auto& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

std::optional<int> QPolynomial::monomial_exponent() const {
  if (terms_.size() == 1 && terms_[0].second == 1) return terms_[0].first;
  return std::nullopt;
}

mpz_class QPolynomial::coeff_sum() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

mpz_class QPolynomial::eval(const mpz_class& q) const {
  if (q < 2) throw std::domain_error("eval requires q >= 2");
  // terms are sorted ascending; Horner over the exponent gaps
  mpz_class result = 0;
  int prev = -1;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (prev >= 0) {
      mpz_class step;
      mpz_pow_ui(step.get_mpz_t(), q.get_mpz_t(),
                 static_cast<unsigned long>(prev - it->first));
      result *= step;
    }
    result += it->second;
    prev = it->first;
  }
  // the loop accumulates relative to the smallest exponent; shift once more
  if (prev > 0) {
    mpz_class step;
    mpz_pow_ui(step.get_mpz_t(), q.get_mpz_t(),
               static_cast<unsigned long>(prev));
    result *= step;
  }
  return result;
}

QPolynomial QPolynomial::operator+(const QPolynomial& other) const {
  QPolynomial r = *this;
  r += other;
  return r;
}

QPolynomial QPolynomial::operator-(const QPolynomial& other) const {
  QPolynomial r = *this;
  r -= other;
  return r;
}

QPolynomial QPolynomial::operator*(const mpz_class& scalar) const {
  if (scalar == 0) return {};
  QPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c *= scalar;
  return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  std::vector<std::pair<int, mpz_class>> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() ||
        (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      mpz_class c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  *this += other * mpz_class(-1);
  return *this;
}

Ordering cmp_at(const QPolynomial& f, const QPolynomial& g, long q) {
  mpz_class fv = f.eval(q);
  mpz_class gv = g.eval(q);
  if (fv < gv) return Ordering::less;
  if (fv > gv) return Ordering::greater;
  return Ordering::equal;
}

Ordering cmp_infty(const QPolynomial& f, const QPolynomial& g) {
  const auto& ft = f.terms();
  const auto& gt = g.terms();
  auto a = ft.rbegin();
  auto b = gt.rbegin();
  while (a != ft.rend() || b != gt.rend()) {
    int ea = a != ft.rend() ? a->first : -1;
    int eb = b != gt.rend() ? b->first : -1;
    if (ea > eb) {
      if (a->second != 0) return a->second > 0 ? Ordering::greater : Ordering::less;
      ++a;
    } else if (eb > ea) {
      return b->second > 0 ? Ordering::less : Ordering::greater;
    } else {
      if (a->second != b->second) {
        return a->second > b->second ? Ordering::greater : Ordering::less;
      }
      ++a;
      ++b;
    }
  }
  return Ordering::equal;
}

namespace {

// cancel common parts: (f - g) split into its positive part and the negated
// negative part; the two results have disjoint supports and coefficients > 0
std::pair<QPolynomial, QPolynomial> reduce_pair(const QPolynomial& f,
                                                const QPolynomial& g) {
  QPolynomial diff = f - g;
  std::vector<std::pair<int, mpz_class>> pos, neg;
  for (const auto& [e, c] : diff.terms()) {
    if (c > 0) {
      pos.emplace_back(e, c);
    } else {
      neg.emplace_back(e, -c);
    }
  }
  return {QPolynomial(std::move(pos)), QPolynomial(std::move(neg))};
}

// fast floating-point evaluation; both inputs of a comparison have strictly
// positive coefficients, so each value is accurate to a few ulp and a wide
// relative margin decides the sign without exact arithmetic
double eval_double(const QPolynomial& p, double q) {
  const auto& terms = p.terms();
  double v = 0.0;
  int prev = 0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (it == terms.rbegin()) {
      v = it->second.get_d();
    } else {
      v = v * std::pow(q, prev - it->first) + it->second.get_d();
    }
    prev = it->first;
  }
  return v * std::pow(q, prev);
}

// sign of fp(q) - gp(q) via doubles when safely away from a tie, exact GMP
// arithmetic otherwise
bool wins_at(const QPolynomial& fp, const QPolynomial& gp, const mpz_class& q) {
  const double qd = q.get_d();
  const double fv = eval_double(fp, qd);
  const double gv = eval_double(gp, qd);
  if (std::isfinite(fv) && std::isfinite(gv)) {
    if (fv > gv * (1.0 + 1e-9)) return true;
    if (fv < gv * (1.0 - 1e-9)) return false;
  }
  return fp.eval(q) > gp.eval(q);
}

}  // namespace

bool is_strictly_better(const QPolynomial& f, const QPolynomial& g) {
  auto [fp, gp] = reduce_pair(f, g);
  if (fp.is_zero()) return false;  // f <= g at every q, includes f == g
  if (gp.is_zero()) return true;   // f > g at every q >= 2
  int j = std::max(fp.degree(), gp.degree());
  if (fp.coeff(j) > 0) return true;  // f dominates for all large q
  if (j == 0) return false;          // cannot happen with fp nonzero; kept as written
  // g holds the top term: f can only win below lambda = sum(fp) / g_j
  mpz_class sum_f = fp.coeff_sum();
  mpz_class gj = gp.coeff(j);
  for (mpz_class q = 2; q * gj < sum_f; ++q) {
    if (wins_at(fp, gp, q)) return true;
  }
  return false;
}

bool restrict_better(const QPolynomial& f, const QPolynomial& g, long q_min,
                     std::optional<long> q_max) {
  if (q_min < 2) throw std::domain_error("restrict_better requires q_min >= 2");
  if (q_max && *q_max < q_min) return false;
  auto [fp, gp] = reduce_pair(f, g);
  if (fp.is_zero()) return false;
  if (gp.is_zero()) return true;
  int j = std::max(fp.degree(), gp.degree());
  if (fp.coeff(j) > 0) {
    // f wins for every q >= threshold; below it, check by evaluation
    mpz_class threshold = gp.coeff_sum() / fp.coeff(j) + 1;
    if (threshold <= q_min) return true;
    if (!q_max || threshold <= *q_max) return true;
    for (long q = q_min; q <= *q_max; ++q) {
      if (wins_at(fp, gp, mpz_class(q))) return true;
    }
    return false;
  }
  // g wins for every q >= threshold; only a finite window can help f
  mpz_class threshold = fp.coeff_sum() / gp.coeff(j) + 1;
  for (mpz_class q = q_min; q < threshold; ++q) {
    if (q_max && q > *q_max) break;
    if (wins_at(fp, gp, q)) return true;
  }
  return false;
}

std::string render(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? "-" : "+";
      if (a < 0) a = -a;
    }
    if (e == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str();
      out += "q";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos,
                             const std::string& what) {
  throw std::invalid_argument("parse error at position " +
                              std::to_string(pos) + ": " + what + " in \"" +
                              text + "\"");
}

}  // namespace

QPolynomial parse_poly(const std::string& text) {
  std::vector<std::pair<int, mpz_class>> terms;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) parse_fail(text, i, "empty input");
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      parse_fail(text, i, "expected '+' or '-'");
    }
    first = false;
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
    }
    skip_ws();
    // optional multiplication marker between coefficient and q
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    } else if (text.compare(i, 5, "\\cdot") == 0) {
      i += 5;
      skip_ws();
    }
    mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
    int exponent = 0;
    if (i < text.size() && text[i] == 'q') {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        std::string ed;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i]))) {
          ed += text[i++];
        }
        if (ed.empty()) parse_fail(text, i, "expected exponent digits");
        exponent = std::stoi(ed);
      }
    } else if (digits.empty()) {
      parse_fail(text, i, "expected coefficient or 'q'");
    }
    terms.emplace_back(exponent, sign * coeff);
    skip_ws();
  }
  // "0" parses to the zero polynomial through normalization
  return QPolynomial(std::move(terms));
}

}  // namespace mlc
