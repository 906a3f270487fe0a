#include "mlc/diagrams.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlc {

std::string PivotVector::to_string() const {
  std::string s(n, '0');
  for (int i = 1; i <= n; ++i) {
    if (bit(i)) s[i - 1] = '1';
  }
  return s;
}

std::uint64_t encode(const PivotVector& v) { return v.value; }

PivotVector decode(std::uint64_t value, int n) {
  if (n < 1 || n > 64) throw std::domain_error("n must be in [1, 64]");
  if (n < 64 && value >= (std::uint64_t{1} << n)) {
    throw std::domain_error("value does not fit in n bits");
  }
  return PivotVector{n, value};
}

PivotVector from_bits(const std::string& bits) {
  if (bits.empty() || bits.size() > 64) {
    throw std::domain_error("bit string length must be in [1, 64]");
  }
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::domain_error("bit string must be 0/1");
    value = (value << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return PivotVector{static_cast<int>(bits.size()), value};
}

namespace {

std::vector<int> conjugate(const std::vector<int>& part) {
  // part may be given in either monotone orientation
  if (part.empty()) return {};
  int mx = *std::max_element(part.begin(), part.end());
  std::vector<int> out(mx, 0);
  for (int x : part) {
    for (int i = 0; i < x; ++i) ++out[i];
  }
  return out;  // nonincreasing
}

}  // namespace

FerrersDiagram FerrersDiagram::from_columns(std::vector<int> cols) {
  FerrersDiagram f;
  for (size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] < 1) throw std::domain_error("column cardinality must be positive");
    if (i > 0 && cols[i] < cols[i - 1]) {
      throw std::domain_error("columns must be nondecreasing left to right");
    }
  }
  f.cols_ = std::move(cols);
  f.rows_ = conjugate(f.cols_);
  return f;
}

FerrersDiagram FerrersDiagram::from_rows(std::vector<int> rows) {
  FerrersDiagram f;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1) throw std::domain_error("row length must be positive");
    if (i > 0 && rows[i] > rows[i - 1]) {
      throw std::domain_error("rows must be nonincreasing top to bottom");
    }
  }
  f.rows_ = std::move(rows);
  f.cols_ = conjugate(f.rows_);
  std::reverse(f.cols_.begin(), f.cols_.end());
  return f;
}

int FerrersDiagram::total_dots() const {
  int s = 0;
  for (int c : cols_) s += c;
  return s;
}

FerrersDiagram FerrersDiagram::transposed() const {
  std::vector<int> rows(cols_.rbegin(), cols_.rend());
  return from_rows(std::move(rows));
}

int dot_count(const PivotVector& v) {
  int ones = 0;
  int dots = 0;
  for (int i = 1; i <= v.n; ++i) {
    if (v.bit(i)) {
      ++ones;
    } else {
      dots += ones;
    }
  }
  return dots;
}

FerrersDiagram to_diagram(const PivotVector& v) {
  if (v.weight() == 0) throw std::domain_error("pivot vector must have weight >= 1");
  std::vector<int> cols;
  int ones = 0;
  for (int i = 1; i <= v.n; ++i) {
    if (v.bit(i)) {
      ++ones;
    } else if (ones > 0) {
      cols.push_back(ones);
    }
  }
  if (cols.empty()) return {};
  return FerrersDiagram::from_columns(std::move(cols));
}

int nu(const FerrersDiagram& f, int delta, int i) {
  if (delta < 1 || i < 0 || i > delta - 1) {
    throw std::domain_error("nu requires 1 <= delta and 0 <= i <= delta-1");
  }
  int keep = f.num_cols() - (delta - 1 - i);
  int s = 0;
  for (int c = 0; c < keep; ++c) {
    s += std::max(0, f.columns()[c] - i);
  }
  return s;
}

int ef_upper_exponent(const FerrersDiagram& f, int delta) {
  if (delta < 1) throw std::domain_error("delta must be >= 1");
  int best = nu(f, delta, 0);
  for (int i = 1; i < delta; ++i) {
    best = std::min(best, nu(f, delta, i));
  }
  return best;
}

int hamming(const PivotVector& u, const PivotVector& v) {
  if (u.n != v.n) throw std::domain_error("length mismatch");
  return std::popcount(u.value ^ v.value);
}

bool adjacent(const PivotVector& u, const PivotVector& v, int d) {
  return u != v && hamming(u, v) >= d;
}

bool subdiagram_embeds(const FerrersDiagram& small, const FerrersDiagram& big) {
  int a = small.num_cols();
  int m = big.num_cols();
  if (a > m) return false;
  for (int t = 0; t < a; ++t) {
    if (small.columns()[a - 1 - t] > big.columns()[m - 1 - t]) return false;
  }
  return true;
}

}  // namespace mlc
