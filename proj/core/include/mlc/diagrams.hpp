#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mlc {

// Pivot vector b_1..b_n encoded as the integer sum b_i * 2^(n-i); n <= 64 so
// one machine word suffices for the XOR/popcount hot path.
struct PivotVector {
  int n = 0;
  std::uint64_t value = 0;

  [[nodiscard]] int weight() const { return std::popcount(value); }
  // 1-based access to b_i
  [[nodiscard]] int bit(int i) const {
    return static_cast<int>((value >> (n - i)) & 1u);
  }
  [[nodiscard]] std::string to_string() const;
  bool operator==(const PivotVector&) const = default;
};

std::uint64_t encode(const PivotVector& v);
PivotVector decode(std::uint64_t value, int n);
PivotVector from_bits(const std::string& bits);

// Top-right justified Ferrers diagram. Both conventions are stored eagerly:
// column cardinalities (nondecreasing, left to right) and row lengths
// (nonincreasing, top to bottom) are conjugate partitions of each other.
class FerrersDiagram {
 public:
  FerrersDiagram() = default;
  static FerrersDiagram from_columns(std::vector<int> cols);
  static FerrersDiagram from_rows(std::vector<int> rows);

  [[nodiscard]] const std::vector<int>& columns() const { return cols_; }
  [[nodiscard]] const std::vector<int>& rows() const { return rows_; }
  [[nodiscard]] int num_cols() const { return static_cast<int>(cols_.size()); }
  [[nodiscard]] int num_rows() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] bool empty() const { return cols_.empty(); }
  [[nodiscard]] int total_dots() const;
  // mirror along the main diagonal; the resulting shape supports a
  // rank-metric code of the same dimension and distance
  [[nodiscard]] FerrersDiagram transposed() const;

  bool operator==(const FerrersDiagram&) const = default;
  auto operator<=>(const FerrersDiagram&) const = default;

 private:
  std::vector<int> cols_;
  std::vector<int> rows_;
};

// number of dots of the Echelon-Ferrers diagram of v
int dot_count(const PivotVector& v);

FerrersDiagram to_diagram(const PivotVector& v);

// dots of F neither in the first i rows nor in the rightmost delta-1-i columns
int nu(const FerrersDiagram& f, int delta, int i);

// min over i of nu(f, delta, i): the exponent of the dimension upper bound
int ef_upper_exponent(const FerrersDiagram& f, int delta);

int hamming(const PivotVector& u, const PivotVector& v);
bool adjacent(const PivotVector& u, const PivotVector& v, int d);

// true iff small fits inside big when both are aligned to the top-right
bool subdiagram_embeds(const FerrersDiagram& small, const FerrersDiagram& big);

}  // namespace mlc
