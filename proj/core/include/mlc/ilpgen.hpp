#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mlc {

enum class IlpVariant { edge, cover, weighted_fixed_q, counting };

IlpVariant parse_variant(const std::string& s);
std::string variant_name(IlpVariant v);

struct IlpOptions {
  IlpVariant variant = IlpVariant::edge;
  std::optional<long> q;  // weighted-fixed-q
  // counting objective coefficients c_i by exponent; empty means all 1
  std::map<int, long long> counting_coeffs;
  // pin selected a_i to fixed values via the bounds section
  std::map<int, long long> fixed_a;
  std::optional<long long> a1_bound;  // cardinality cap, counting variant
  // emit the pairwise constraints over adjacent pairs exactly as printed in
  // the source formulation instead of over conflicting pairs
  bool literal_edges = false;
};

struct IlpTerm {
  mpz_class coeff;
  std::string var;
};

struct IlpConstraint {
  std::string name;
  std::vector<IlpTerm> terms;
  char sense = '<';  // '<' means <=, '=' equality, '>' means >=
  mpz_class rhs;
};

struct IlpModel {
  std::string comment;
  bool maximize = true;
  std::vector<IlpTerm> objective;
  std::vector<IlpConstraint> constraints;
  std::vector<std::string> binaries;
  struct Bound {
    std::string var;
    long long lo = 0;
    long long hi = 0;
  };
  std::vector<Bound> general_bounds;
  bool overflow_warning = false;  // weighted coefficients above 2^53

  [[nodiscard]] std::string to_lp_text() const;
};

IlpModel emit(int n, int d, int k, const IlpOptions& opts);

// round-trip reader for the emitted subset of the LP format
IlpModel parse_lp_text(const std::string& text);

struct IlpSolution {
  mpz_class objective;
  std::map<std::string, long long> values;
};

// small exact branch-and-bound for the emitted model shapes: binary
// variables with non-negative objective, packing constraints (sum <= 1),
// one optional cardinality cap, and counting definitions -a_i + sum x = 0
IlpSolution solve_ilp(const IlpModel& model);

}  // namespace mlc
