#include "mlc/ilpgen.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "mlc/diagrams.hpp"
#include "mlc/weights.hpp"

namespace mlc {

IlpVariant parse_variant(const std::string& s) {
  if (s == "edge") return IlpVariant::edge;
  if (s == "cover" || s == "independent-set-cover") return IlpVariant::cover;
  if (s == "weighted" || s == "weighted-fixed-q") return IlpVariant::weighted_fixed_q;
  if (s == "counting") return IlpVariant::counting;
  throw std::invalid_argument("unknown ilp variant: " + s);
}

std::string variant_name(IlpVariant v) {
  switch (v) {
    case IlpVariant::edge: return "edge";
    case IlpVariant::cover: return "independent-set-cover";
    case IlpVariant::weighted_fixed_q: return "weighted-fixed-q";
    case IlpVariant::counting: return "counting";
  }
  throw std::logic_error("bad variant");
}

namespace {

std::vector<std::uint64_t> weight_k_vectors(int n, int k) {
  std::vector<std::uint64_t> out;
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  std::uint64_t limit = std::uint64_t{1} << n;
  while (v < limit) {
    out.push_back(v);
    std::uint64_t t = v | (v - 1);
    std::uint64_t next =
        (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    if (next <= v || next >= limit) break;
    v = next;
  }
  return out;
}

std::string xname(std::uint64_t v) { return "x" + std::to_string(v); }
std::string aname(int i) { return "a" + std::to_string(i); }

}  // namespace

IlpModel emit(int n, int d, int k, const IlpOptions& opts) {
  if (n < 1 || n > 62 || k < 1 || k > n || d < 2 || d % 2 != 0 || d > 2 * k) {
    throw std::domain_error("bad ilp parameters");
  }
  int delta = d / 2;
  int t = k - delta + 1;
  if (opts.variant == IlpVariant::cover && t <= 0) {
    throw std::domain_error(
        "independent-set-cover needs t = k - d/2 + 1 >= 1; use the edge variant");
  }
  auto vertices = weight_k_vectors(n, k);

  IlpModel model;
  model.comment = "variant=" + variant_name(opts.variant) +
                  " n=" + std::to_string(n) + " d=" + std::to_string(d) +
                  " k=" + std::to_string(k);
  for (std::uint64_t v : vertices) model.binaries.push_back(xname(v));

  // objective
  if (opts.variant == IlpVariant::weighted_fixed_q) {
    if (!opts.q || *opts.q < 2) {
      throw std::domain_error("weighted-fixed-q needs q >= 2");
    }
    mpz_class threshold = mpz_class(1) << 53;
    for (std::uint64_t v : vertices) {
      mpz_class c = upper_weight(PivotVector{n, v}, delta).eval(*opts.q);
      if (c > threshold) model.overflow_warning = true;
      model.objective.push_back({c, xname(v)});
    }
  } else if (opts.variant == IlpVariant::counting) {
    std::map<int, std::vector<std::uint64_t>> classes;
    for (std::uint64_t v : vertices) {
      classes[upper_weight(PivotVector{n, v}, delta).degree()].push_back(v);
    }
    for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
      long long c = 1;
      if (!opts.counting_coeffs.empty()) {
        auto f = opts.counting_coeffs.find(it->first);
        c = f == opts.counting_coeffs.end() ? 0 : f->second;
      }
      if (c != 0)
        model.objective.push_back(
            {mpz_class(static_cast<long>(c)), aname(it->first)});
    }
    // counting definitions: -a_i + sum over the class = 0
    for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
      IlpConstraint con;
      con.name = "def_a" + std::to_string(it->first);
      con.terms.push_back({mpz_class(-1), aname(it->first)});
      for (std::uint64_t v : it->second) con.terms.push_back({mpz_class(1), xname(v)});
      con.sense = '=';
      con.rhs = 0;
      model.constraints.push_back(std::move(con));
    }
    if (opts.a1_bound) {
      IlpConstraint cap;
      cap.name = "cardinality";
      for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
        cap.terms.push_back({mpz_class(1), aname(it->first)});
      }
      cap.sense = '<';
      cap.rhs = static_cast<long>(*opts.a1_bound);
      model.constraints.push_back(std::move(cap));
    }
    long long hi = opts.a1_bound ? *opts.a1_bound
                                 : static_cast<long long>(vertices.size());
    for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
      long long lo = 0, h = std::min<long long>(hi, it->second.size());
      if (auto f = opts.fixed_a.find(it->first); f != opts.fixed_a.end()) {
        lo = h = f->second;
      }
      model.general_bounds.push_back({aname(it->first), lo, h});
    }
  } else {
    for (std::uint64_t v : vertices) {
      model.objective.push_back({mpz_class(1), xname(v)});
    }
  }

  // pairwise or set constraints
  if (opts.variant == IlpVariant::cover) {
    // one constraint per t-subset of positions; vertices covering the subset
    // pairwise meet in >= t ones, so at most one of them can be picked
    std::vector<int> subset(t);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == t) {
        std::uint64_t mask = 0;
        for (int pos : subset) mask |= std::uint64_t{1} << pos;
        IlpConstraint con;
        for (std::uint64_t v : vertices) {
          if ((v & mask) == mask) con.terms.push_back({mpz_class(1), xname(v)});
        }
        if (con.terms.size() >= 2) {
          con.name = "s" + std::to_string(model.constraints.size());
          con.sense = '<';
          con.rhs = 1;
          model.constraints.push_back(std::move(con));
        }
        return;
      }
      for (int p = start; p < n; ++p) {
        subset[depth] = p;
        rec(p + 1, depth + 1);
      }
    };
    rec(0, 0);
  } else {
    size_t idx = 0;
    for (size_t i = 0; i < vertices.size(); ++i) {
      for (size_t j = i + 1; j < vertices.size(); ++j) {
        bool adj = std::popcount(vertices[i] ^ vertices[j]) >= d;
        if (adj != opts.literal_edges) continue;
        IlpConstraint con;
        con.name = "p" + std::to_string(idx++);
        con.terms.push_back({mpz_class(1), xname(vertices[i])});
        con.terms.push_back({mpz_class(1), xname(vertices[j])});
        con.sense = '<';
        con.rhs = 1;
        model.constraints.push_back(std::move(con));
      }
    }
  }
  return model;
}

namespace {

void append_terms(std::ostream& os, const std::vector<IlpTerm>& terms) {
  bool first = true;
  for (const auto& t : terms) {
    mpz_class c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "- ";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (c != 1) os << c.get_str() << " ";
    os << t.var;
  }
}

}  // namespace

std::string IlpModel::to_lp_text() const {
  std::ostringstream os;
  if (!comment.empty()) os << "\\ " << comment << "\n";
  if (overflow_warning) {
    os << "\\ warning: objective coefficients exceed 2^53; use an exact solver\n";
  }
  os << (maximize ? "Maximize" : "Minimize") << "\n obj: ";
  append_terms(os, objective);
  os << "\nSubject To\n";
  for (const auto& con : constraints) {
    os << " " << con.name << ": ";
    append_terms(os, con.terms);
    os << (con.sense == '<' ? " <= " : con.sense == '>' ? " >= " : " = ")
       << con.rhs.get_str() << "\n";
  }
  if (!general_bounds.empty()) {
    os << "Bounds\n";
    for (const auto& b : general_bounds) {
      if (b.lo == b.hi) {
        os << " " << b.var << " = " << b.lo << "\n";
      } else {
        os << " " << b.lo << " <= " << b.var << " <= " << b.hi << "\n";
      }
    }
  }
  if (!binaries.empty()) {
    os << "Binary\n";
    for (size_t i = 0; i < binaries.size(); ++i) {
      os << (i % 10 == 0 ? " " : " ") << binaries[i];
      if (i % 10 == 9) os << "\n";
    }
    if (binaries.size() % 10 != 0) os << "\n";
  }
  if (!general_bounds.empty()) {
    os << "General\n";
    for (const auto& b : general_bounds) os << " " << b.var;
    os << "\n";
  }
  os << "End\n";
  return os.str();
}

IlpModel parse_lp_text(const std::string& text) {
  IlpModel model;
  std::istringstream in(text);
  std::string line;
  enum class Section { none, objective, constraints, bounds, binary, general };
  Section section = Section::none;
  std::string pending;  // accumulated objective/constraint text

  auto parse_term_list = [](const std::string& s) {
    std::vector<IlpTerm> terms;
    std::istringstream ts(s);
    std::string tok;
    mpz_class sign = 1;
    std::optional<mpz_class> coeff;
    while (ts >> tok) {
      if (tok == "+") {
        sign = 1;
      } else if (tok == "-") {
        sign = -1;
      } else if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
        coeff = mpz_class(tok);
      } else {
        mpz_class c = coeff.value_or(1) * sign;
        terms.push_back({c, tok});
        sign = 1;
        coeff.reset();
      }
    }
    return terms;
  };

  auto flush_constraint = [&](const std::string& s) {
    if (s.empty()) return;
    auto colon = s.find(':');
    std::string name = colon == std::string::npos ? "" : s.substr(0, colon);
    std::string body = colon == std::string::npos ? s : s.substr(colon + 1);
    // strip name whitespace
    name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
    char sense = '<';
    size_t pos;
    if ((pos = body.find("<=")) != std::string::npos) {
      sense = '<';
    } else if ((pos = body.find(">=")) != std::string::npos) {
      sense = '>';
    } else if ((pos = body.find('=')) != std::string::npos) {
      sense = '=';
    } else {
      throw std::invalid_argument("constraint without comparison: " + s);
    }
    IlpConstraint con;
    con.name = name;
    con.terms = parse_term_list(body.substr(0, pos));
    std::string rhs = body.substr(pos + (sense == '=' ? 1 : 2));
    rhs.erase(std::remove_if(rhs.begin(), rhs.end(), ::isspace), rhs.end());
    con.rhs = mpz_class(rhs);
    con.sense = sense;
    model.constraints.push_back(std::move(con));
  };

  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '\\') {
      if (model.comment.empty()) model.comment = line.substr(2);
      continue;
    }
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty()) continue;
    std::string lower = trimmed;
    std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
    if (lower == "maximize" || lower == "minimize") {
      model.maximize = lower == "maximize";
      section = Section::objective;
      continue;
    }
    if (lower == "subject to" || lower == "st") {
      auto colon = pending.find(':');
      model.objective = parse_term_list(
          colon == std::string::npos ? pending : pending.substr(colon + 1));
      pending.clear();
      section = Section::constraints;
      continue;
    }
    if (lower == "bounds") {
      section = Section::bounds;
      continue;
    }
    if (lower == "binary" || lower == "binaries") {
      section = Section::binary;
      continue;
    }
    if (lower == "general" || lower == "generals") {
      section = Section::general;
      continue;
    }
    if (lower == "end") break;
    switch (section) {
      case Section::objective:
        pending += " " + trimmed;
        break;
      case Section::constraints:
        flush_constraint(trimmed);
        break;
      case Section::bounds: {
        std::istringstream bs(trimmed);
        std::string t1, t2, t3, t4, t5;
        bs >> t1 >> t2 >> t3;
        if (t2 == "=") {
          long long v = std::stoll(t3);
          model.general_bounds.push_back({t1, v, v});
        } else {
          bs >> t4 >> t5;
          model.general_bounds.push_back(
              {t3, std::stoll(t1), std::stoll(t5)});
        }
        break;
      }
      case Section::binary: {
        std::istringstream bs(trimmed);
        std::string var;
        while (bs >> var) model.binaries.push_back(var);
        break;
      }
      case Section::general:
        break;  // bounds already captured the integer variables
      case Section::none:
        break;
    }
  }
  return model;
}

IlpSolution solve_ilp(const IlpModel& model) {
  // Reduce to a weighted conflict model: counting definitions substitute the
  // integer variables away, packing rows become pairwise conflicts, and a
  // full-support row becomes a cardinality cap.
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < model.binaries.size(); ++i) index[model.binaries[i]] = i;
  size_t nv = model.binaries.size();

  std::map<std::string, long long> fixed_int;  // pinned a-variables
  std::map<std::string, std::pair<long long, long long>> int_bounds;
  for (const auto& b : model.general_bounds) {
    int_bounds[b.var] = {b.lo, b.hi};
    if (b.lo == b.hi) fixed_int[b.var] = b.lo;
  }

  // objective as per-binary weights, integer variables substituted
  std::vector<mpz_class> weight(nv, 0);
  std::map<std::string, std::vector<size_t>> int_class;  // a_i -> member x's
  std::map<std::string, std::pair<long long, long long>> int_range;
  for (const auto& con : model.constraints) {
    if (con.sense != '=') continue;
    std::string ivar;
    std::vector<size_t> members;
    bool shape_ok = con.rhs == 0;
    for (const auto& t : con.terms) {
      if (t.coeff == -1 && !index.count(t.var) && ivar.empty()) {
        ivar = t.var;
      } else if (t.coeff == 1 && index.count(t.var)) {
        members.push_back(index.at(t.var));
      } else {
        shape_ok = false;
      }
    }
    if (!shape_ok || ivar.empty()) {
      throw std::domain_error("unsupported equality constraint: " + con.name);
    }
    int_class[ivar] = members;
  }
  for (const auto& t : model.objective) {
    if (auto it = index.find(t.var); it != index.end()) {
      weight[it->second] += t.coeff;
    } else if (auto ic = int_class.find(t.var); ic != int_class.end()) {
      for (size_t m : ic->second) weight[m] += t.coeff;
    } else {
      throw std::domain_error("objective variable without definition: " + t.var);
    }
  }

  std::vector<std::vector<size_t>> conflicts(nv);
  long long cap = static_cast<long long>(nv);
  for (const auto& con : model.constraints) {
    if (con.sense == '=') continue;
    if (con.sense == '>') throw std::domain_error(">= rows not supported");
    bool all_binary = true;
    std::vector<size_t> members;
    for (const auto& t : con.terms) {
      if (t.coeff == 1 && index.count(t.var)) {
        members.push_back(index.at(t.var));
      } else {
        all_binary = false;
      }
    }
    if (all_binary && con.rhs == 1) {
      for (size_t a : members) {
        for (size_t b : members) {
          if (a != b) conflicts[a].push_back(b);
        }
      }
    } else if (!all_binary) {
      // cardinality cap over the counting variables
      mpz_class total = con.rhs;
      cap = std::min(cap, static_cast<long long>(total.get_si()));
    } else {
      throw std::domain_error("unsupported row: " + con.name);
    }
  }

  // honor pinned integer variables: a_i = 0 forbids its whole class,
  // a_i = c > 0 is only supported as an upper bound via the cap
  std::vector<char> forbidden(nv, 0);
  for (const auto& [var, value] : fixed_int) {
    if (value == 0) {
      if (auto it = int_class.find(var); it != int_class.end()) {
        for (size_t m : it->second) forbidden[m] = 1;
      }
    }
  }

  std::vector<size_t> order;
  for (size_t i = 0; i < nv; ++i) {
    if (!forbidden[i]) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (weight[a] != weight[b]) return weight[a] > weight[b];
    return a < b;
  });

  mpz_class best = 0;
  std::vector<size_t> best_set;
  std::vector<size_t> chosen;
  std::vector<char> blocked(nv, 0);

  // include/exclude recursion over variables in weight order with an
  // optimistic completion bound limited by the cardinality cap
  std::function<void(size_t, const mpz_class&, std::vector<char>&)> rec2 =
      [&](size_t pos, const mpz_class& cur, std::vector<char>& blk) {
        if (cur > best) {
          best = cur;
          best_set = chosen;
        }
        if (pos >= order.size()) return;
        if (static_cast<long long>(chosen.size()) < cap) {
          mpz_class bound = cur;
          long long room = cap - static_cast<long long>(chosen.size());
          for (size_t p = pos; p < order.size() && room > 0; ++p) {
            if (blk[order[p]]) continue;
            if (weight[order[p]] < 0) continue;
            bound += weight[order[p]];
            --room;
          }
          if (bound <= best) return;
        } else {
          return;
        }
        size_t v = order[pos];
        if (!blk[v]) {
          std::vector<size_t> newly;
          for (size_t c : conflicts[v]) {
            if (!blk[c]) {
              blk[c] = 1;
              newly.push_back(c);
            }
          }
          chosen.push_back(v);
          rec2(pos + 1, cur + weight[v], blk);
          chosen.pop_back();
          for (size_t c : newly) blk[c] = 0;
        }
        rec2(pos + 1, cur, blk);
      };
  std::vector<char> blk = blocked;
  rec2(0, mpz_class(0), blk);

  IlpSolution sol;
  sol.objective = best;
  for (const auto& name : model.binaries) sol.values[name] = 0;
  for (size_t v : best_set) sol.values[model.binaries[v]] = 1;
  for (const auto& [var, members] : int_class) {
    long long s = 0;
    for (size_t m : members) s += sol.values[model.binaries[m]];
    sol.values[var] = s;
  }
  return sol;
}

}  // namespace mlc
