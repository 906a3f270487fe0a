#include "mlc/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

namespace mlc {

std::string QMode::to_string() const {
  switch (kind) {
    case Kind::all:
      return "all";
    case Kind::fixed:
      return "q=" + std::to_string(q);
    case Kind::range:
      return q_max ? "q=" + std::to_string(q_min) + ".." + std::to_string(*q_max)
                   : "q>=" + std::to_string(q_min);
  }
  return "all";
}

Instance Instance::build(int n, int d, int k, Regime regime, int ub,
                         int max_dive, QMode qmode) {
  if (n < 1 || n > 63 || k < 1 || k > n) {
    throw std::domain_error("need 1 <= k <= n <= 63");
  }
  if (d < 2 || d % 2 != 0 || d > 2 * k) {
    throw std::domain_error("need even d with 2 <= d <= 2k");
  }
  if (ub < 1 || max_dive < 1 || max_dive > ub) {
    throw std::domain_error("need 1 <= max_dive <= ub");
  }
  Instance inst;
  inst.n = n;
  inst.d = d;
  inst.k = k;
  inst.delta = d / 2;
  inst.regime = regime;
  inst.ub = ub;
  inst.max_dive = max_dive;
  inst.qmode = qmode;

  struct Entry {
    std::uint64_t value;
    QPolynomial w;
    int exponent;
  };
  std::vector<Entry> entries;
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  std::uint64_t limit = std::uint64_t{1} << n;  // n <= 64 callers stay below
  QValidity validity;
  while (v < limit) {
    PivotVector p{n, v};
    QPolynomial w;
    switch (regime) {
      case Regime::upper:
        w = upper_weight(p, inst.delta);
        break;
      case Regime::lower: {
        int ones = 0;
        bool empty_diag = true;
        for (int i = 1; i <= n && empty_diag; ++i) {
          if (p.bit(i)) {
            ++ones;
          } else if (ones > 0) {
            empty_diag = false;
          }
        }
        if (empty_diag) {
          w = QPolynomial::monomial(0);
        } else {
          auto witness = lower_dimension(to_diagram(p), inst.delta);
          w = QPolynomial::monomial(witness.dimension);
          validity = QValidity::intersect(validity, witness.q_validity);
        }
        break;
      }
      case Regime::spread:
        w = spread_weight(p, n, k).first;
        break;
    }
    entries.push_back({v, w, w.degree()});
    std::uint64_t t = v | (v - 1);
    std::uint64_t next =
        (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    if (next <= v || next >= limit) break;
    v = next;
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     if (a.exponent != b.exponent) return a.exponent > b.exponent;
                     return a.value > b.value;
                   });
  inst.vertices.reserve(entries.size());
  inst.w.reserve(entries.size());
  inst.wbar.reserve(entries.size());
  for (auto& e : entries) {
    inst.vertices.push_back(e.value);
    inst.w.push_back(e.w);
    // all shipped regimes use monomial weights, so wbar = w is the tightest
    // comparable majorant
    inst.wbar.push_back(e.w);
  }
  inst.weight_validity = validity;
  return inst;
}

namespace {

// The search spends nearly all of its time constructing and comparing
// polynomials whose exponents are bounded by the largest vertex weight and
// whose coefficients are bounded by ub.  A dense array of 32-bit counts
// indexed by exponent avoids all arbitrary-precision traffic on that path;
// comparisons use doubles with a wide relative margin and fall back to exact
// arithmetic only on near-ties, so every verdict equals the exact one.
using DP = std::vector<std::int32_t>;

bool dp_is_zero(const DP& a) {
  for (std::int32_t c : a)
    if (c != 0) return false;
  return true;
}

// Horner evaluation from the top exponent `hi` down
double dp_horner(const DP& p, int hi, double q) {
  double v = 0.0;
  for (int e = hi; e >= 0; --e) v = v * q + static_cast<double>(p[e]);
  return v;
}

mpz_class dp_eval(const DP& p, int hi, const mpz_class& q) {
  mpz_class v = 0;
  for (int e = hi; e >= 0; --e) {
    v *= q;
    v += p[e];
  }
  return v;
}

// exact sign of fp(q) - gp(q); doubles decide when safely away from a tie
bool dp_wins(const DP& fp, const DP& gp, int hi, long long q) {
  const double qd = static_cast<double>(q);
  const double fv = dp_horner(fp, hi, qd);
  const double gv = dp_horner(gp, hi, qd);
  if (std::isfinite(fv) && std::isfinite(gv)) {
    if (fv > gv * (1.0 + 1e-9)) return true;
    if (fv < gv * (1.0 - 1e-9)) return false;
  }
  const mpz_class qz(static_cast<long>(q));
  return dp_eval(fp, hi, qz) > dp_eval(gp, hi, qz);
}

// cancel common parts of f and g; returns the top exponent carrying a
// difference, or -1 when f == g
int dp_reduce(const DP& f, const DP& g, DP& fp, DP& gp) {
  const int n = static_cast<int>(f.size());
  int j = -1;
  for (int e = 0; e < n; ++e) {
    const std::int32_t d = f[e] - g[e];
    fp[e] = d > 0 ? d : 0;
    gp[e] = d < 0 ? -d : 0;
    if (d != 0) j = e;
  }
  return j;
}

class Solver {
 public:
  Solver(const Instance& inst, const SolveOptions& opts)
      : inst_(inst),
        opts_(opts),
        nv_(inst.vertices.size()),
        words_((inst.vertices.size() + 63) / 64) {
    int max_e = 0;
    for (const auto& w : inst_.w) max_e = std::max(max_e, w.degree());
    for (const auto& w : inst_.wbar) max_e = std::max(max_e, w.degree());
    ne_ = static_cast<size_t>(max_e) + 1;

    expo_.reserve(nv_);
    for (const auto& w : inst_.wbar) {
      const auto e = w.monomial_exponent();
      expo_.push_back(e && w.coeff(*e) == 1 ? *e : -1);
    }
    w_dp_.assign(nv_, DP(ne_, 0));
    wbar_dp_.assign(nv_, DP(ne_, 0));
    for (size_t i = 0; i < nv_; ++i) {
      to_dp(inst_.w[i], w_dp_[i]);
      to_dp(inst_.wbar[i], wbar_dp_[i]);
    }
    // maximal runs of equal exponent in the sorted vertex order
    for (size_t i = 0; i < nv_;) {
      size_t j = i + 1;
      if (expo_[i] >= 0) {
        while (j < nv_ && expo_[j] == expo_[i]) ++j;
      }
      groups_.push_back({i, j, expo_[i]});
      i = j;
    }
    adj_.resize(nv_);
    // one reusable buffer set per recursion depth; sized up front so
    // references held across recursive calls stay valid
    child_buf_.assign(static_cast<size_t>(inst_.max_dive) + 1, Bits(words_));
    scr_.assign(static_cast<size_t>(inst_.max_dive) + 1,
                Scratch{DP(ne_), DP(ne_), DP(ne_), DP(ne_), DP(ne_)});
    fp_.assign(ne_, 0);
    gp_.assign(ne_, 0);
  }

  ParetoFront run() {
    auto start = std::chrono::steady_clock::now();
    if (opts_.seed) {
      for (const auto& rec : opts_.seed->cliques) seed_clique(rec.members);
    }
    std::vector<int> sol;
    Bits cands(words_, ~std::uint64_t{0});
    trim_tail(cands);
    DP wsol(ne_, 0);
    dive(sol, wsol, cands);
    ParetoFront out;
    out.cliques.reserve(front_.size());
    for (auto& r : front_) out.cliques.push_back(std::move(r.rec));
    out.hat_cliques.reserve(hat_front_.size());
    for (auto& r : hat_front_) out.hat_cliques.push_back(std::move(r.rec));
    out.stats = stats_;
    out.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    out.stats.complete = !aborted_;
    return out;
  }

 private:
  struct RecDP {
    CliqueRecord rec;
    DP w;     // dense mirror of rec.weight
    DP what;  // dense mirror of rec.ub_weight
  };

  void to_dp(const QPolynomial& p, DP& out) const {
    std::fill(out.begin(), out.end(), 0);
    for (const auto& [e, c] : p.terms()) {
      out[static_cast<size_t>(e)] = static_cast<std::int32_t>(c.get_si());
    }
  }

  [[nodiscard]] QPolynomial to_qp(const DP& p) const {
    std::vector<std::pair<int, mpz_class>> terms;
    for (size_t e = 0; e < p.size(); ++e) {
      if (p[e] != 0) terms.emplace_back(static_cast<int>(e), mpz_class(p[e]));
    }
    return QPolynomial(std::move(terms));
  }

  // dense mirrors of is_strictly_better / cmp_at / restrict_better; each
  // computes the identical verdict to its exact counterpart
  bool isb(const DP& f, const DP& g) {
    const int j = dp_reduce(f, g, fp_, gp_);
    if (j < 0) return false;  // f == g
    switch (inst_.qmode.kind) {
      case QMode::Kind::all: {
        bool fz = true, gz = true;
        for (int e = 0; e <= j; ++e) {
          if (fp_[e] != 0) fz = false;
          if (gp_[e] != 0) gz = false;
        }
        if (fz) return false;
        if (gz) return true;
        if (fp_[j] > 0) return true;  // f dominates for all large q
        if (j == 0) return false;
        long long sum_f = 0;
        for (int e = 0; e <= j; ++e) sum_f += fp_[e];
        const long long gj = gp_[j];
        for (long long q = 2; q * gj < sum_f; ++q) {
          if (dp_wins(fp_, gp_, j, q)) return true;
        }
        return false;
      }
      case QMode::Kind::fixed:
        return dp_wins(fp_, gp_, j, inst_.qmode.q);
      case QMode::Kind::range: {
        if (inst_.qmode.q_max && *inst_.qmode.q_max < inst_.qmode.q_min) {
          return false;
        }
        bool fz = true, gz = true;
        for (int e = 0; e <= j; ++e) {
          if (fp_[e] != 0) fz = false;
          if (gp_[e] != 0) gz = false;
        }
        if (fz) return false;
        if (gz) return true;
        const long long q_min = inst_.qmode.q_min;
        const std::optional<long> q_max = inst_.qmode.q_max;
        long long sum_f = 0, sum_g = 0;
        for (int e = 0; e <= j; ++e) {
          sum_f += fp_[e];
          sum_g += gp_[e];
        }
        if (fp_[j] > 0) {
          const long long threshold = sum_g / fp_[j] + 1;
          if (threshold <= q_min) return true;
          if (!q_max || threshold <= *q_max) return true;
          for (long long q = q_min; q <= *q_max; ++q) {
            if (dp_wins(fp_, gp_, j, q)) return true;
          }
          return false;
        }
        const long long threshold = sum_f / gp_[j] + 1;
        for (long long q = q_min; q < threshold; ++q) {
          if (q_max && q > *q_max) break;
          if (dp_wins(fp_, gp_, j, q)) return true;
        }
        return false;
      }
    }
    return false;
  }

  [[nodiscard]] bool compatible(std::uint64_t a, std::uint64_t b) const {
    return std::popcount(a ^ b) >= inst_.d;
  }

  // candidate sets are bitsets over vertex indices so that intersecting with
  // a neighborhood is a word-parallel AND instead of a popcount scan
  using Bits = std::vector<std::uint64_t>;

  static bool test_bit(const Bits& b, size_t i) {
    return (b[i >> 6] >> (i & 63)) & 1u;
  }

  // number of set bits in [lo, hi), stopping once `limit` is reached
  static long popcount_range(const Bits& b, size_t lo, size_t hi, long limit) {
    long cnt = 0;
    size_t wi = lo >> 6;
    const size_t wend = (hi + 63) >> 6;
    for (; wi < wend && cnt < limit; ++wi) {
      std::uint64_t word = b[wi];
      const size_t base = wi << 6;
      if (base < lo) word &= ~std::uint64_t{0} << (lo - base);
      if (base + 64 > hi) {
        word &= hi - base == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << (hi - base)) - 1;
      }
      cnt += std::popcount(word);
    }
    return std::min(cnt, limit);
  }

  // adjacency rows are built on first use; easy instances touch only a few
  const Bits& adj_row(size_t i) {
    Bits& row = adj_[i];
    if (row.empty()) {
      row.assign(words_, 0);
      const std::uint64_t vi = inst_.vertices[i];
      for (size_t j = 0; j < nv_; ++j) {
        if (compatible(vi, inst_.vertices[j])) {
          row[j >> 6] |= std::uint64_t{1} << (j & 63);
        }
      }
    }
    return row;
  }

  // Algorithm 1 on a candidate bitset; vertices are sorted by nonincreasing
  // weight, so each run of equal exponents is added in one grouped step
  void extend_bound(const DP& wsol, size_t sol_size, const Bits& cands,
                    int cap, DP& out) {
    out = wsol;
    long need = cap - static_cast<long>(sol_size);
    for (const auto& g : groups_) {
      if (need <= 0) break;
      if (g.e < 0) {  // not a unit monomial: fall back to one-by-one addition
        for (size_t j = g.begin; j < g.end && need > 0; ++j) {
          if (test_bit(cands, j)) {
            const DP& wb = wbar_dp_[j];
            for (size_t t = 0; t < ne_; ++t) out[t] += wb[t];
            --need;
          }
        }
        continue;
      }
      const long take = popcount_range(cands, g.begin, g.end, need);
      if (take > 0) {
        out[static_cast<size_t>(g.e)] += static_cast<std::int32_t>(take);
        need -= take;
      }
    }
  }

  bool should_stop() {
    if (aborted_) return true;
    if ((++tick_ & 0x3ff) == 0) {
      if (opts_.cancel && opts_.cancel->load(std::memory_order_relaxed)) {
        aborted_ = true;
      } else if (opts_.budget_seconds > 0) {
        auto now = std::chrono::steady_clock::now();
        if (std::chrono::duration<double>(now - budget_start_).count() >
            opts_.budget_seconds) {
          aborted_ = true;
        }
      }
    }
    return aborted_;
  }

  void new_record(const std::vector<int>& sol, const DP& wsol,
                  const Bits& cands) {
    ++stats_.newrecord_calls;
    DP& what = scr_[sol.size()].what;
    extend_bound(wsol, sol.size(), cands, inst_.ub, what);

    auto better_than_all = [&](const std::vector<RecDP>& list, const DP& mine,
                               auto key) {
      for (const auto& u : list) {
        if (!isb(mine, key(u))) return false;
      }
      return true;
    };
    auto sweep = [&](std::vector<RecDP>& list, auto key) {
      // drop every entry that is nowhere strictly better than some other
      for (size_t i = 0; i < list.size();) {
        bool dominated = false;
        for (size_t j = 0; j < list.size() && !dominated; ++j) {
          if (i != j && !isb(key(list[i]), key(list[j]))) dominated = true;
        }
        if (dominated) {
          list.erase(list.begin() + static_cast<long>(i));
        } else {
          ++i;
        }
      }
    };
    auto weight_key = [](const RecDP& r) -> const DP& { return r.w; };
    auto hat_key = [](const RecDP& r) -> const DP& { return r.what; };
    const bool ins_front = better_than_all(front_, wsol, weight_key);
    const bool ins_hat = better_than_all(hat_front_, what, hat_key);
    if (!ins_front && !ins_hat) return;

    RecDP rec;
    rec.rec.members.reserve(sol.size());
    for (int i : sol) rec.rec.members.push_back(inst_.vertices[i]);
    std::sort(rec.rec.members.begin(), rec.rec.members.end());
    rec.rec.weight = to_qp(wsol);
    rec.rec.ub_weight = to_qp(what);
    rec.w = wsol;
    rec.what = what;

    if (ins_front) {
      front_.push_back(rec);
      sweep(front_, weight_key);
      ++front_version_;
    }
    if (ins_hat) {
      hat_front_.push_back(std::move(rec));
      sweep(hat_front_, hat_key);
      ++front_version_;
    }
  }

  void dive(std::vector<int>& sol, const DP& wsol, const Bits& cands) {
    ++stats_.dive_calls;
    if (should_stop()) return;
    new_record(sol, wsol, cands);
    const size_t l = sol.empty() ? 0 : static_cast<size_t>(sol.back()) + 1;
    if (l >= nv_) return;
    if (sol.size() >= static_cast<size_t>(inst_.max_dive)) return;
    const size_t depth = sol.size();
    Scratch& scr = scr_[depth];
    // Candidates are sorted by descending weight exponent, and almost all
    // weights are single monomials, so the screening outcome below is shared
    // by every candidate with the same exponent as long as the fronts have
    // not changed since it was computed.  Cache it per exponent.
    int cache_e = -1;
    std::uint64_t cache_ver = front_version_ + 1;  // force a miss first time
    bool cached_weak = false, cached_weak_hat = false;
    for (size_t wi = l >> 6; wi < words_; ++wi) {
      std::uint64_t word = cands[wi];
      if (wi == (l >> 6) && (l & 63) != 0) word &= ~std::uint64_t{0} << (l & 63);
      while (word != 0) {
        const size_t idx = (wi << 6) + static_cast<size_t>(std::countr_zero(word));
        word &= word - 1;
        if (should_stop()) return;
        const int e = expo_[idx];
        bool weak, weak_hat;
        if (e >= 0 && e == cache_e && cache_ver == front_version_) {
          weak = cached_weak;
          weak_hat = cached_weak_hat;
        } else {
          const DP& wb = wbar_dp_[idx];
          const std::int32_t m =
              static_cast<std::int32_t>(inst_.max_dive) -
              static_cast<std::int32_t>(depth);
          const std::int32_t mh = static_cast<std::int32_t>(inst_.ub) -
                                  static_cast<std::int32_t>(depth);
          for (size_t t = 0; t < ne_; ++t) {
            scr.f[t] = wsol[t] + m * wb[t];
            scr.fhat[t] = wsol[t] + mh * wb[t];
          }
          weak = false;
          weak_hat = false;
          for (const auto& u : front_) {
            if (!isb(scr.f, u.w)) {
              weak = true;
              break;
            }
          }
          for (const auto& u : hat_front_) {
            if (!isb(scr.fhat, u.what)) {
              weak_hat = true;
              break;
            }
          }
          if (e >= 0) {
            cache_e = e;
            cache_ver = front_version_;
            cached_weak = weak;
            cached_weak_hat = weak_hat;
          }
        }
        if (weak && weak_hat) {
          // The published routine abandons the whole loop here instead of
          // skipping to the next candidate; a `continue` would also be sound
          // (the front-coverage proof only needs the weaker cut), but we keep
          // the behavior exactly as specified.
          return;
        }
        Bits& child = child_buf_[depth];
        const Bits& row = adj_row(idx);
        for (size_t t = 0; t < words_; ++t) child[t] = cands[t] & row[t];
        DP& wchild = scr.wchild;
        const DP& wv = w_dp_[idx];
        for (size_t t = 0; t < ne_; ++t) wchild[t] = wsol[t] + wv[t];
        DP& fprime = scr.fprime;
        extend_bound(wchild, depth + 1, child, inst_.max_dive, fprime);
        const bool same_bound = inst_.ub == inst_.max_dive;
        DP& fhat_prime = same_bound ? fprime : scr.fhatprime;
        if (!same_bound) {
          extend_bound(wchild, depth + 1, child, inst_.ub, fhat_prime);
        }
        bool strong = true, strong_hat = true;
        for (const auto& u : front_) {
          if (!isb(fprime, u.w)) {
            strong = false;
            break;
          }
        }
        for (const auto& u : hat_front_) {
          if (!isb(fhat_prime, u.what)) {
            strong_hat = false;
            break;
          }
        }
        if (strong || strong_hat) {
          sol.push_back(static_cast<int>(idx));
          dive(sol, wchild, child);
          sol.pop_back();
          if (aborted_) return;
        }
      }
    }
  }

  void seed_clique(const std::vector<std::uint64_t>& members) {
    std::vector<int> sol;
    for (std::uint64_t m : members) {
      auto it = std::find(inst_.vertices.begin(), inst_.vertices.end(), m);
      if (it == inst_.vertices.end()) {
        throw std::domain_error("seed clique member is not a vertex");
      }
      sol.push_back(static_cast<int>(it - inst_.vertices.begin()));
    }
    std::sort(sol.begin(), sol.end());
    DP wsol(ne_, 0);
    for (size_t i = 0; i < sol.size(); ++i) {
      const DP& wv = w_dp_[sol[i]];
      for (size_t t = 0; t < ne_; ++t) wsol[t] += wv[t];
      for (size_t j = i + 1; j < sol.size(); ++j) {
        if (!compatible(inst_.vertices[sol[i]], inst_.vertices[sol[j]])) {
          throw std::domain_error("seed members are not a clique");
        }
      }
    }
    Bits cands(words_, ~std::uint64_t{0});
    trim_tail(cands);
    for (int s : sol) {
      const Bits& row = adj_row(static_cast<size_t>(s));
      for (size_t t = 0; t < words_; ++t) cands[t] &= row[t];
    }
    new_record(sol, wsol, cands);
  }

  // clear the unused high bits of the last word
  void trim_tail(Bits& b) const {
    const size_t rem = nv_ & 63;
    if (rem != 0 && !b.empty()) b.back() &= (std::uint64_t{1} << rem) - 1;
  }

  struct Scratch {
    DP f, fhat, wchild, fprime, fhatprime;
    DP what;
    Scratch(DP a, DP b, DP c, DP d, DP e)
        : f(std::move(a)),
          fhat(std::move(b)),
          wchild(std::move(c)),
          fprime(std::move(d)),
          fhatprime(std::move(e)),
          what(f.size(), 0) {}
  };

  const Instance& inst_;
  const SolveOptions& opts_;
  std::vector<RecDP> front_;
  std::vector<RecDP> hat_front_;
  SearchStats stats_;
  size_t nv_ = 0;
  size_t words_ = 0;
  size_t ne_ = 1;
  std::vector<int> expo_;
  std::vector<DP> w_dp_;
  std::vector<DP> wbar_dp_;
  struct Group {
    size_t begin, end;
    int e;
  };
  std::vector<Group> groups_;
  std::vector<Bits> adj_;
  std::vector<Bits> child_buf_;
  std::vector<Scratch> scr_;
  DP fp_, gp_;
  std::uint64_t front_version_ = 0;
  bool aborted_ = false;
  std::uint64_t tick_ = 0;
  std::chrono::steady_clock::time_point budget_start_ =
      std::chrono::steady_clock::now();
};

}  // namespace

QPolynomial ub_extend(const Instance& inst,
                      const std::vector<std::uint64_t>& clique, int cap) {
  QPolynomial f;
  std::vector<char> in_clique(inst.vertices.size(), 0);
  for (std::uint64_t m : clique) {
    auto it = std::find(inst.vertices.begin(), inst.vertices.end(), m);
    if (it == inst.vertices.end()) {
      throw std::domain_error("clique member is not a vertex");
    }
    size_t idx = static_cast<size_t>(it - inst.vertices.begin());
    in_clique[idx] = 1;
    f += inst.w[idx];
  }
  for (std::uint64_t a : clique) {
    for (std::uint64_t b : clique) {
      if (a != b && std::popcount(a ^ b) < inst.d) {
        throw std::domain_error("input is not a clique");
      }
    }
  }
  size_t taken = clique.size();
  for (size_t i = 0; i < inst.vertices.size(); ++i) {
    if (taken >= static_cast<size_t>(cap)) break;
    if (in_clique[i]) continue;
    bool ok = true;
    for (std::uint64_t m : clique) {
      if (std::popcount(m ^ inst.vertices[i]) < inst.d) {
        ok = false;
        break;
      }
    }
    if (ok) {
      f += inst.wbar[i];
      ++taken;
    }
  }
  return f;
}

ParetoFront solve(const Instance& inst, const SolveOptions& opts) {
  Solver solver(inst, opts);
  return solver.run();
}

ParetoFront solve_fixed_q(Instance inst, long q, const SolveOptions& opts) {
  if (q < 2) throw std::domain_error("q must be >= 2");
  inst.qmode = QMode::fixed(q);
  return solve(inst, opts);
}

ParetoFront staged_solve(Instance inst, const ParetoFront* seed,
                         const std::vector<int>& ub_schedule) {
  if (ub_schedule.empty()) throw std::domain_error("empty ub schedule");
  for (size_t i = 1; i < ub_schedule.size(); ++i) {
    if (ub_schedule[i] < ub_schedule[i - 1]) {
      throw std::domain_error("ub schedule must be nondecreasing");
    }
  }
  if (ub_schedule.back() != inst.ub) {
    throw std::domain_error("last schedule entry must equal the true ub");
  }
  ParetoFront carry;
  const ParetoFront* current_seed = seed;
  int true_max_dive = inst.max_dive;
  ParetoFront result;
  for (size_t i = 0; i < ub_schedule.size(); ++i) {
    inst.ub = ub_schedule[i];
    inst.max_dive = std::min(true_max_dive, inst.ub);
    SolveOptions opts;
    opts.seed = current_seed;
    result = solve(inst, opts);
    carry = result;
    current_seed = &carry;
  }
  return result;
}

ParetoFront brute_force_front(const Instance& inst) {
  size_t nv = inst.vertices.size();
  if (nv > 300 || inst.max_dive > 16) {
    throw std::domain_error("brute_force_front guard rails: C(n,k) <= 300 and max_dive <= 16");
  }
  auto isb_mode = [&](const QPolynomial& f, const QPolynomial& g) {
    switch (inst.qmode.kind) {
      case QMode::Kind::all:
        return is_strictly_better(f, g);
      case QMode::Kind::fixed:
        return cmp_at(f, g, inst.qmode.q) == Ordering::greater;
      case QMode::Kind::range:
        return restrict_better(f, g, inst.qmode.q_min, inst.qmode.q_max);
    }
    return false;
  };

  std::vector<CliqueRecord> front;
  std::set<std::vector<std::pair<int, mpz_class>>> seen;
  auto record = [&](const std::vector<int>& sol, const QPolynomial& wsol) {
    if (!seen.insert(wsol.terms()).second) return;
    bool better = true;
    for (const auto& u : front) {
      if (!isb_mode(wsol, u.weight)) {
        better = false;
        break;
      }
    }
    if (!better) return;
    CliqueRecord rec;
    for (int i : sol) rec.members.push_back(inst.vertices[i]);
    std::sort(rec.members.begin(), rec.members.end());
    rec.weight = wsol;
    rec.ub_weight = wsol;
    front.push_back(rec);
    for (size_t i = 0; i < front.size();) {
      bool dominated = false;
      for (size_t j = 0; j < front.size() && !dominated; ++j) {
        if (i != j && !isb_mode(front[i].weight, front[j].weight)) {
          dominated = true;
        }
      }
      if (dominated) {
        front.erase(front.begin() + static_cast<long>(i));
      } else {
        ++i;
      }
    }
  };

  std::vector<int> sol;
  std::function<void(int, const QPolynomial&)> rec_enum =
      [&](int start, const QPolynomial& wsol) {
        record(sol, wsol);
        if (sol.size() >= static_cast<size_t>(inst.max_dive)) return;
        for (int i = start; i < static_cast<int>(nv); ++i) {
          bool ok = true;
          for (int s : sol) {
            if (std::popcount(inst.vertices[s] ^ inst.vertices[i]) < inst.d) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          sol.push_back(i);
          rec_enum(i + 1, wsol + inst.w[i]);
          sol.pop_back();
        }
      };
  rec_enum(0, QPolynomial{});

  ParetoFront out;
  out.cliques = front;
  out.hat_cliques = front;
  out.stats.complete = true;
  return out;
}

}  // namespace mlc
