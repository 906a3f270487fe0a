#include "mlc/corpus.hpp"

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mlc/diagrams.hpp"
#include "mlc/search.hpp"
#include "mlc/weights.hpp"

namespace mlc {
namespace detail {
extern const unsigned char corpus_json_data[];
extern const std::size_t corpus_json_size;
}  // namespace detail

namespace {

Corpus parse_corpus() {
  const auto j = nlohmann::json::parse(
      detail::corpus_json_data, detail::corpus_json_data + detail::corpus_json_size);
  Corpus c;
  for (const auto& je : j.at("entries")) {
    CorpusEntry e;
    e.n = je.at("n").get<int>();
    e.d = je.at("d").get<int>();
    e.k = je.at("k").get<int>();
    e.kind = je.at("kind").get<std::string>();
    e.source = je.value("source", std::string{});
    e.ub = je.at("ub").get<int>();
    e.max_dive = je.value("max_dive", e.ub);
    for (const auto& jf : je.at("fronts")) {
      CorpusFront f;
      f.q = jf.value("q", std::string{"all"});
      f.poly = jf.at("poly").get<std::string>();
      f.clique = jf.at("clique").get<std::vector<std::uint64_t>>();
      e.fronts.push_back(std::move(f));
    }
    c.entries.push_back(std::move(e));
  }
  for (const auto& jd : j.at("diagrams")) {
    DiagramEntry d;
    d.pivot = jd.at("pivot").get<std::uint64_t>();
    d.n = jd.at("n").get<int>();
    d.delta = jd.at("delta").get<int>();
    d.rows = jd.at("rows").get<std::vector<int>>();
    d.best_known = jd.at("best_known").get<int>();
    d.optimal = jd.at("optimal").get<int>();
    d.tag = jd.value("tag", std::string{});
    d.source = jd.value("source", std::string{});
    c.diagrams.push_back(std::move(d));
  }
  return c;
}

// parses q labels of the form "all", "q=2", "q>=3"
struct QLabel {
  long q_min = 2;
  long q_max = -1;  // -1: unbounded
};

QLabel parse_qlabel(const std::string& s) {
  if (s == "all") return {};
  if (s.rfind("q>=", 0) == 0) return {std::stol(s.substr(3)), -1};
  if (s.rfind("q=", 0) == 0) {
    const long q = std::stol(s.substr(2));
    return {q, q};
  }
  throw std::invalid_argument("bad q label: " + s);
}

bool entry_matches(const VerifyFilter& f, int n, int d, int k) {
  return (!f.n || *f.n == n) && (!f.d || *f.d == d) && (!f.k || *f.k == k);
}

void add(VerifyReport& r, const std::string& name, bool pass,
         const std::string& detail = {}) {
  r.items.push_back({name, pass ? "pass" : "fail", detail});
  (pass ? r.passed : r.failed)++;
}

void skip(VerifyReport& r, const std::string& name, const std::string& why) {
  r.items.push_back({name, "skip", why});
  r.skipped++;
}

std::string entry_name(const CorpusEntry& e) {
  std::ostringstream os;
  os << "(" << e.n << "," << e.d << "," << e.k << ")";
  return os.str();
}

void verify_entry_audit(VerifyReport& rep, const CorpusEntry& e) {
  const std::string name = entry_name(e);
  const int delta = e.d / 2;
  for (const auto& f : e.fronts) {
    const std::string fname = name + " [" + f.q + "]";
    QPolynomial expected;
    try {
      expected = parse_poly(f.poly);
    } catch (const std::exception& ex) {
      add(rep, fname + " poly parses", false, ex.what());
      continue;
    }
    bool members_ok = true;
    QPolynomial sum;
    std::string why;
    std::vector<PivotVector> vs;
    for (const auto value : f.clique) {
      PivotVector v;
      try {
        v = decode(value, e.n);
      } catch (const std::exception& ex) {
        members_ok = false;
        why = ex.what();
        break;
      }
      if (v.weight() != e.k) {
        members_ok = false;
        why = "member " + std::to_string(value) + " has weight " +
              std::to_string(v.weight());
        break;
      }
      vs.push_back(v);
      sum += upper_weight(v, delta);
    }
    add(rep, fname + " members are weight-" + std::to_string(e.k) + " vectors",
        members_ok, why);
    if (!members_ok) continue;
    bool clique_ok = true;
    for (std::size_t i = 0; i < vs.size() && clique_ok; ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (hamming(vs[i], vs[j]) < e.d) {
          clique_ok = false;
          why = std::to_string(f.clique[i]) + " vs " +
                std::to_string(f.clique[j]) + " at distance " +
                std::to_string(hamming(vs[i], vs[j]));
          break;
        }
    add(rep, fname + " is a clique at distance >= " + std::to_string(e.d),
        clique_ok, why);
    add(rep, fname + " clique weight matches " + f.poly, sum == expected,
        sum == expected ? "" : "clique weight is " + render(sum));
    add(rep, fname + " clique fits ub " + std::to_string(e.ub),
        static_cast<int>(f.clique.size()) <= e.ub);
  }
  // split entries: each front must win somewhere inside its own q label
  if (e.fronts.size() >= 2) {
    bool pareto = true;
    std::string why;
    for (std::size_t i = 0; i < e.fronts.size() && pareto; ++i) {
      const auto fi = parse_poly(e.fronts[i].poly);
      const auto li = parse_qlabel(e.fronts[i].q);
      for (std::size_t j = 0; j < e.fronts.size(); ++j) {
        if (i == j) continue;
        const auto fj = parse_poly(e.fronts[j].poly);
        if (cmp_at(fi, fj, li.q_min) == Ordering::less) {
          pareto = false;
          why = e.fronts[j].poly + " beats " + e.fronts[i].poly + " at q=" +
                std::to_string(li.q_min);
          break;
        }
      }
    }
    add(rep, name + " split fronts each win on their own range", pareto, why);
  }
}

void verify_entry_solve(VerifyReport& rep, const CorpusEntry& e) {
  const std::string name = entry_name(e);
  Instance inst = Instance::build(e.n, e.d, e.k, Regime::upper, e.ub,
                                  e.max_dive, QMode::all());
  const ParetoFront front = solve(inst);
  if (!front.stats.complete) {
    add(rep, name + " re-solve completes", false, "search truncated");
    return;
  }
  std::vector<std::string> got;
  got.reserve(front.cliques.size());
  for (const auto& c : front.cliques) got.push_back(render(c.weight));
  bool all_found = true;
  std::string why;
  for (const auto& f : e.fronts)
    if (std::find(got.begin(), got.end(), render(parse_poly(f.poly))) ==
        got.end()) {
      all_found = false;
      why = f.poly + " missing from computed front {";
      for (const auto& g : got) why += " " + g;
      why += " }";
      break;
    }
  add(rep, name + " re-solve reproduces stored front", all_found, why);
}

void verify_diagram(VerifyReport& rep, const DiagramEntry& d) {
  std::ostringstream os;
  os << "diagram " << d.pivot << " (n=" << d.n << ", delta=" << d.delta << ")";
  const std::string name = os.str();
  FerrersDiagram fd;
  try {
    fd = FerrersDiagram::from_rows(d.rows);
  } catch (const std::exception& ex) {
    add(rep, name + " rows form a diagram", false, ex.what());
    return;
  }
  const FerrersDiagram from_pivot = to_diagram(decode(d.pivot, d.n));
  add(rep, name + " rows match the pivot vector", from_pivot == fd,
      from_pivot == fd ? "" : "pivot decodes to a different diagram");
  const int ef = ef_upper_exponent(fd, d.delta);
  add(rep, name + " dimension cap " + std::to_string(d.optimal),
      ef == d.optimal, ef == d.optimal ? "" : "cap is " + std::to_string(ef));
  const LowerBoundWitness w = lower_dimension(fd, d.delta);
  const bool ge = w.dimension >= d.best_known;
  const bool le = w.dimension <= d.optimal;
  add(rep, name + " construction reaches " + std::to_string(d.best_known),
      ge && le,
      ge && le ? w.theorem
               : "got " + std::to_string(w.dimension) + " via " + w.theorem);
}

}  // namespace

const Corpus& load_corpus() {
  static const Corpus corpus = parse_corpus();
  return corpus;
}

const CorpusEntry* find_entry(int n, int d, int k) {
  for (const auto& e : load_corpus().entries)
    if (e.n == n && e.d == d && e.k == k) return &e;
  return nullptr;
}

VerifyReport verify_corpus(int tier, const VerifyFilter& filter) {
  if (tier < 0 || tier > 2) throw std::invalid_argument("tier must be 0..2");
  const Corpus& c = load_corpus();
  VerifyReport rep;
  for (const auto& e : c.entries) {
    if (!entry_matches(filter, e.n, e.d, e.k)) continue;
    verify_entry_audit(rep, e);
    const bool cheap = e.d >= 10 || e.n <= 14;
    if (tier >= 2 || (tier == 1 && cheap))
      verify_entry_solve(rep, e);
    else if (tier == 1)
      skip(rep, entry_name(e) + " re-solve", "tier 2 only");
  }
  for (const auto& d : c.diagrams) {
    if (filter.k) continue;  // diagrams are not keyed by k
    if (filter.n && *filter.n != d.n) continue;
    if (filter.d && *filter.d != 2 * d.delta) continue;
    verify_diagram(rep, d);
  }
  return rep;
}

long long johnson_bound(int n, int d, int k) {
  if (d % 2 != 0 || d < 2 || k < 1 || k > n)
    throw std::invalid_argument("johnson_bound: need even d and 1 <= k <= n");
  const int delta = d / 2;
  if (k < delta) return 1;  // no two distinct weight-k words are that far apart
  long long b = 1;
  for (int w = delta, m = n - k + delta; w <= k; ++w, ++m) b = (m * b) / w;
  return b;
}

}  // namespace mlc
