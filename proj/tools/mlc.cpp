// command line front end for the weighted-clique bound machinery
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mlc/corpus.hpp"
#include "mlc/diagrams.hpp"
#include "mlc/ilpgen.hpp"
#include "mlc/qpoly.hpp"
#include "mlc/search.hpp"
#include "mlc/spreads.hpp"
#include "mlc/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitTruncated = 3;
constexpr int kExitVerifyFailed = 4;

using nlohmann::json;

struct QSpec {
  enum class Kind { all, fixed, range } kind = Kind::all;
  long lo = 2;
  std::optional<long> hi;
};

QSpec parse_qspec(const std::string& s) {
  QSpec q;
  if (s == "all") return q;
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    q.kind = QSpec::Kind::fixed;
    q.lo = std::stol(s);
  } else {
    q.kind = QSpec::Kind::range;
    q.lo = std::stol(s.substr(0, dots));
    const std::string tail = s.substr(dots + 2);
    if (!tail.empty()) q.hi = std::stol(tail);
  }
  if (q.lo < 2 || (q.hi && *q.hi < q.lo))
    throw std::invalid_argument("q values must satisfy 2 <= lo <= hi");
  return q;
}

json coeff_map(const mlc::QPolynomial& p) {
  json m = json::object();
  for (const auto& [e, c] : p.terms()) m[std::to_string(e)] = c.get_str();
  return m;
}

json front_json(const mlc::Instance& inst, const mlc::ParetoFront& front,
                const std::string& q_label, std::optional<long> eval_q,
                const std::string& valid_q) {
  json arr = json::array();
  for (const auto& rec : front.cliques) {
    json f;
    f["q"] = q_label;
    f["poly"] = render(rec.weight);
    f["coeffs"] = coeff_map(rec.weight);
    if (eval_q) f["value"] = rec.weight.eval(*eval_q).get_str();
    f["clique"] = rec.members;
    json bitstrings = json::array();
    for (const auto v : rec.members)
      bitstrings.push_back(mlc::decode(v, inst.n).to_string());
    f["clique_bits"] = bitstrings;
    f["valid_q"] = valid_q;
    f["kind"] = front.stats.complete ? "exact" : "lower-bound-only";
    arr.push_back(std::move(f));
  }
  return arr;
}

struct SolveArgs {
  int n = 0, d = 0, k = 0;
  std::string regime = "upper";
  std::string q = "all";
  int ub = -1;
  int max_dive = -1;
  int lambda = 4;
  double budget = 0.0;
  std::string seed_front;
  std::string out;
  std::string format = "json";
};

mlc::ParetoFront load_seed(const std::string& path, const mlc::Instance& inst) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open seed file " + path);
  json doc = json::parse(in);
  mlc::ParetoFront seed;
  for (const auto& f : doc.at("fronts")) {
    mlc::CliqueRecord rec;
    rec.members = f.at("clique").get<std::vector<std::uint64_t>>();
    seed.cliques.push_back(std::move(rec));
  }
  (void)inst;
  return seed;
}

void emit_output(const json& doc, const std::string& out,
                 const std::string& format) {
  std::ostringstream text;
  if (format == "json") {
    text << doc.dump(1) << "\n";
  } else {
    // aligned text table over the same data
    text << "instance  (" << doc.at("n").get<int>() << ","
         << doc.at("d").get<int>() << "," << doc.at("k").get<int>() << ")  "
         << "regime " << doc.at("regime").get<std::string>() << "  q "
         << doc.at("q_mode").get<std::string>() << "\n";
    for (const auto& f : doc.at("fronts")) {
      text << "  [" << f.at("q").get<std::string>() << "] "
           << f.at("poly").get<std::string>();
      if (f.contains("value"))
        text << " = " << f.at("value").get<std::string>();
      text << "  (" << f.at("kind").get<std::string>() << ", q "
           << f.at("valid_q").get<std::string>() << ")\n    clique {";
      bool first = true;
      for (const auto& m : f.at("clique")) {
        if (!first) text << ",";
        first = false;
        text << m.get<std::uint64_t>();
      }
      text << "}\n";
    }
    const auto& st = doc.at("stats");
    text << "  dives " << st.at("dive_calls").get<std::uint64_t>()
         << "  records " << st.at("newrecord_calls").get<std::uint64_t>()
         << "  seconds " << st.at("seconds").get<double>() << "  complete "
         << (st.at("complete").get<bool>() ? "yes" : "no") << "\n";
  }
  if (out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open output file " + out);
    os << text.str();
  }
}

int run_solve(const SolveArgs& a) {
  const mlc::Regime regime = mlc::parse_regime(a.regime);
  int ub = a.ub, max_dive = a.max_dive;
  if (ub < 0 || max_dive < 0) {
    if (const mlc::CorpusEntry* e = mlc::find_entry(a.n, a.d, a.k)) {
      if (ub < 0) ub = e->ub;
      if (max_dive < 0) max_dive = e->max_dive;
    } else if (a.d == 2 * a.k) {
      if (ub < 0) ub = a.n / a.k;
      if (max_dive < 0) max_dive = ub;
    } else {
      std::cerr << "mlc: (" << a.n << "," << a.d << "," << a.k
                << ") is not tabulated; pass explicit --ub and --max-dive\n";
      return kExitUsage;
    }
  }
  if (max_dive < 0) max_dive = ub;
  const QSpec qspec = parse_qspec(a.q);

  // one search per q label; "all" is a single symbolic run, a fixed q is a
  // single evaluated run, and a range splits into fixed runs for q <= lambda
  // plus a tail run assuming q > lambda
  struct Piece {
    std::string label;
    mlc::QMode mode;
    std::optional<long> eval_q;
  };
  std::vector<Piece> pieces;
  if (qspec.kind == QSpec::Kind::all) {
    pieces.push_back({"all", mlc::QMode::all(), std::nullopt});
  } else if (qspec.kind == QSpec::Kind::fixed) {
    pieces.push_back({"q=" + std::to_string(qspec.lo),
                      mlc::QMode::fixed(qspec.lo), qspec.lo});
  } else {
    const long split = std::max<long>(a.lambda, qspec.lo - 1);
    for (long q = qspec.lo; q <= split && (!qspec.hi || q <= *qspec.hi); ++q)
      pieces.push_back({"q=" + std::to_string(q), mlc::QMode::fixed(q), q});
    if (!qspec.hi || *qspec.hi > split) {
      const long lo = std::max(qspec.lo, split + 1);
      std::string label = qspec.hi
                              ? "q=" + std::to_string(lo) + ".." +
                                    std::to_string(*qspec.hi)
                              : "q>=" + std::to_string(lo);
      pieces.push_back({label, mlc::QMode::range(lo, qspec.hi), std::nullopt});
    }
  }

  json doc;
  doc["n"] = a.n;
  doc["d"] = a.d;
  doc["k"] = a.k;
  doc["regime"] = mlc::regime_name(regime);
  doc["q_mode"] = a.q;
  doc["ub"] = ub;
  doc["max_dive"] = max_dive;
  json fronts = json::array();
  mlc::SearchStats total;
  bool truncated = false;
  for (const auto& piece : pieces) {
    mlc::Instance inst =
        mlc::Instance::build(a.n, a.d, a.k, regime, ub, max_dive, piece.mode);
    mlc::SolveOptions opts;
    opts.budget_seconds = a.budget;
    mlc::ParetoFront seed;
    if (!a.seed_front.empty()) {
      seed = load_seed(a.seed_front, inst);
      opts.seed = &seed;
    }
    const mlc::ParetoFront front = mlc::solve(inst, opts);
    std::string valid_q = inst.weight_validity.to_string();
    for (auto& f :
         front_json(inst, front, piece.label, piece.eval_q, valid_q))
      fronts.push_back(std::move(f));
    total.dive_calls += front.stats.dive_calls;
    total.newrecord_calls += front.stats.newrecord_calls;
    total.seconds += front.stats.seconds;
    truncated = truncated || !front.stats.complete;
  }
  doc["fronts"] = std::move(fronts);
  doc["stats"] = {{"dive_calls", total.dive_calls},
                  {"newrecord_calls", total.newrecord_calls},
                  {"seconds", total.seconds},
                  {"complete", !truncated}};
  emit_output(doc, a.out, a.format);
  return truncated ? kExitTruncated : kExitOk;
}

mlc::PivotVector parse_pivot(const std::string& text, std::optional<int> n) {
  const bool binary =
      text.size() > 1 &&
      std::all_of(text.begin(), text.end(),
                  [](char c) { return c == '0' || c == '1'; });
  if (binary && !n) n = static_cast<int>(text.size());
  if (binary && static_cast<int>(text.size()) == *n) {
    return mlc::from_bits(text);
  }
  if (!n)
    throw std::invalid_argument("--n is mandatory for integer pivot values");
  return mlc::decode(std::stoull(text), *n);
}

int run_diagram(const std::string& pivot_text, std::optional<int> n,
                std::optional<int> delta, const std::string& out,
                const std::string& format) {
  const mlc::PivotVector v = parse_pivot(pivot_text, n);
  const mlc::FerrersDiagram f = mlc::to_diagram(v);
  json doc;
  doc["pivot"] = encode(v);
  doc["bits"] = v.to_string();
  doc["n"] = v.n;
  doc["rows"] = f.rows();
  doc["cols"] = f.columns();
  doc["dots"] = f.total_dots();
  if (delta) {
    doc["delta"] = *delta;
    json nus = json::array();
    for (int i = 0; i < *delta; ++i) nus.push_back(mlc::nu(f, *delta, i));
    doc["nu"] = std::move(nus);
    doc["exponent"] = mlc::ef_upper_exponent(f, *delta);
    const mlc::LowerBoundWitness w = mlc::lower_dimension(f, *delta);
    doc["witness"] = {{"dimension", w.dimension},
                      {"theorem", w.theorem},
                      {"optimal", w.optimal},
                      {"valid_q", w.q_validity.to_string()},
                      {"params", w.params}};
  }
  if (format == "json") {
    emit_output(doc, out, "json");
  } else {
    std::ostringstream text;
    text << "pivot " << encode(v) << " = " << v.to_string() << "\n";
    auto list = [](const std::vector<int>& xs) {
      std::string s = "[";
      for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + std::to_string(xs[i]);
      return s + "]";
    };
    text << "rows " << list(f.rows()) << "  cols " << list(f.columns())
         << "  dots " << f.total_dots() << "\n";
    if (delta) {
      text << "nu " << list(doc.at("nu").get<std::vector<int>>())
           << "  exponent " << doc.at("exponent").get<int>() << "\n"
           << "witness dim " << doc.at("witness").at("dimension").get<int>()
           << " via " << doc.at("witness").at("theorem").get<std::string>()
           << " (q " << doc.at("witness").at("valid_q").get<std::string>()
           << ")\n";
    }
    if (out.empty()) {
      std::cout << text.str();
    } else {
      std::ofstream os(out);
      os << text.str();
    }
  }
  return kExitOk;
}

int run_spread(int n, int k, const std::string& out,
               const std::string& format) {
  const mlc::SpreadParams p{n, k};
  const mlc::QPolynomial poly = mlc::spread_polynomial(p);
  json doc;
  doc["n"] = n;
  doc["k"] = k;
  doc["d"] = 2 * k;
  doc["poly"] = render(poly);
  doc["coeffs"] = coeff_map(poly);
  json clique = json::array();
  for (const auto& v : mlc::spread_clique(p)) clique.push_back(mlc::encode(v));
  doc["clique"] = std::move(clique);
  if (format == "json") {
    emit_output(doc, out, "json");
  } else {
    std::ostringstream text;
    text << "spread (" << n << "," << 2 * k << "," << k
         << "): " << render(poly) << "\n";
    if (out.empty())
      std::cout << text.str();
    else
      std::ofstream(out) << text.str();
  }
  return kExitOk;
}

int run_histogram(int n, int d, int k, const std::string& regime,
                  const std::string& out, const std::string& format) {
  const auto hist = mlc::weight_histogram(n, d, k, mlc::parse_regime(regime));
  json doc;
  doc["n"] = n;
  doc["d"] = d;
  doc["k"] = k;
  doc["regime"] = regime;
  json m = json::object();
  long long total = 0;
  for (const auto& [e, c] : hist) {
    m[std::to_string(e)] = c;
    total += c;
  }
  doc["m"] = std::move(m);
  doc["total"] = total;
  if (format == "json") {
    emit_output(doc, out, "json");
  } else {
    std::ostringstream text;
    for (auto it = hist.rbegin(); it != hist.rend(); ++it)
      text << "m_" << it->first << " = " << it->second << "\n";
    text << "total = " << total << "\n";
    if (out.empty())
      std::cout << text.str();
    else
      std::ofstream(out) << text.str();
  }
  return kExitOk;
}

int run_ilp(int n, int d, int k, const std::string& variant,
            std::optional<long> q, std::optional<long long> a1_bound,
            bool literal, const std::string& out) {
  mlc::IlpOptions opts;
  opts.variant = mlc::parse_variant(variant);
  opts.q = q;
  opts.a1_bound = a1_bound;
  opts.literal_edges = literal;
  if (!opts.a1_bound && opts.variant == mlc::IlpVariant::counting)
    if (const mlc::CorpusEntry* e = mlc::find_entry(n, d, k))
      opts.a1_bound = e->ub;
  const mlc::IlpModel model = mlc::emit(n, d, k, opts);
  if (model.overflow_warning)
    std::cerr << "mlc: warning: objective coefficients exceed 2^53; consume "
                 "the LP text with an exact solver\n";
  if (out.empty()) {
    std::cout << model.to_lp_text();
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open output file " + out);
    os << model.to_lp_text();
  }
  return kExitOk;
}

int run_verify(int tier, const std::string& filter, const std::string& out,
               const std::string& format) {
  mlc::VerifyFilter vf;
  std::optional<long> q_filter;
  std::stringstream ss(filter);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("filter items look like n=15,d=10,k=6");
    const std::string key = part.substr(0, eq);
    const int value = std::stoi(part.substr(eq + 1));
    if (key == "n")
      vf.n = value;
    else if (key == "d")
      vf.d = value;
    else if (key == "k")
      vf.k = value;
    else if (key == "q")
      q_filter = value;  // accepted for interface compatibility
    else
      throw std::invalid_argument("unknown filter key " + key);
  }
  (void)q_filter;
  const mlc::VerifyReport rep = mlc::verify_corpus(tier, vf);
  if (format == "json") {
    json doc;
    doc["tier"] = tier;
    doc["passed"] = rep.passed;
    doc["failed"] = rep.failed;
    doc["skipped"] = rep.skipped;
    json items = json::array();
    for (const auto& it : rep.items)
      items.push_back({{"name", it.name},
                       {"status", it.status},
                       {"detail", it.detail}});
    doc["items"] = std::move(items);
    emit_output(doc, out, "json");
  } else {
    std::ostringstream text;
    for (const auto& it : rep.items) {
      if (it.status == "pass") continue;
      text << it.status << "  " << it.name
           << (it.detail.empty() ? "" : "  (" + it.detail + ")") << "\n";
    }
    text << rep.passed << " passed, " << rep.failed << " failed, "
         << rep.skipped << " skipped\n";
    if (out.empty())
      std::cout << text.str();
    else
      std::ofstream(out) << text.str();
  }
  return rep.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds for constant-dimension codes via weighted cliques"};
  app.require_subcommand(1);

  SolveArgs sa;
  CLI::App* solve = app.add_subcommand("solve", "run the Pareto-front search");
  solve->add_option("n", sa.n, "ambient length")->required();
  solve->add_option("d", sa.d, "minimum subspace distance (even)")->required();
  solve->add_option("k", sa.k, "codeword dimension")->required();
  solve->add_option("--regime", sa.regime, "upper|lower|spread");
  solve->add_option("--q", sa.q, "all | Q | Qmin..Qmax | Qmin..");
  solve->add_option("--ub", sa.ub, "clique size cap");
  solve->add_option("--max-dive", sa.max_dive, "exact-front depth cap");
  solve->add_option("--lambda", sa.lambda, "range mode split point");
  solve->add_option("--budget", sa.budget, "wall clock budget in seconds");
  solve->add_option("--seed-front", sa.seed_front,
                    "warm start from a previous result JSON");
  solve->add_option("--out", sa.out, "output path (default stdout)");
  solve->add_option("--format", sa.format, "json|table");

  std::string dg_pivot;
  std::optional<int> dg_n, dg_delta;
  std::string dg_out, dg_format = "table";
  CLI::App* diagram =
      app.add_subcommand("diagram", "inspect the diagram of a pivot vector");
  diagram->add_option("--pivot", dg_pivot, "integer or binary string")
      ->required();
  diagram->add_option("--n", dg_n, "vector length");
  diagram->add_option("--delta", dg_delta, "rank distance");
  diagram->add_option("--out", dg_out, "output path");
  diagram->add_option("--format", dg_format, "json|table");

  int sp_n = 0, sp_k = 0;
  std::string sp_out, sp_format = "table";
  CLI::App* spread =
      app.add_subcommand("spread", "closed form for the d = 2k case");
  spread->add_option("n", sp_n, "ambient length")->required();
  spread->add_option("k", sp_k, "codeword dimension")->required();
  spread->add_option("--out", sp_out, "output path");
  spread->add_option("--format", sp_format, "json|table");

  int hg_n = 0, hg_d = 0, hg_k = 0;
  std::string hg_regime = "upper", hg_out, hg_format = "table";
  CLI::App* histogram =
      app.add_subcommand("histogram", "weight exponent counts m_i");
  histogram->add_option("n", hg_n)->required();
  histogram->add_option("d", hg_d)->required();
  histogram->add_option("k", hg_k)->required();
  histogram->add_option("--regime", hg_regime, "upper|lower|spread");
  histogram->add_option("--out", hg_out, "output path");
  histogram->add_option("--format", hg_format, "json|table");

  int ilp_n = 0, ilp_d = 0, ilp_k = 0;
  std::string ilp_variant = "edge", ilp_out;
  std::optional<long> ilp_q;
  std::optional<long long> ilp_a1;
  bool ilp_literal = false;
  CLI::App* ilp = app.add_subcommand("ilp", "emit an LP-format model");
  ilp->add_option("n", ilp_n)->required();
  ilp->add_option("d", ilp_d)->required();
  ilp->add_option("k", ilp_k)->required();
  ilp->add_option("--variant", ilp_variant,
                  "edge|cover|weighted-fixed-q|counting");
  ilp->add_option("--q", ilp_q, "field size (weighted-fixed-q)");
  ilp->add_option("--a1-bound", ilp_a1, "cardinality cap (counting)");
  ilp->add_flag("--literal", ilp_literal,
                "constrain adjacent pairs exactly as printed in the source "
                "formulation (models independent set)");
  ilp->add_option("--out", ilp_out, "output path");

  int vf_tier = 0;
  std::string vf_filter, vf_out, vf_format = "table";
  CLI::App* verify =
      app.add_subcommand("verify-corpus", "audit the bundled result corpus");
  verify->alias("verify");
  verify->add_option("--tier", vf_tier, "0 audit, 1 cheap re-solves, 2 all");
  verify->add_option("--filter", vf_filter, "n=..,d=..,k=..");
  verify->add_option("--out", vf_out, "output path");
  verify->add_option("--format", vf_format, "json|table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(sa);
    if (diagram->parsed())
      return run_diagram(dg_pivot, dg_n, dg_delta, dg_out, dg_format);
    if (spread->parsed()) return run_spread(sp_n, sp_k, sp_out, sp_format);
    if (histogram->parsed())
      return run_histogram(hg_n, hg_d, hg_k, hg_regime, hg_out, hg_format);
    if (ilp->parsed())
      return run_ilp(ilp_n, ilp_d, ilp_k, ilp_variant, ilp_q, ilp_a1,
                     ilp_literal, ilp_out);
    if (verify->parsed()) return run_verify(vf_tier, vf_filter, vf_out,
                                            vf_format);
  } catch (const std::exception& e) {
    std::cerr << "mlc: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
