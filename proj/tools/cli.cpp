#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hlindex/analysis.hpp"
#include "hlindex/families.hpp"
#include "hlindex/io.hpp"
#include "hlindex/partition.hpp"
#include "hlindex/report.hpp"
#include "hlindex/spectral.hpp"

namespace hlindex::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  int jobs = 1;
  double eps = kEps;
  bool json = false;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Ordered parallel map: results are stored by index, never by completion order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, int jobs, Fn fn) {
  std::vector<T> results(count);
  const int workers = static_cast<int>(std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          results[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

long long parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw UsageError(what + ": expected an integer, got '" + s + "'");
  return v;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) out.push_back(static_cast<int>(parse_int(part, what)));
  return out;
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return read_stream(f);
}

std::optional<Graph> family(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  if (kind == "pg2" && parts.size() == 3) {
    return pg2_incidence(static_cast<int>(parse_int(parts[1], "pg2 p")), static_cast<int>(parse_int(parts[2], "pg2 k")));
  }
  if (kind == "cycpend" && parts.size() == 2) {
    const auto t = parse_int_list(parts[1], "cycpend lengths");
    return cycle_with_pendants(t);
  }
  if (kind == "named" && parts.size() == 2) return named(parts[1]);
  if (kind == "random-cubic" && (parts.size() == 2 || parts.size() == 3)) {
    const auto seed = parts.size() == 3 ? static_cast<std::uint64_t>(parse_int(parts[2], "seed")) : 0;
    return random_cubic(static_cast<int>(parse_int(parts[1], "random-cubic n")), seed);
  }
  return std::nullopt;
}

// An input is "-" (stdin), a file, a family spec (pg2:P:K, cycpend:T1,..,
// named:NAME, random-cubic:N[:SEED]), a graph6 literal, or a bare graph name.
std::vector<Graph> load_inputs(const std::vector<std::string>& specs, std::istream& in) {
  std::vector<Graph> graphs;
  const std::vector<std::string> effective = specs.empty() ? std::vector<std::string>{"-"} : specs;
  for (const auto& spec : effective) {
    std::vector<Graph> got;
    if (spec == "-") {
      got = read_graphs(read_stream(in));
    } else if (std::filesystem::is_regular_file(spec)) {
      got = read_graphs(read_file(spec));
    } else if (auto g = family(spec)) {
      got.push_back(std::move(*g));
    } else {
      try {
        got.push_back(decode_graph6(spec));
      } catch (const FormatError& graph6_error) {
        try {
          got.push_back(named(spec));
        } catch (const std::invalid_argument&) {
          throw UsageError("input '" + spec + "' is not a file, family spec, graph6 string or graph name (" +
                           graph6_error.what() + ")");
        }
      }
    }
    for (auto& g : got) graphs.push_back(std::move(g));
  }
  if (graphs.empty()) throw UsageError("no input graphs");
  return graphs;
}

bool subcubic(const Graph& g) { return g.max_degree() <= 3 && g.is_simple(); }

struct Output {
  Globals globals;
  std::ostream& out;
  std::string command;
  json results = json::array();
  std::vector<std::string> failures;
  std::vector<std::string> lines;

  void fail(const std::string& graph, const std::string& what, double margin) {
    failures.push_back(graph + ": " + what + ": margin " + num(margin));
  }

  int finish(json extra = json::object()) {
    if (globals.json) {
      json doc{{"command", command}, {"ok", failures.empty()}, {"failures", failures}, {"results", results}};
      for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
      out << dump_json(doc);
    } else {
      for (const auto& l : lines) out << l << '\n';
      for (const auto& f : failures) out << "FAIL " << f << '\n';
    }
    return failures.empty() ? kExitOk : kExitFailed;
  }
};

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// ---- per-graph commands ----------------------------------------------------

int cmd_spectrum(Output& o, const std::vector<Graph>& graphs) {
  const auto spectra = parallel_map<Spectrum>(graphs.size(), o.globals.jobs, [&](std::size_t i) { return eigenvalues(graphs[i]); });
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string g6 = encode_graph6(graphs[i]);
    json r = to_json(spectra[i]);
    r["graph6"] = g6;
    o.results.push_back(r);
    o.lines.push_back("# " + g6 + " n=" + std::to_string(graphs[i].order()));
    std::istringstream values(format_spectrum(spectra[i]));
    for (std::string line; std::getline(values, line);) o.lines.push_back(line);
  }
  return o.finish();
}

int cmd_hl(Output& o, const std::vector<Graph>& graphs) {
  const auto hls = parallel_map<HLResult>(graphs.size(), o.globals.jobs, [&](std::size_t i) { return hl_index(graphs[i]); });
  o.lines.push_back("graph6\tn\tH\tL\tlambda_H\tlambda_L\tR");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string g6 = encode_graph6(graphs[i]);
    const auto& h = hls[i];
    json r = to_json(h);
    r["graph6"] = g6;
    r["n"] = graphs[i].order();
    o.results.push_back(r);
    o.lines.push_back(g6 + '\t' + std::to_string(graphs[i].order()) + '\t' + std::to_string(h.H) + '\t' +
                      std::to_string(h.L) + '\t' + num(h.lambda_H) + '\t' + num(h.lambda_L) + '\t' + num(h.R));
  }
  return o.finish();
}

int cmd_bounds(Output& o, const std::vector<Graph>& graphs) {
  const double eps = o.globals.eps;
  const auto reports =
      parallel_map<BoundReport>(graphs.size(), o.globals.jobs, [&](std::size_t i) { return bound_report(graphs[i], eps); });
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string g6 = encode_graph6(graphs[i]);
    const auto& r = reports[i];
    json j = to_json(r);
    j["graph6"] = g6;
    o.results.push_back(j);
    o.lines.push_back("# " + g6 + " n=" + std::to_string(r.n) + " m=" + std::to_string(r.m) + " R=" + num(r.hl.R) +
                      " branch=" + r.branch);
    o.lines.push_back("  trace_sum " + num(r.trace_sum) + "  square_sum " + num(r.square_sum) + "  (2m = " +
                      std::to_string(2 * r.m) + ")");
    for (const auto& q : r.chain) {
      o.lines.push_back("  " + pad(q.name, 64) + " margin " + num(q.margin()) + (q.holds ? "  ok" : "  FAILS"));
      if (!q.holds) o.fail(g6, q.name, q.margin());
    }
    for (const auto& d : r.readings) {
      o.lines.push_back("  reading " + pad(d.name, 17) + " d=" + num(d.d) + "  sqrt(d)=" + num(d.sqrt_d_bound) +
                        (d.sqrt_d_holds ? " holds" : " violated") + "  refined=" + num(d.refined_bound) +
                        (d.refined_degenerate ? " (degenerate)" : "") + (d.refined_holds ? " holds" : " violated"));
    }
    o.lines.push_back("  R <= sqrt(max degree) = " + num(r.sqrt_max_degree) +
                      (r.max_degree_bound_holds ? "  ok" : "  FAILS"));
    if (!r.max_degree_bound_holds) o.fail(g6, "R <= sqrt(max degree)", r.sqrt_max_degree - r.hl.R);
  }
  return o.finish();
}

std::string opt(const std::optional<double>& x) { return x ? num(*x) : "-"; }

int cmd_window(Output& o, const std::vector<Graph>& graphs) {
  const double eps = o.globals.eps;
  const auto reports =
      parallel_map<WindowReport>(graphs.size(), o.globals.jobs, [&](std::size_t i) { return median_window(graphs[i], eps); });
  o.lines.push_back("graph6\tn\tH\tL\tlambda_H-1\tlambda_H+1\tmax_halfwidth\trequired\tok");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string g6 = encode_graph6(graphs[i]);
    const auto& w = reports[i];
    json j = to_json(w);
    j["graph6"] = g6;
    o.results.push_back(j);
    o.lines.push_back(g6 + '\t' + std::to_string(w.n) + '\t' + std::to_string(w.H) + '\t' + std::to_string(w.L) + '\t' +
                      opt(w.lambda_H_minus_1) + '\t' + opt(w.lambda_H_plus_1) + '\t' + std::to_string(w.max_halfwidth) +
                      '\t' + std::to_string(w.required_halfwidth) + '\t' + (w.paper_delta_ok ? "yes" : "no"));
    // The window statement is about subcubic graphs only.
    if (subcubic(graphs[i]) && !w.paper_delta_ok) {
      o.fail(g6, "max_halfwidth >= floor(n/6140)", w.max_halfwidth - w.required_halfwidth);
    }
  }
  return o.finish();
}

int cmd_packing(Output& o, const std::vector<Graph>& graphs, int radius, double threshold) {
  const double eps = o.globals.eps;
  const auto reports = parallel_map<BallPackingReport>(graphs.size(), o.globals.jobs, [&](std::size_t i) {
    return ball_packing_count(graphs[i], radius, threshold, eps);
  });
  o.lines.push_back("graph6\tr\tthreshold\tpacked\tqualifying\tdirect\tholds");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string g6 = encode_graph6(graphs[i]);
    const auto& r = reports[i];
    json j = to_json(r);
    j["graph6"] = g6;
    o.results.push_back(j);
    o.lines.push_back(g6 + '\t' + std::to_string(r.radius) + '\t' + num(r.threshold) + '\t' + std::to_string(r.packed) +
                      '\t' + std::to_string(r.qualifying) + '\t' + std::to_string(r.direct) + '\t' +
                      (r.holds ? "yes" : "no"));
    if (!r.holds) o.fail(g6, "direct >= qualifying", r.direct - r.qualifying);
  }
  return o.finish();
}

int cmd_converse(Output& o, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) {
    if (g.max_degree() > 3) throw UsageError("converse: input graph " + encode_graph6(g) + " is not subcubic");
  }
  const double eps = o.globals.eps;
  const auto reports = parallel_map<ConversePackingReport>(
      graphs.size(), o.globals.jobs, [&](std::size_t i) { return converse_packing(graphs[i], eps); });
  o.lines.push_back("graph6\tn\tpacked\tdirect_ge_sqrt3\ttarget\thypothesis\tholds");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string g6 = encode_graph6(graphs[i]);
    const auto& r = reports[i];
    json j = to_json(r);
    j["graph6"] = g6;
    o.results.push_back(j);
    o.lines.push_back(g6 + '\t' + std::to_string(graphs[i].order()) + '\t' + std::to_string(r.packed) + '\t' +
                      std::to_string(r.direct_ge_sqrt3) + '\t' + std::to_string(r.target) + '\t' +
                      (r.hypothesis_ok ? "ok" : "flagged") + '\t' + (r.holds ? "yes" : "no"));
    if (r.hypothesis_ok && !r.holds) o.fail(g6, "direct_ge_sqrt3 >= packed", r.direct_ge_sqrt3 - r.packed);
  }
  return o.finish();
}

// ---- certificates ----------------------------------------------------------

int cmd_certify(Output& o, const std::vector<Graph>& graphs, int budget, std::uint64_t seed, const std::string& out_path) {
  for (const auto& g : graphs) {
    if (!subcubic(g)) throw UsageError("certify: input graph " + encode_graph6(g) + " is not a simple subcubic graph");
  }
  if (!out_path.empty() && graphs.size() != 1) throw UsageError("certify: --out needs exactly one input graph");
  CertifyOptions options;
  options.eps = o.globals.eps;
  struct Row {
    CertifyResult result;
    CertificateCheck check;
  };
  const auto rows = parallel_map<Row>(graphs.size(), o.globals.jobs, [&](std::size_t i) {
    Row row{certify(graphs[i], budget, seed, options), {}};
    if (row.result.certificate) row.check = verify_certificate(graphs[i], *row.result.certificate, options);
    return row;
  });
  o.lines.push_back("graph6\tstatus\tmethod\tk\t|A|\t|B|\tupper\tlower");
  int found = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string g6 = encode_graph6(graphs[i]);
    const auto& row = rows[i];
    json j{{"graph6", g6}, {"method", row.result.method}, {"restarts", row.result.restarts}};
    if (row.result.certificate) {
      ++found;
      j["status"] = "certified";
      j["certificate"] = to_json(*row.result.certificate);
      j["certificate_text"] = write_certificate(*row.result.certificate);
      j["check"] = to_json(row.check);
      o.lines.push_back(g6 + "\tcertified\t" + row.result.method + '\t' + std::to_string(row.check.k) + '\t' +
                        std::to_string(row.check.a_size) + '\t' + std::to_string(row.check.b_size) + '\t' +
                        num(row.check.upper) + '\t' + num(row.check.lower));
      if (!row.check.accepted) o.fail(g6, "certificate rejected by verifier", 0.0);
    } else {
      j["status"] = "unknown";
      o.lines.push_back(g6 + "\tunknown\t-\t-\t-\t-\t-\t-");
    }
    o.results.push_back(j);
  }
  o.lines.push_back("certified " + std::to_string(found) + " of " + std::to_string(graphs.size()) + ", unknown " +
                    std::to_string(graphs.size() - found));
  if (!out_path.empty() && rows[0].result.certificate) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + out_path + "'");
    f << write_certificate(*rows[0].result.certificate);
  }
  return o.finish(json{{"certified", found}, {"unknown", static_cast<int>(graphs.size()) - found}});
}

int cmd_verify_cert(Output& o, const std::string& cert_path, const std::vector<Graph>& graphs) {
  if (graphs.size() != 1) throw UsageError("verify-cert: expected exactly one graph");
  Certificate cert;
  try {
    cert = parse_certificate(read_file(cert_path));
  } catch (const CertificateFormatError& e) {
    throw UsageError(std::string("verify-cert: ") + e.what());
  }
  CertifyOptions options;
  options.eps = o.globals.eps;
  const Graph& g = graphs[0];
  const std::string g6 = encode_graph6(g);
  const auto check = verify_certificate(g, cert, options);
  json j = to_json(check);
  j["graph6"] = g6;
  o.results.push_back(j);
  o.lines.push_back("graph " + g6 + "  |A|=" + std::to_string(check.a_size) + " |B|=" + std::to_string(check.b_size) +
                    " H=" + std::to_string(check.H) + " k=" + std::to_string(check.k));
  if (check.accepted || check.upper != 0.0 || check.lower != 0.0) {
    o.lines.push_back("lambda_H(G) <= " + num(check.upper) + "  (sqrt2 margin " + num(check.upper_margin) + ", " +
                      to_string(check.upper_outcome) + ")");
    o.lines.push_back("lambda_L(G) >= " + num(check.lower) + "  (sqrt2 margin " + num(check.lower_margin) + ", " +
                      to_string(check.lower_outcome) + ")");
  }
  o.lines.push_back(check.accepted ? "certificate accepted" : "certificate rejected");
  for (const auto& f : check.failures) o.failures.push_back(g6 + ": " + f);
  return o.finish();
}

// ---- generators ------------------------------------------------------------

int emit_graphs(Output& o, const std::vector<Graph>& graphs, bool edge_list) {
  for (const auto& g : graphs) {
    const std::string g6 = encode_graph6(g);
    o.results.push_back(g6);
    if (edge_list) {
      std::istringstream text(write_edge_list(g));
      for (std::string line; std::getline(text, line);) o.lines.push_back(line);
    } else {
      o.lines.push_back(g6);
    }
  }
  return o.finish();
}

int cmd_verify_lemma33(Output& o) {
  const double tol = 1e-8;
  const double eps = o.globals.eps;
  const std::vector<int> t4{2, 2, 2, 2};
  const std::vector<int> t5{2, 1, 1, 1, 1};
  const Graph c4 = cycle_with_pendants(t4);
  const Graph c5 = cycle_with_pendants(t5);
  const Spectrum s4 = eigenvalues(c4);
  const Spectrum s5 = eigenvalues(c5);
  const double r2 = std::numbers::sqrt2;
  struct Check {
    std::string graph;
    std::string name;
    double value;
    double margin;
    bool strict;
  };
  const std::vector<Check> checks{
      {"C4(2,2,2,2)", "lambda_2 <= sqrt 2", s4.largest(2), r2 - s4.largest(2), false},
      {"C4(2,2,2,2)", "lambda_2 = -lambda_2^-", s4.largest(2) + s4.smallest(2),
       tol - std::abs(s4.largest(2) + s4.smallest(2)), false},
      {"C5(2,1,1,1,1)", "lambda_3 < sqrt 2", s5.largest(3), r2 - s5.largest(3), true},
      {"C5(2,1,1,1,1)", "lambda_3^- > -sqrt 2", s5.smallest(3), s5.smallest(3) + r2, true},
  };
  o.lines.push_back("graph\tinequality\tvalue\tmargin\tstatus");
  for (const auto& c : checks) {
    const bool ok = c.strict ? c.margin > eps : c.margin >= -eps;
    o.results.push_back(json{{"graph", c.graph}, {"inequality", c.name}, {"value", c.value}, {"margin", c.margin}, {"holds", ok}});
    o.lines.push_back(c.graph + '\t' + c.name + '\t' + num(c.value) + '\t' + num(c.margin) + '\t' + (ok ? "ok" : "FAILS"));
    if (!ok) o.fail(c.graph, c.name, c.margin);
  }
  return o.finish(json{{"C4(2,2,2,2)", encode_graph6(c4)}, {"C5(2,1,1,1,1)", encode_graph6(c5)}});
}

int cmd_verify_r3(Output& o, int n_max) {
  if (n_max < 1 || n_max > kEnumerationLimit) {
    throw UsageError("verify-r3: N must be in [1, " + std::to_string(kEnumerationLimit) + "]");
  }
  const double eps = o.globals.eps;
  const double r2 = std::numbers::sqrt2;
  o.lines.push_back("n\tgraphs\tmax_R\tmin_margin\tfailures");
  int total = 0;
  for (int n = 1; n <= n_max; ++n) {
    const auto graphs = enumerate_subcubic(n, true);
    const auto hls = parallel_map<HLResult>(graphs.size(), o.globals.jobs, [&](std::size_t i) { return hl_index(graphs[i]); });
    double max_R = 0.0;
    double min_margin = std::numeric_limits<double>::infinity();
    int failures = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const double margin = r2 - std::max(std::abs(hls[i].lambda_H), std::abs(hls[i].lambda_L));
      max_R = std::max(max_R, hls[i].R);
      min_margin = std::min(min_margin, margin);
      if (margin < -eps) {
        ++failures;
        o.fail(encode_graph6(graphs[i]), "lambda_H, lambda_L in [-sqrt 2, sqrt 2]", margin);
      }
    }
    total += static_cast<int>(graphs.size());
    o.results.push_back(json{{"n", n}, {"graphs", graphs.size()}, {"max_R", max_R}, {"min_margin", min_margin}, {"failures", failures}});
    o.lines.push_back(std::to_string(n) + '\t' + std::to_string(graphs.size()) + '\t' + num(max_R) + '\t' +
                      num(min_margin) + '\t' + std::to_string(failures));
  }
  o.lines.push_back("checked " + std::to_string(total) + " connected subcubic graphs, " +
                    std::to_string(o.failures.size()) + " failures");
  return o.finish(json{{"checked", total}});
}

int cmd_extremal(Output& o, int degree, int n, int iters, std::uint64_t seed) {
  if (iters < 1) throw UsageError("extremal: --iters must be positive");
  ExtremalReport r;
  try {
    r = extremal_search(degree, n, iters, seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string g6 = encode_graph6(r.best);
  bool monotone = true;
  for (std::size_t i = 1; i < r.trajectory.size(); ++i) monotone = monotone && r.trajectory[i] >= r.trajectory[i - 1];
  if (!monotone) o.fail(g6, "best-so-far trajectory is monotone", 0.0);
  if (degree == 3 && r.best_R > std::numbers::sqrt2 + o.globals.eps) {
    o.fail(g6, "R <= sqrt 2 for cubic graphs", std::numbers::sqrt2 - r.best_R);
  }
  o.results.push_back(to_json(r));
  o.lines.push_back("degree " + std::to_string(degree) + "  n " + std::to_string(n) + "  iterations " +
                    std::to_string(iters) + "  seed " + std::to_string(seed));
  o.lines.push_back("best R " + num(r.best_R) + "  restarts " + std::to_string(r.restarts) + "  accepted moves " +
                    std::to_string(r.accepted_moves));
  o.lines.push_back("best graph6 " + g6);
  return o.finish();
}

int cmd_scan(Output& o, int n_max, double threshold) {
  if (n_max < 1 || n_max > kEnumerationLimit) {
    throw UsageError("scan-planar: N must be in [1, " + std::to_string(kEnumerationLimit) + "]");
  }
  const auto r = conjecture_scan(n_max, threshold, o.globals.eps);
  o.results.push_back(to_json(r));
  o.lines.push_back("n\tgraphs\tplanar\tmax_R\targmax");
  for (const auto& row : r.rows) {
    o.lines.push_back(std::to_string(row.n) + '\t' + std::to_string(row.graphs) + '\t' + std::to_string(row.planar) +
                      '\t' + num(row.max_R) + '\t' + row.argmax);
  }
  o.lines.push_back(std::string("K4 ") + (r.k4_seen ? "seen with R = " + num(r.k4_R) : "not seen"));
  o.lines.push_back("flagged " + std::to_string(r.flagged.size()));
  for (const auto& f : r.flagged) {
    o.lines.push_back("candidate " + f.graph6 + " R=" + num(f.R));
    o.fail(f.graph6, "planar subcubic R <= " + num(threshold), threshold - f.R);
  }
  return o.finish();
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Median-eigenvalue (HL-index) toolkit for graphs"};
  app.name("hlindex");
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  if (const char* env = std::getenv("HLINDEX_JOBS")) {
    try {
      globals.jobs = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  app.add_option("--jobs,-j", globals.jobs, "Worker threads for per-graph work")->check(CLI::PositiveNumber);
  app.add_option("--eps", globals.eps, "Boundary tolerance")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", globals.json, "Emit the JSON report schema");

  std::vector<std::string> inputs;
  auto per_graph = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", inputs, "Files, '-', graph6 strings or family specs");
    return sub;
  };
  auto* spectrum = per_graph("spectrum", "Adjacency eigenvalues, nonincreasing");
  auto* hl = per_graph("hl", "Median eigenvalues and the HL-index");
  auto* bounds = per_graph("bounds", "Average-degree bound chain");
  auto* window = per_graph("window", "Width of the median window inside [-sqrt2, sqrt2]");

  int radius = 6;
  double threshold = 2.0 * std::numbers::sqrt2 - 0.5;
  auto* packing = per_graph("packing", "Ball packing against eigenvalue counts");
  packing->add_option("--r", radius, "Ball radius")->check(CLI::PositiveNumber);
  packing->add_option("--threshold", threshold, "Spectral-radius threshold");
  auto* converse = per_graph("converse", "Packing of K3 / K1,3 / P5 pieces against eigenvalues >= sqrt3");

  int budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::string cert_out;
  auto* certify_cmd = per_graph("certify", "Search for an interlacing certificate");
  certify_cmd->add_option("--budget", budget, "Restarts of the partition search")->check(CLI::PositiveNumber);
  certify_cmd->add_option("--seed", seed, "Random seed");
  certify_cmd->add_option("--out", cert_out, "Write the certificate file (single graph)");

  std::string cert_file;
  std::string cert_graph;
  auto* verify_cert = app.add_subcommand("verify-cert", "Check a certificate file against a graph");
  verify_cert->add_option("certfile", cert_file)->required();
  verify_cert->add_option("graph", cert_graph)->required();

  auto* gen = app.add_subcommand("gen", "Emit generated graphs as graph6");
  gen->require_subcommand(1);
  bool edge_list = false;
  gen->add_flag("--edge-list", edge_list, "Emit an edge list instead of graph6");
  int pg_p = 0, pg_k = 1;
  auto* gen_pg2 = gen->add_subcommand("pg2", "Incidence graph of PG(2, p^k)");
  gen_pg2->add_option("p", pg_p)->required();
  gen_pg2->add_option("k", pg_k)->required();
  std::string lengths;
  auto* gen_cyc = gen->add_subcommand("cycpend", "Cycle with pendant paths T1,..,Tk");
  gen_cyc->add_option("lengths", lengths)->required();
  std::string gen_name;
  auto* gen_named = gen->add_subcommand("named", "Named graph");
  gen_named->add_option("name", gen_name)->required();
  int cubic_n = 0, cubic_count = 1;
  std::uint64_t cubic_seed = 0;
  auto* gen_cubic = gen->add_subcommand("random-cubic", "Random cubic graph (configuration model)");
  gen_cubic->add_option("n", cubic_n)->required();
  gen_cubic->add_option("--seed", cubic_seed);
  gen_cubic->add_option("--count", cubic_count, "Graphs with seeds seed, seed+1, ...")->check(CLI::PositiveNumber);
  for (auto* s : {gen_pg2, gen_cyc, gen_named, gen_cubic}) s->fallthrough();

  int enum_n = 0;
  bool connected = false;
  int regular = -1;
  auto* enumerate = app.add_subcommand("enumerate", "Subcubic graphs up to isomorphism");
  enumerate->add_option("n", enum_n)->required();
  enumerate->add_flag("--connected", connected);
  enumerate->add_option("--regular", regular, "Keep only D-regular graphs")->check(CLI::Range(0, 3));

  auto* lemma33 = app.add_subcommand("verify-lemma33", "Check the two cycle-with-pendants eigenvalue bounds");
  int r3_n = 0;
  auto* r3 = app.add_subcommand("verify-r3", "Check median eigenvalues of all connected subcubic graphs");
  r3->add_option("n", r3_n)->required();

  int ext_d = 0, ext_n = 0, ext_iters = 1000;
  std::uint64_t ext_seed = 0;
  auto* extremal = app.add_subcommand("extremal", "Hill climbing on R over connected regular graphs");
  extremal->add_option("d", ext_d)->required();
  extremal->add_option("n", ext_n)->required();
  extremal->add_option("--iters", ext_iters);
  extremal->add_option("--seed", ext_seed);

  int scan_n = 0;
  double scan_threshold = 1.0;
  auto* scan = app.add_subcommand("scan-planar", "Tabulate R over connected planar subcubic graphs");
  scan->add_option("n", scan_n)->required();
  scan->add_option("--threshold", scan_threshold, "Flag graphs with R above this");

  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hlindex: " << e.what() << '\n';
    err << "run 'hlindex --help' for usage\n";
    return kExitUsage;
  }

  Output o{globals, out, app.get_subcommands().front()->get_name()};
  try {
    if (spectrum->parsed()) return cmd_spectrum(o, load_inputs(inputs, in));
    if (hl->parsed()) return cmd_hl(o, load_inputs(inputs, in));
    if (bounds->parsed()) return cmd_bounds(o, load_inputs(inputs, in));
    if (window->parsed()) return cmd_window(o, load_inputs(inputs, in));
    if (packing->parsed()) return cmd_packing(o, load_inputs(inputs, in), radius, threshold);
    if (converse->parsed()) return cmd_converse(o, load_inputs(inputs, in));
    if (certify_cmd->parsed()) return cmd_certify(o, load_inputs(inputs, in), budget, seed, cert_out);
    if (verify_cert->parsed()) return cmd_verify_cert(o, cert_file, load_inputs({cert_graph}, in));
    if (gen->parsed()) {
      o.command = "gen";
      std::vector<Graph> graphs;
      if (gen_pg2->parsed()) graphs.push_back(pg2_incidence(pg_p, pg_k));
      if (gen_cyc->parsed()) graphs.push_back(cycle_with_pendants(parse_int_list(lengths, "cycpend lengths")));
      if (gen_named->parsed()) graphs.push_back(named(gen_name));
      if (gen_cubic->parsed()) {
        for (int i = 0; i < cubic_count; ++i) graphs.push_back(random_cubic(cubic_n, cubic_seed + static_cast<std::uint64_t>(i)));
      }
      return emit_graphs(o, graphs, edge_list);
    }
    if (enumerate->parsed()) {
      if (enum_n < 1 || enum_n > kEnumerationLimit) {
        throw UsageError("enumerate: N must be in [1, " + std::to_string(kEnumerationLimit) + "]");
      }
      std::vector<Graph> graphs;
      for (auto& g : enumerate_subcubic(enum_n, connected)) {
        bool keep = true;
        for (int v = 0; v < g.order() && regular >= 0; ++v) keep = keep && g.degree(v) == regular;
        if (keep) graphs.push_back(std::move(g));
      }
      return emit_graphs(o, graphs, false);
    }
    if (lemma33->parsed()) return cmd_verify_lemma33(o);
    if (r3->parsed()) return cmd_verify_r3(o, r3_n);
    if (extremal->parsed()) return cmd_extremal(o, ext_d, ext_n, ext_iters, ext_seed);
    if (scan->parsed()) return cmd_scan(o, scan_n, scan_threshold);
  } catch (const UsageError& e) {
    err << "hlindex: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Graph, format and precondition errors from the library.
    err << "hlindex: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "hlindex: no command\n";
  return kExitUsage;
}

}  // namespace hlindex::cli
