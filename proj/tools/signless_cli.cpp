// signless: spectral invariants and bound checks for simple graphs.
//
//   signless eval corpus.g6 [--format graph6|edges]
//   signless enumerate --n 5 [--connected-only]
//   signless family complete --n 3..8
//
// Exit status: 0 when every bound and lemma holds, 1 when something fails
// (a potential counterexample), 2 on usage or input errors.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "signless/io.hpp"
#include "signless/runner.hpp"

namespace {

using namespace signless;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(std::string_view s) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not a number: '" + std::string(s) + "'");
  return value;
}

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (auto slash = item.find('/'); slash != std::string::npos) {
      out.push_back(parse_real(item.substr(0, slash)) / parse_real(item.substr(slash + 1)));
    } else {
      out.push_back(parse_real(item));
    }
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto to_int = [](const std::string& s) {
    const double v = parse_real(s);
    if (v != static_cast<int>(v)) throw UsageError("not an integer: '" + s + "'");
    return static_cast<int>(v);
  };
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

struct CommonOptions {
  std::string alpha;
  std::string k = "all";
  std::string out = "csv";
  unsigned jobs = 1;
  double tol = 0;
  std::string report;

  void attach(CLI::App* app, bool report_default_stdout) {
    app->add_option("--alpha", alpha, "comma-separated exponent grid (default -1,-1/2,1/2,3/2,2)");
    app->add_option("--k", k, "'all' or a comma-separated k list")->capture_default_str();
    app->add_option("--out", out, "report format: csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    app->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--tol", tol, "relative equality/violation tolerance (default 1e-9, env SIGNLESS_TOL)");
    app->add_option("--report", report,
                    report_default_stdout ? "report destination ('-' for stdout, the default)"
                                          : "write the full per-graph report to this path ('-' for stdout)");
    if (report_default_stdout) report = "-";
  }

  RunConfig config() const {
    RunConfig c;
    if (!alpha.empty()) c.alphas = parse_list(alpha);
    if (k != "all") c.k = {false, parse_list(k)};
    c.jobs = jobs;
    if (auto env = tolerance_from_env()) c.tol.relative = *env;
    if (tol > 0) c.tol.relative = tol;
    return c;
  }

  io::ReportFormat format() const { return out == "jsonl" ? io::ReportFormat::Jsonl : io::ReportFormat::Csv; }
};

/// Report sink writing to stdout, a file, or nowhere.
class ReportWriter {
 public:
  ReportWriter(const std::string& path, io::ReportFormat format) : format_(format) {
    if (path.empty()) return;
    if (path == "-") {
      out_ = &std::cout;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write report to " + path);
      out_ = file_.get();
    }
    io::write_report_header(*out_, format_);
  }

  void write(const GraphResult& r) {
    if (!out_) return;
    for (const auto& rec : r.records) io::write_report_record(*out_, {r.locator, rec}, format_);
  }

 private:
  io::ReportFormat format_;
  std::ostream* out_ = nullptr;
  std::unique_ptr<std::ofstream> file_;
};

int cmd_eval(const std::string& path, const std::string& format_name, const CommonOptions& opts) {
  const RunConfig config = opts.config();
  std::ifstream in(path);
  if (!in) {
    std::cerr << "signless: cannot read " << path << '\n';
    return kExitInput;
  }
  const auto format = format_name == "edges" ? io::InputFormat::Edges : io::InputFormat::Graph6;
  std::vector<io::CorpusRecord> corpus;
  try {
    corpus = io::read_corpus(in, path, format);
  } catch (const io::ParseError& e) {
    std::cerr << "signless: " << e.what() << '\n';
    return kExitInput;
  }
  for (const auto& rec : corpus) {
    if (rec.graph.order() > config.max_order) {
      std::cerr << "signless: " << rec.source << ": order exceeds limit\n";
      return kExitInput;
    }
  }

  ReportWriter writer(opts.report, opts.format());
  SweepSummary summary(config.tol);
  run_batch(
      corpus.size(), [&](std::size_t i) { return std::optional<GraphInput>({corpus[i].source, corpus[i].graph}); },
      config, [&](GraphResult&& r) {
        summary.add(r);
        writer.write(r);
      });
  summary.print(std::cerr);
  return summary.failures() == 0 ? kExitOk : kExitFailure;
}

int cmd_enumerate(int n, bool connected_only, const CommonOptions& opts) {
  if (n < 2 || n > 7) {
    std::cerr << "signless: enumerate needs 2 <= n <= 7\n";
    return kExitInput;
  }
  const RunConfig config = opts.config();
  ReportWriter writer(opts.report, opts.format());
  SweepSummary summary(config.tol);
  enumerate_labeled(n, connected_only, config, [&](GraphResult&& r) {
    summary.add(r);
    writer.write(r);
  });
  summary.print(std::cout);
  return summary.failures() == 0 ? kExitOk : kExitFailure;
}

int cmd_family(const std::string& name, const std::string& n_range, const std::string& q_range,
               const CommonOptions& opts) {
  const auto family = parse_family(name);
  if (!family) {
    std::cerr << "signless: unknown family '" << name
              << "' (complete, empty, star, complete-bipartite, cycle, path, double-star)\n";
    return kExitInput;
  }
  const RunConfig config = opts.config();
  const auto [lo, hi] = parse_range(n_range);
  const auto [qlo, qhi] = parse_range(q_range.empty() ? n_range : q_range);

  std::vector<GraphInput> inputs;
  try {
    for (int n = lo; n <= hi; ++n) {
      if (*family == Family::CompleteBipartite) {
        for (int q = qlo; q <= qhi; ++q) {
          inputs.push_back({"complete-bipartite(p=" + std::to_string(n) + ",q=" + std::to_string(q) + ")",
                            generate(*family, n, q)});
        }
      } else {
        inputs.push_back({std::string(family_name(*family)) + "(n=" + std::to_string(n) + ")", generate(*family, n)});
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "signless: " << e.what() << '\n';
    return kExitInput;
  }

  ReportWriter writer(opts.report, opts.format());
  SweepSummary summary(config.tol);
  std::vector<std::string> misses;
  run_batch(
      inputs.size(), [&](std::size_t i) { return std::optional<GraphInput>(inputs[i]); }, config,
      [&](GraphResult&& r) {
        summary.add(r);
        for (auto& m : family_expectations(*family, r)) misses.push_back(std::move(m));
        writer.write(r);
      });
  summary.print(std::cout);
  for (const auto& m : misses) std::cout << "expectation failed: " << m << '\n';
  std::cout << "expectations " << (misses.empty() ? "met" : "missed") << '\n';
  return summary.failures() == 0 && misses.empty() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral invariants and bound verification for simple graphs"};
  app.require_subcommand(1);

  CommonOptions eval_opts, enum_opts, family_opts;
  std::string eval_path, eval_format = "graph6";
  auto* eval = app.add_subcommand("eval", "evaluate every invariant, lemma and bound on a corpus file");
  eval->add_option("input", eval_path, "graph6 or edge-list file")->required();
  eval->add_option("--format", eval_format, "input format")
      ->check(CLI::IsMember({"graph6", "edges"}))
      ->capture_default_str();
  eval_opts.attach(eval, true);

  int enum_n = 0;
  bool connected_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "sweep all labeled graphs on n vertices");
  enumerate->add_option("--n", enum_n, "vertex count, 2..7")->required();
  enumerate->add_flag("--connected-only", connected_only, "skip disconnected graphs");
  enum_opts.attach(enumerate, false);

  std::string family_name_arg, n_range, q_range;
  auto* family = app.add_subcommand("family", "run the suite on a named family and check its equality cases");
  family->add_option("name", family_name_arg, "complete, empty, star, complete-bipartite, cycle, path, double-star")
      ->required();
  family->add_option("--n", n_range, "order range a..b (first part size for complete-bipartite)")->required();
  family->add_option("--q", q_range, "second part range for complete-bipartite");
  family_opts.attach(family, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*eval) return cmd_eval(eval_path, eval_format, eval_opts);
    if (*enumerate) return cmd_enumerate(enum_n, connected_only, enum_opts);
    if (*family) return cmd_family(family_name_arg, n_range, q_range, family_opts);
  } catch (const UsageError& e) {
    std::cerr << "signless: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "signless: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
