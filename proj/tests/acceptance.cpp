// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.
//
//   acceptance [--jobs N] [--cli path/to/signless]

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "signless/io.hpp"
#include "signless/lemmas.hpp"
#include "signless/runner.hpp"

using namespace signless;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failed_criteria = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << title;
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
  if (!o.pass) ++failed_criteria;
}

std::vector<Graph> connected_graphs(int n) {
  return oracle::labeled_graphs(n, [](const Graph& g) { return is_connected(g); });
}

bool close_rel(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)}); }

std::string join_counts(const std::map<std::string, long>& counts) {
  std::string out;
  for (const auto& [name, c] : counts) out += (out.empty() ? "" : ", ") + name + " x" + std::to_string(c);
  return out;
}

const std::set<BoundId> kSoundnessBounds{
    BoundId::EQ2,  BoundId::EQ4,  BoundId::EQ5,  BoundId::EQ7,  BoundId::EQ8,  BoundId::EQ9,
    BoundId::EQ10, BoundId::EQ11, BoundId::EQ12, BoundId::EQ16, BoundId::EQ17, BoundId::EQ19,
    BoundId::EQ20, BoundId::EQ21, BoundId::EQ22, BoundId::EQ23, BoundId::EQ24, BoundId::EQ27,
    BoundId::EQ28};

const std::set<BoundId> kStrictBounds{BoundId::EQ16, BoundId::EQ17, BoundId::EQ19, BoundId::EQ20, BoundId::EQ21,
                                      BoundId::EQ22, BoundId::EQ24, BoundId::EQ26, BoundId::EQ28};

/// Criteria 1 and 2 share one sweep over connected graphs, 3 <= n <= 6.
void sweep_criteria(unsigned jobs) {
  RunConfig config;
  config.jobs = jobs;
  std::map<std::string, long> failures, strict_misses;
  std::map<std::string, std::string> first_failure, first_strict;
  long evaluated = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 3; n <= 6; ++n) {
    enumerate_labeled(n, true, config, [&](GraphResult&& r) {
      for (const auto& rec : r.records) {
        const auto* b = std::get_if<BoundReport>(&rec);
        if (!b || !b->applicable()) continue;
        const std::string name(bound_name(b->bound));
        if (kSoundnessBounds.count(b->bound)) {
          ++evaluated;
          if (b->slack < -1e-9 * std::max(1.0, std::abs(b->lhs))) {
            if (!failures[name]++) first_failure[name] = r.locator;
          }
        }
        if (kStrictBounds.count(b->bound) && !(b->slack > 1e-9)) {
          const std::string key = name + (b->k ? " k=" + io::format_number(*b->k) : std::string());
          if (!strict_misses[key]++) {
            std::ostringstream w;
            w << r.locator << " alpha=" << io::format_number(b->alpha.value_or(NAN))
              << (b->k ? " k=" + io::format_number(*b->k) : std::string()) << " slack=" << io::format_number(b->slack);
            first_strict[key] = w.str();
          }
        }
      }
    });
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Outcome sound;
  long total = 0;
  for (const auto& [name, c] : failures) total += c;
  sound.pass = total == 0;
  std::ostringstream d1;
  d1 << evaluated << " bound evaluations in " << io::format_number(std::round(seconds * 100) / 100) << " s";
  if (!sound.pass) {
    d1 << "; " << total << " violations (" << join_counts(failures) << ")";
    for (const auto& [name, g] : first_failure) d1 << "; first " << name << " at " << g;
  }
  sound.detail = d1.str();
  report(1, "exhaustive soundness sweep, connected 3<=n<=6", sound);

  Outcome strict;
  strict.pass = strict_misses.empty();
  std::ostringstream d2;
  if (strict.pass) {
    d2 << "all strict bounds have slack > 1e-9";
  } else {
    d2 << join_counts(strict_misses);
    for (const auto& [name, w] : first_strict) d2 << "; first " << name << " at " << w;
  }
  strict.detail = d2.str();
  report(2, "strictness of EQ16/17/19/20/21/22/24/26/28", strict);
}

void equality_criterion() {
  Outcome o;
  std::ostringstream why;
  auto miss = [&](const std::string& what) {
    o.pass = false;
    why << what << "; ";
  };
  int checks = 0;
  for (int n = 3; n <= 8; ++n) {
    const auto star = summarize(star_graph(n));
    const auto kn = summarize(complete_graph(n));
    const auto eq4 = mk_upper_bound(star, 1).primary;
    ++checks;
    if (eq4.bound != BoundId::EQ4 || std::abs(eq4.slack) > 1e-9) miss("EQ4 on K1," + std::to_string(n - 1));
    const auto eq5 = mk_upper_bound(kn, 1).primary;
    ++checks;
    if (eq5.bound != BoundId::EQ5 || std::abs(eq5.slack) > 1e-9) miss("EQ5 on K" + std::to_string(n));
    for (double a : {-1.0, -0.5}) {
      const auto eq12 = power_sum_bound(kn, Alpha(a), 1);
      ++checks;
      if (eq12.bound != BoundId::EQ12 || std::abs(eq12.slack) > 1e-9 || eq12.k != 1.0)
        miss("EQ12 alpha=" + io::format_number(a) + " on K" + std::to_string(n));
    }
    for (double a : {-1.0, 0.5, 2.0}) {
      const double closed = std::pow(2.0 * (n - 1), a) + (n - 1) * std::pow(n - 2.0, a);
      ++checks;
      if (std::abs(s_alpha(kn, Alpha(a)).value - closed) > 1e-9)
        miss("K_n closed form alpha=" + io::format_number(a) + " n=" + std::to_string(n));
    }
  }
  o.detail = o.pass ? std::to_string(checks) + " checks, n=3..8" : why.str();
  report(3, "equality cases at stars and complete graphs", o);
}

void tree_product_criterion() {
  Outcome o;
  long graphs = 0;
  std::string first;
  auto check = [&](const Graph& g, const std::string& label) {
    ++graphs;
    const auto s = summarize(g);
    const int n = g.order();
    double prod_mu = 1;
    for (int i = 1; i < n; ++i) prod_mu *= s.mu(i);
    bool ok = close_rel(prod_mu, n * s.spanning_trees().value, 1e-8);
    if (!is_bipartite(g)) {
      double prod_q = 1;
      for (int i = 1; i <= n; ++i) prod_q *= s.q(i);
      const double t1 = 2.0 * spanning_tree_count(double_cover(g)).value / spanning_tree_count(g).value;
      ok = ok && close_rel(prod_q, t1, 1e-8) && close_rel(*s.t1(), t1, 1e-8);
    }
    if (!ok) {
      o.pass = false;
      if (first.empty()) first = label;
    }
  };
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : connected_graphs(n)) check(g, io::write_graph6(g));
  check(cycle_graph(5), "C5");
  check(cycle_graph(7), "C7");
  check(complete_graph(5), "K5");
  o.detail = std::to_string(graphs) + " graphs" + (first.empty() ? "" : "; first failure " + first);
  report(4, "spanning-tree product identities", o);
}

void lemma_criterion() {
  Outcome o;
  std::map<std::string, long> fails;
  long graphs = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : oracle::labeled_graphs(n, [](const Graph&) { return true; })) {
      ++graphs;
      const auto s = summarize(g);
      const bool connected = is_connected(g);
      for (const auto& r : lemma_suite(g, s)) {
        if (r.lemma == LemmaId::TreeProducts) continue;  // criterion 4
        if (r.status == LemmaStatus::Fail) ++fails[std::string(lemma_name(r.lemma))];
        if (!connected || n < 3) continue;
        if (r.lemma == LemmaId::SignlessTop && r.equality != is_star(g)) ++fails["L2.4 equality set"];
        if (r.lemma == LemmaId::DegreeSquares && r.equality != (is_star(g) || is_complete(g)))
          ++fails["L2.1 equality set"];
      }
    }
  }
  o.pass = fails.empty();
  o.detail = std::to_string(graphs) + " graphs" + (fails.empty() ? "" : "; " + join_counts(fails));
  report(5, "lemma suite on every graph with n<=6", o);
}

void tree_oracle_criterion() {
  Outcome o;
  long compared = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      if (g.size() > 10) continue;
      ++compared;
      const auto t = spanning_tree_count(g);
      if (!t.integral || static_cast<long long>(std::llround(t.value)) != oracle::spanning_trees(g)) {
        if (o.pass) o.detail = "first mismatch " + io::write_graph6(g) + "; ";
        o.pass = false;
      }
    }
  }
  o.detail += std::to_string(compared) + " graphs with m<=10";
  report(6, "Matrix-Tree counts equal deletion-contraction", o);
}

void scalar_lemma_criterion() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> value(0.01, 50.0), weight(0.05, 1.0);
  long gap_bad = 0, iff_bad = 0, chain_bad = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    std::vector<double> w(n), a(n), same(n, value(rng));
    double total = 0;
    for (auto& x : w) total += x = weight(rng);
    for (auto& x : w) x /= total;
    double others = 0;
    for (std::size_t i = 1; i < n; ++i) others += w[i];
    w[0] = 1.0 - others;
    for (auto& x : a) x = value(rng);

    const auto gap = weighted_amgm_gap(a, w);
    if (gap.lhs - gap.rhs < -1e-10) ++gap_bad;
    const bool all_equal = std::adjacent_find(a.begin(), a.end(), std::not_equal_to<>()) == a.end();
    if (!all_equal && !(gap.lhs - gap.rhs > 1e-10)) ++iff_bad;
    const auto flat = weighted_amgm_gap(same, w);
    if (std::abs(flat.lhs - flat.rhs) > 1e-10 * std::max(1.0, same[0])) ++iff_bad;

    std::vector<double> chain_values(2 + rng() % 9);
    for (auto& x : chain_values) x = value(rng);
    if (!kober_chain(chain_values).monotone(1e-10)) ++chain_bad;
  }
  o.pass = gap_bad == 0 && iff_bad == 0 && chain_bad == 0;
  o.detail = "10000 cases; gap violations " + std::to_string(gap_bad) + ", equality-iff misses " +
             std::to_string(iff_bad) + ", chain violations " + std::to_string(chain_bad);
  report(7, "weighted AM-GM gap and Kober chain", o);
}

void io_criterion() {
  Outcome o;
  std::mt19937_64 rng(77);
  long bad = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = static_cast<int>(rng() % 9);
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0, 1)(rng));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const auto g = from_edges(n, edges);
    const auto text = io::write_graph6(g);
    if (text != oracle::graph6_encode(g) || io::parse_graph6(text) != g) ++bad;
  }
  const bool fixed = io::parse_graph6("A_") == complete_graph(2) && io::parse_graph6("Bw") == complete_graph(3) &&
                     io::parse_graph6("Bg") == path_graph(3);
  o.pass = bad == 0 && fixed;
  o.detail = "10000 random graphs, " + std::to_string(bad) + " mismatches; fixed vectors " + (fixed ? "ok" : "wrong");
  report(8, "graph6 round trip", o);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void determinism_criterion(unsigned jobs, const std::string& cli) {
  Outcome o;
  auto library_report = [](unsigned j) {
    RunConfig config;
    config.jobs = j;
    std::ostringstream out;
    io::write_report_header(out, io::ReportFormat::Csv);
    enumerate_labeled(5, false, config, [&](GraphResult&& r) {
      for (const auto& rec : r.records) io::write_report_record(out, {r.locator, rec}, io::ReportFormat::Csv);
    });
    return out.str();
  };
  const unsigned other = jobs > 1 ? jobs : 4;
  const auto a = library_report(1);
  const auto b = library_report(other);
  o.pass = !a.empty() && a == b;
  o.detail = "library report " + std::to_string(a.size()) + " bytes, jobs 1 vs " + std::to_string(other) +
             (a == b ? " identical" : " differ");

  if (!cli.empty()) {
    const auto dir = std::filesystem::temp_directory_path() / ("signless-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto run = [&](unsigned j) {
      const auto path = dir / ("report-" + std::to_string(j) + ".csv");
      const std::string cmd = "\"" + cli + "\" enumerate --n 5 --jobs " + std::to_string(j) + " --report \"" +
                              path.string() + "\" > /dev/null";
      [[maybe_unused]] const int rc = std::system(cmd.c_str());  // exit 1 is expected while bounds fail
      return slurp(path);
    };
    const auto c1 = run(1);
    const auto c2 = run(other);
    const bool same = !c1.empty() && c1 == c2 && c1 == a;
    o.pass = o.pass && same;
    o.detail += "; CLI report " + std::to_string(c1.size()) + " bytes " + (same ? "identical" : "differs");
    std::filesystem::remove_all(dir);
  }
  report(9, "enumerate --n 5 is independent of the worker count", o);
}

}  // namespace

int main(int argc, char** argv) {
  unsigned jobs = 4;
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--jobs" && i + 1 < argc) {
      jobs = static_cast<unsigned>(std::max(1, std::atoi(argv[++i])));
    } else if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--jobs N] [--cli path]\n";
      return 2;
    }
  }
  sweep_criteria(jobs);
  equality_criterion();
  tree_product_criterion();
  lemma_criterion();
  tree_oracle_criterion();
  scalar_lemma_criterion();
  io_criterion();
  determinism_criterion(jobs, cli);
  std::cout << (failed_criteria == 0 ? "all criteria passed" : std::to_string(failed_criteria) + " criteria failed")
            << std::endl;
  return failed_criteria == 0 ? 0 : 1;
}
