#include "signless/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "signless/invariants.hpp"
#include "signless/spectra.hpp"

namespace signless {

std::optional<double> tolerance_from_env() {
  const char* raw = std::getenv("SIGNLESS_TOL");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0)) return std::nullopt;
  return value;
}

namespace {

void add_invariants(const SpectralSummary& s, const RunConfig& config, std::vector<io::Record>& out) {
  auto push = [&](std::string name, std::optional<double> alpha, double value) {
    out.emplace_back(io::InvariantValue{std::move(name), alpha, value});
  };
  push("n", std::nullopt, s.n());
  push("m", std::nullopt, s.m());
  push("t", std::nullopt, s.spanning_trees().value);
  if (s.t1()) push("t1", std::nullopt, *s.t1());
  if (s.bigT()) push("T", std::nullopt, *s.bigT());
  push("E", std::nullopt, graph_energy(s));
  push("IE", std::nullopt, incidence_energy(s));
  push("LEL", std::nullopt, lel(s));
  if (s.connected()) push("Kf", std::nullopt, kirchhoff_index(s));
  for (double a : config.alphas) {
    try {
      push("s_alpha", a, s_alpha(s, Alpha(a)).value);
    } catch (const std::domain_error&) {
    }
    try {
      push("sigma_alpha", a, sigma_alpha(s, Alpha(a)));
    } catch (const std::domain_error&) {
    }
  }
}

std::vector<int> integer_ks(int k_max, const KPolicy& policy) {
  std::vector<int> ks;
  if (policy.all) {
    for (int k = 1; k <= k_max; ++k) ks.push_back(k);
    return ks;
  }
  for (double v : policy.values) {
    if (v == std::floor(v) && v >= 1 && v <= k_max) ks.push_back(static_cast<int>(v));
  }
  return ks;
}

std::vector<double> real_ks(const RunConfig& config) {
  if (config.k.all) return config.default_real_ks;
  std::vector<double> ks;
  for (double v : config.k.values)
    if (v >= 0) ks.push_back(v);
  return ks;
}

/// Runs one evaluator, turning a hypothesis miss into a not-applicable record.
template <typename F>
void guarded(std::vector<io::Record>& out, BoundId id, std::optional<double> alpha, std::optional<double> k, F&& f) {
  try {
    f();
  } catch (const HypothesisError& e) {
    out.emplace_back(BoundReport::not_applicable(id, alpha, k, e.what()));
  }
}

void push_evaluation(std::vector<io::Record>& out, const BoundEvaluation& e) {
  out.emplace_back(e.primary);
  if (e.diagnostic) out.emplace_back(*e.diagnostic);
}

}  // namespace

GraphResult evaluate_graph(const Graph& g, const std::string& locator, const RunConfig& config) {
  GraphResult result{locator, {}};
  auto& out = result.records;
  const auto s = SpectralSummary::of(g);
  const Tolerance tol = config.tol;

  if (config.include_invariants) add_invariants(s, config, out);
  for (auto& lemma : lemma_suite(g, s, tol)) out.emplace_back(std::move(lemma));

  guarded(out, BoundId::EQ2, std::nullopt, std::nullopt, [&] { out.emplace_back(degree_square_bound(s, tol)); });

  const bool bip = s.bipartite();
  const int k_max = bip ? s.n() - 2 : s.n() - 1;
  const BoundId mk_id = bip ? BoundId::EQ4 : BoundId::EQ5;
  if (!s.connected()) {
    out.emplace_back(BoundReport::not_applicable(mk_id, std::nullopt, std::nullopt, "requires a connected graph"));
  } else {
    for (int k : integer_ks(k_max, config.k)) push_evaluation(out, mk_upper_bound(s, k, tol));
  }

  for (double a : config.alphas) {
    const Alpha alpha(a);
    if (alpha.trivial()) continue;
    if (a < 0) {
      guarded(out, bip ? BoundId::EQ9 : BoundId::EQ12, a, std::nullopt,
              [&] { out.emplace_back(power_sum_bound(s, alpha, 1, tol)); });
    } else if (s.n() >= 2) {
      for (int k : integer_ks(k_max, config.k)) out.emplace_back(power_sum_bound(s, alpha, k, tol));
    }
    for (double k : real_ks(config)) {
      guarded(out, bip ? BoundId::EQ16 : BoundId::EQ17, a, k,
              [&] { push_evaluation(out, amgm_bound(s, alpha, k, tol)); });
    }
    guarded(out, bip ? BoundId::EQ19 : BoundId::EQ20, a, 1.0,
            [&] { out.emplace_back(amgm_corollary_bound(s, alpha, tol)); });
    guarded(out, bip ? BoundId::EQ23 : BoundId::EQ24, a, std::nullopt,
            [&] { push_evaluation(out, kober_bound(s, alpha, tol)); });
  }
  guarded(out, bip ? BoundId::EQ21 : BoundId::EQ22, 0.5, 1.0, [&] { out.emplace_back(ie_amgm_bound(s, tol)); });
  guarded(out, bip ? BoundId::EQ27 : BoundId::EQ28, 0.5, std::nullopt,
          [&] { out.emplace_back(ie_kober_bound(s, tol)); });
  return result;
}

void run_batch(std::size_t count, const std::function<std::optional<GraphInput>(std::size_t)>& make,
               const RunConfig& config, const std::function<void(GraphResult&&)>& sink) {
  constexpr std::size_t kBlock = 2048;
  const unsigned workers = std::max(1u, config.jobs);
  std::vector<std::optional<GraphResult>> slots;

  for (std::size_t begin = 0; begin < count; begin += kBlock) {
    const std::size_t end = std::min(count, begin + kBlock);
    slots.assign(end - begin, std::nullopt);
    std::atomic<std::size_t> next{begin};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
      for (std::size_t i = next++; i < end; i = next++) {
        try {
          if (auto input = make(i)) slots[i - begin] = evaluate_graph(input->graph, input->locator, config);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    };

    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    for (auto& slot : slots)
      if (slot) sink(std::move(*slot));
  }
}

void enumerate_labeled(int n, bool connected_only, const RunConfig& config,
                       const std::function<void(GraphResult&&)>& sink) {
  if (n < 1 || pair_count(n) > 62) throw std::invalid_argument("enumerate_labeled: n out of range");
  const std::size_t count = std::size_t{1} << pair_count(n);
  run_batch(
      count,
      [&](std::size_t mask) -> std::optional<GraphInput> {
        Graph g = labeled_graph(n, mask);
        if (connected_only && !is_connected(g)) return std::nullopt;
        std::string locator = "n" + std::to_string(n) + "#" + std::to_string(mask) + ":" + io::write_graph6(g);
        return GraphInput{std::move(locator), std::move(g)};
      },
      config, sink);
}

namespace {

constexpr std::size_t kKeepGraphs = 8;

void remember(std::vector<std::string>& list, const std::string& locator) {
  if (list.size() < kKeepGraphs) list.push_back(locator);
}

}  // namespace

void SweepSummary::add(const GraphResult& result) {
  ++graphs_;
  for (const auto& record : result.records) {
    if (const auto* b = std::get_if<BoundReport>(&record)) {
      auto& st = bounds_[b->bound];
      if (!b->applicable()) {
        ++st.not_applicable;
        continue;
      }
      const double relative = b->slack / std::max(1.0, std::abs(b->lhs));
      if (st.evaluated == 0 || b->slack < st.min_slack) {
        st.min_slack = b->slack;
        st.min_slack_graph = result.locator;
      }
      if (st.evaluated == 0 || relative < st.min_relative_slack) st.min_relative_slack = relative;
      ++st.evaluated;
      if (!b->holds) ++st.failures;
      if (b->equality) {
        ++st.equalities;
        remember(st.equality_graphs, result.locator);
      }
      if (bound_info(b->bound).strict && b->slack <= tol_.scaled(b->lhs)) ++st.strict_violations;
    } else if (const auto* l = std::get_if<LemmaReport>(&record)) {
      auto& st = lemmas_[l->lemma];
      switch (l->status) {
        case LemmaStatus::Pass: ++st.pass; break;
        case LemmaStatus::Fail:
          ++st.fail;
          remember(st.failed_graphs, result.locator);
          break;
        case LemmaStatus::NotApplicable: ++st.not_applicable; break;
      }
      if (l->status != LemmaStatus::NotApplicable && l->equality) ++st.equalities;
    }
  }
}

long SweepSummary::failures() const {
  long total = 0;
  for (const auto& [id, st] : bounds_)
    if (!bound_info(id).diagnostic) total += st.failures;
  for (const auto& [id, st] : lemmas_) total += st.fail;
  return total;
}

long SweepSummary::diagnostic_failures() const {
  long total = 0;
  for (const auto& [id, st] : bounds_)
    if (bound_info(id).diagnostic) total += st.failures;
  return total;
}

void SweepSummary::print(std::ostream& out) const {
  out << "graphs " << graphs_ << '\n';
  out << "bound  evaluated  failures  equalities  strict_violations  min_slack  min_rel_slack  n/a  worst_graph\n";
  for (const auto& [id, st] : bounds_) {
    const auto& info = bound_info(id);
    out << info.name << (info.diagnostic ? "*" : "") << "  " << st.evaluated << "  " << st.failures << "  "
        << st.equalities << "  " << (info.strict ? std::to_string(st.strict_violations) : std::string("-")) << "  "
        << (st.evaluated ? io::format_number(st.min_slack) : std::string("-")) << "  "
        << (st.evaluated ? io::format_number(st.min_relative_slack) : std::string("-")) << "  "
        << st.not_applicable << "  " << (st.min_slack_graph.empty() ? "-" : st.min_slack_graph) << '\n';
  }
  for (const auto& [id, st] : bounds_) {
    if (st.equality_graphs.empty()) continue;
    out << "equality " << bound_name(id) << ":";
    for (const auto& g : st.equality_graphs) out << ' ' << g;
    if (st.equalities > static_cast<long>(st.equality_graphs.size())) out << " ...";
    out << '\n';
  }
  out << "lemma  pass  fail  n/a  equalities\n";
  for (const auto& [id, st] : lemmas_) {
    out << lemma_name(id) << "  " << st.pass << "  " << st.fail << "  " << st.not_applicable << "  " << st.equalities
        << '\n';
    for (const auto& g : st.failed_graphs) out << "  failed on " << g << '\n';
  }
  out << "failures " << failures() << '\n';
  out << "diagnostic_failures " << diagnostic_failures() << '\n';
}

namespace {

const BoundReport* find_bound(const GraphResult& r, BoundId id, std::optional<double> alpha, std::optional<double> k) {
  for (const auto& rec : r.records) {
    const auto* b = std::get_if<BoundReport>(&rec);
    if (b && b->bound == id && b->applicable() && (!alpha || b->alpha == alpha) && (!k || b->k == k)) return b;
  }
  return nullptr;
}

const LemmaReport* find_lemma(const GraphResult& r, LemmaId id) {
  for (const auto& rec : r.records) {
    const auto* l = std::get_if<LemmaReport>(&rec);
    if (l && l->lemma == id) return l;
  }
  return nullptr;
}

std::vector<double> alphas_in(const GraphResult& r, BoundId id) {
  std::vector<double> out;
  for (const auto& rec : r.records) {
    const auto* b = std::get_if<BoundReport>(&rec);
    if (b && b->bound == id && b->applicable() && b->alpha) out.push_back(*b->alpha);
  }
  return out;
}

}  // namespace

std::vector<std::string> family_expectations(Family family, const GraphResult& result) {
  std::vector<std::string> misses;
  auto expect_bound_eq = [&](BoundId id, std::optional<double> alpha, std::optional<double> k) {
    const auto* b = find_bound(result, id, alpha, k);
    std::string what = std::string(bound_name(id)) + (alpha ? " alpha=" + io::format_number(*alpha) : "") +
                       (k ? " k=" + io::format_number(*k) : "");
    if (!b) {
      misses.push_back(result.locator + ": " + what + " not evaluated");
    } else if (!b->equality) {
      misses.push_back(result.locator + ": expected equality in " + what + ", slack " + io::format_number(b->slack));
    }
  };
  auto expect_lemma_eq = [&](LemmaId id) {
    const auto* l = find_lemma(result, id);
    if (!l || l->status != LemmaStatus::Pass || !l->equality) {
      misses.push_back(result.locator + ": expected equality in " + std::string(lemma_name(id)));
    }
  };
  auto expect_lemma_pass = [&](LemmaId id) {
    const auto* l = find_lemma(result, id);
    if (!l || l->status != LemmaStatus::Pass) {
      misses.push_back(result.locator + ": expected " + std::string(lemma_name(id)) + " to pass");
    }
  };

  switch (family) {
    case Family::Complete: {
      if (!find_bound(result, BoundId::EQ5, std::nullopt, std::nullopt)) break;  // n < 3
      expect_bound_eq(BoundId::EQ5, std::nullopt, 1.0);
      for (double a : alphas_in(result, BoundId::EQ12)) expect_bound_eq(BoundId::EQ12, a, 1.0);
      expect_lemma_eq(LemmaId::DegreeSquares);
      expect_lemma_eq(LemmaId::FlatLaplacian);
      break;
    }
    case Family::Star: {
      if (!find_bound(result, BoundId::EQ4, std::nullopt, std::nullopt)) break;  // n < 3
      expect_bound_eq(BoundId::EQ4, std::nullopt, 1.0);
      for (double a : alphas_in(result, BoundId::EQ9)) expect_bound_eq(BoundId::EQ9, a, 1.0);
      for (double a : alphas_in(result, BoundId::EQ23)) expect_bound_eq(BoundId::EQ23, a, std::nullopt);
      expect_lemma_eq(LemmaId::SignlessTop);
      expect_lemma_eq(LemmaId::DegreeSquares);
      break;
    }
    case Family::CompleteBipartite:
    case Family::DoubleStar: expect_lemma_eq(LemmaId::LaplacianSecond); break;
    case Family::Cycle: expect_lemma_pass(LemmaId::TreeProducts); break;
    case Family::Empty: expect_lemma_eq(LemmaId::FlatLaplacian); break;
    case Family::Path: break;
  }
  return misses;
}

}  // namespace signless
