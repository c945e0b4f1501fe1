#include "signless/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace signless {

namespace {

constexpr double kIdentityRelTol = 1e-8;

struct LemmaName {
  LemmaId id;
  std::string_view name;
};

constexpr LemmaName kLemmaNames[] = {
    {LemmaId::DegreeSquares, "L2.1"},  {LemmaId::BipartiteSpectra, "L2.2"},
    {LemmaId::TreeProducts, "L2.3"},   {LemmaId::SignlessTop, "L2.4"},
    {LemmaId::SignlessSecond, "L2.5"}, {LemmaId::SignlessBottom, "L2.6"},
    {LemmaId::DistinctCount, "L2.7"},  {LemmaId::LaplacianSecond, "L2.8"},
    {LemmaId::AlgebraicConnectivity, "L2.9"}, {LemmaId::FlatLaplacian, "L2.10"},
};

LemmaReport not_applicable(LemmaId id, std::string why) {
  return {id, LemmaStatus::NotApplicable, 0, 0, false, std::move(why)};
}

LemmaStatus verdict(bool ok) { return ok ? LemmaStatus::Pass : LemmaStatus::Fail; }

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

bool is_complete_bipartite(const Graph& g) {
  const auto colour = bipartition(g);
  if (!colour || !is_connected(g) || g.order() < 2) return false;
  const long long side = std::count(colour->begin(), colour->end(), 0);
  return g.size() == side * (g.order() - side);
}

bool is_double_star(const Graph& g) {
  const int n = g.order();
  if (n < 4 || n % 2 != 0 || g.size() != n - 1 || !is_connected(g)) return false;
  std::vector<int> d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  if (d[0] != n / 2 || d[1] != n / 2) return false;
  return std::all_of(d.begin() + 2, d.end(), [](int x) { return x == 1; });
}

LemmaReport degree_squares(const Graph& g, const SpectralSummary& s, Tolerance tol) {
  if (s.n() < 2) return not_applicable(LemmaId::DegreeSquares, "n < 2");
  const auto b = degree_square_bound(s, tol);
  LemmaReport r{LemmaId::DegreeSquares, verdict(b.holds), b.lhs, b.rhs, b.equality, {}};
  if (s.connected()) {
    const bool family = is_star(g) || is_complete(g);
    if (b.equality != family) {
      r.status = LemmaStatus::Fail;
      r.detail = b.equality ? "equality off the star/complete families" : "no equality on star/complete";
    }
  }
  return r;
}

LemmaReport bipartite_spectra(const SpectralSummary& s, Tolerance tol) {
  if (s.n() < 1) return not_applicable(LemmaId::BipartiteSpectra, "null graph");
  double diff = 0;
  for (int i = 1; i <= s.n(); ++i) diff = std::max(diff, std::abs(s.mu(i) - s.q(i)));
  const double eps = tol.scaled(s.q(1));
  const bool coincide = diff <= eps;
  LemmaReport r{LemmaId::BipartiteSpectra, verdict(coincide == s.bipartite()), diff, eps, coincide, {}};
  r.detail = coincide ? "spectra coincide" : "spectra differ";
  return r;
}

LemmaReport tree_products(const SpectralSummary& s) {
  if (!s.connected()) return not_applicable(LemmaId::TreeProducts, "disconnected");
  if (s.n() < 2) return not_applicable(LemmaId::TreeProducts, "n < 2");
  const int n = s.n();
  double prod_mu = 1;
  double prod_q_head = 1;
  for (int i = 1; i <= n - 1; ++i) {
    prod_mu *= s.mu(i);
    prod_q_head *= s.q(i);
  }
  const double nt = n * s.spanning_trees().value;
  bool ok = close_rel(prod_mu, nt, kIdentityRelTol);
  LemmaReport r{LemmaId::TreeProducts, LemmaStatus::Pass, prod_mu, nt, true, {}};
  if (s.bipartite()) {
    ok = ok && close_rel(prod_q_head, nt, kIdentityRelTol);
    r.detail = "prod_{i<n} q_i = " + std::to_string(prod_q_head);
  } else {
    const double prod_q = prod_q_head * s.q(n);
    const double t1 = s.t1().value_or(std::nan(""));
    ok = ok && close_rel(prod_q, t1, kIdentityRelTol);
    r.detail = "prod q_i = " + std::to_string(prod_q) + ", t1 = " + std::to_string(t1);
  }
  r.status = verdict(ok);
  r.equality = ok;
  return r;
}

LemmaReport signless_top(const Graph& g, const SpectralSummary& s, Tolerance tol) {
  if (!s.connected()) return not_applicable(LemmaId::SignlessTop, "disconnected");
  if (s.n() < 3) return not_applicable(LemmaId::SignlessTop, "n < 3");
  const double q1 = s.q(1);
  const double T = *s.bigT();
  const double floor = s.max_degree() + 1.0;
  const double eps = tol.scaled(q1);
  const bool star = is_star(g);
  const bool top_eq = std::abs(q1 - T) <= eps;
  const bool chain_eq = std::abs(q1 - floor) <= eps;
  bool ok = q1 >= T - eps && T >= floor - eps;
  LemmaReport r{LemmaId::SignlessTop, LemmaStatus::Pass, q1, T, top_eq, {}};
  if (top_eq != star) {
    ok = false;
    r.detail = top_eq ? "q1 = T off the star" : "q1 > T on a star";
  } else if (chain_eq != star) {
    ok = false;
    r.detail = chain_eq ? "q1 = D1+1 off the star" : "q1 > D1+1 on a star";
  } else if (std::abs(T - floor) <= eps) {
    r.detail = "T = D1+1 (min degree 1)";
  }
  r.status = verdict(ok);
  return r;
}

LemmaReport signless_second(const SpectralSummary& s, Tolerance tol) {
  if (s.n() < 2) return not_applicable(LemmaId::SignlessSecond, "n < 2");
  const double q2 = s.q(2);
  const double target = s.second_max_degree() - 1.0;
  const double eps = tol.scaled(q2);
  LemmaReport r{LemmaId::SignlessSecond, verdict(q2 >= target - eps), q2, target, std::abs(q2 - target) <= eps, {}};
  if (r.equality) r.detail = "q2 = D2-1 (observation)";
  return r;
}

LemmaReport signless_bottom(const SpectralSummary& s, Tolerance tol) {
  if (!s.connected()) return not_applicable(LemmaId::SignlessBottom, "disconnected");
  if (s.n() < 2) return not_applicable(LemmaId::SignlessBottom, "n < 2");
  const double qn = s.q(s.n());
  const double d = s.min_degree();
  return {LemmaId::SignlessBottom, verdict(d - qn > tol.scaled(d)), qn, d, false, {}};
}

LemmaReport distinct_count(const Graph& g, const SpectralSummary& s) {
  if (!s.connected()) return not_applicable(LemmaId::DistinctCount, "disconnected");
  if (s.n() < 1) return not_applicable(LemmaId::DistinctCount, "null graph");
  const double diam = *diameter(g);
  const double distinct = s.distinct_signless_count();
  return {LemmaId::DistinctCount, verdict(diam + 1 <= distinct), diam + 1, distinct, diam + 1 == distinct, {}};
}

LemmaReport laplacian_second(const Graph& g, const SpectralSummary& s, Tolerance tol) {
  if (!s.connected()) return not_applicable(LemmaId::LaplacianSecond, "disconnected");
  if (s.n() < 3) return not_applicable(LemmaId::LaplacianSecond, "n < 3");
  const double mu2 = s.mu(2);
  const double d2 = s.second_max_degree();
  const double eps = tol.scaled(mu2);
  const bool eq = std::abs(mu2 - d2) <= eps;
  LemmaReport r{LemmaId::LaplacianSecond, verdict(mu2 >= d2 - eps), mu2, d2, eq, {}};
  if (is_complete_bipartite(g) || is_double_star(g)) {
    if (!eq) {
      r.status = LemmaStatus::Fail;
      r.detail = "expected mu2 = D2 on this family";
    } else {
      r.detail = "equality family";
    }
  }
  return r;
}

LemmaReport algebraic_connectivity(const Graph& g, const SpectralSummary& s, Tolerance tol) {
  if (s.n() < 2) return not_applicable(LemmaId::AlgebraicConnectivity, "n < 2");
  if (is_complete(g)) return not_applicable(LemmaId::AlgebraicConnectivity, "complete graph");
  const double mu = s.mu(s.n() - 1);
  const double d = s.min_degree();
  return {LemmaId::AlgebraicConnectivity, verdict(mu <= d + tol.scaled(d)), mu, d,
          std::abs(mu - d) <= tol.scaled(d), {}};
}

LemmaReport flat_laplacian(const Graph& g, const SpectralSummary& s, Tolerance tol) {
  if (s.n() < 2) return not_applicable(LemmaId::FlatLaplacian, "n < 2");
  const double top = s.mu(1);
  const double low = s.mu(s.n() - 1);
  const bool flat = top - low <= tol.scaled(top);
  const bool family = is_complete(g) || g.size() == 0;
  LemmaReport r{LemmaId::FlatLaplacian, verdict(flat == family), top, low, flat, {}};
  if (flat != family) r.detail = flat ? "flat spectrum off K_n / empty" : "spectrum not flat on K_n / empty";
  return r;
}

}  // namespace

std::string_view lemma_name(LemmaId id) {
  for (const auto& entry : kLemmaNames)
    if (entry.id == id) return entry.name;
  return "L?";
}

std::string_view status_name(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::Pass: return "pass";
    case LemmaStatus::Fail: return "fail";
    case LemmaStatus::NotApplicable: return "n/a";
  }
  return "?";
}

std::vector<LemmaReport> lemma_suite(const Graph& g, const SpectralSummary& s, Tolerance tol) {
  return {
      degree_squares(g, s, tol),
      bipartite_spectra(s, tol),
      tree_products(s),
      signless_top(g, s, tol),
      signless_second(s, tol),
      signless_bottom(s, tol),
      distinct_count(g, s),
      laplacian_second(g, s, tol),
      algebraic_connectivity(g, s, tol),
      flat_laplacian(g, s, tol),
  };
}

AmgmGap weighted_amgm_gap(std::span<const double> values, std::span<const double> weights) {
  if (values.empty() || values.size() != weights.size()) {
    throw std::invalid_argument("weighted_amgm_gap: values and weights must be non-empty and equal length");
  }
  for (double a : values)
    if (!(a > 0)) throw std::invalid_argument("weighted_amgm_gap: values must be positive");
  for (double p : weights)
    if (!(p >= 0)) throw std::invalid_argument("weighted_amgm_gap: weights must be non-negative");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("weighted_amgm_gap: weights must sum to 1");

  const double n = static_cast<double>(values.size());
  double weighted_mean = 0, weighted_log = 0, mean = 0, mean_log = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    weighted_mean += weights[i] * values[i];
    weighted_log += weights[i] * std::log(values[i]);
    mean += values[i] / n;
    mean_log += std::log(values[i]) / n;
  }
  const double lambda = *std::min_element(weights.begin(), weights.end());
  return {weighted_mean - std::exp(weighted_log), n * lambda * (mean - std::exp(mean_log))};
}

bool KoberChain::monotone(double eps) const {
  for (std::size_t i = 1; i < steps.size(); ++i)
    if (steps[i].scaled < steps[i - 1].scaled - eps) return false;
  return true;
}

KoberChain kober_chain(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("kober_chain needs at least two values");
  for (double a : values)
    if (!(a > 0)) throw std::invalid_argument("kober_chain: values must be positive");

  KoberChain chain;
  double sum = values[0];
  double log_sum = std::log(values[0]);
  for (std::size_t i = 1; i < values.size(); ++i) {
    sum += values[i];
    log_sum += std::log(values[i]);
    const int p = static_cast<int>(i + 1);
    const double gap = sum / p - std::exp(log_sum / p);
    chain.steps.push_back({p, gap, p * gap});
  }
  const double p = static_cast<double>(values.size());
  chain.mean = sum / p;
  const double root_gap = std::sqrt(values[0]) - std::sqrt(values[1]);
  chain.mean_lower_bound = std::exp(log_sum / p) + root_gap * root_gap / p;
  return chain;
}

}  // namespace signless
