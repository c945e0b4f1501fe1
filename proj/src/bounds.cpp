#include "signless/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace signless {

namespace {

constexpr BoundInfo kCatalog[] = {
    {BoundId::EQ2, "EQ2", Direction::Upper, false, false, "any graph, n>=2"},
    {BoundId::EQ4, "EQ4", Direction::Upper, false, false, "connected bipartite, 1<=k<=n-2"},
    {BoundId::EQ5, "EQ5", Direction::Upper, false, false, "connected non-bipartite, 1<=k<=n-1"},
    {BoundId::EQ6, "EQ6", Direction::Upper, false, true, "connected non-bipartite, 1<=k<=n-1"},
    {BoundId::EQ7, "EQ7", Direction::Upper, false, false, "bipartite, n>=2, 0<alpha<1, 1<=k<=n-2"},
    {BoundId::EQ8, "EQ8", Direction::Lower, false, false, "bipartite, n>=2, alpha>1, 1<=k<=n-2"},
    {BoundId::EQ9, "EQ9", Direction::Upper, false, false, "connected bipartite, alpha<0, min over 1<=k<=n-2"},
    {BoundId::EQ10, "EQ10", Direction::Upper, false, false, "non-bipartite, n>=2, 0<alpha<1, 1<=k<=n-1"},
    {BoundId::EQ11, "EQ11", Direction::Lower, false, false, "non-bipartite, n>=2, alpha>1, 1<=k<=n-1"},
    {BoundId::EQ12, "EQ12", Direction::Upper, false, false,
     "connected non-bipartite, alpha<0, min over 1<=k<=n-1"},
    {BoundId::EQ16, "EQ16", Direction::Lower, true, false, "connected bipartite, n>=3, alpha!=0,1, real k>=0"},
    {BoundId::EQ17, "EQ17", Direction::Lower, true, false,
     "connected non-bipartite, n>=3, alpha!=0,1, real k>=0"},
    {BoundId::EQ18, "EQ18", Direction::Lower, false, true,
     "connected non-bipartite, n>=3, alpha!=0,1, real k>=0"},
    {BoundId::EQ19, "EQ19", Direction::Lower, true, false, "connected bipartite, n>=3, alpha!=0,1"},
    {BoundId::EQ20, "EQ20", Direction::Lower, true, false, "connected non-bipartite, n>=3, alpha!=0,1"},
    {BoundId::EQ21, "EQ21", Direction::Lower, true, false, "connected bipartite, n>=3"},
    {BoundId::EQ22, "EQ22", Direction::Lower, true, false, "connected non-bipartite, n>=3"},
    {BoundId::EQ23, "EQ23", Direction::Lower, false, false, "connected bipartite, n>=3, alpha!=0,1"},
    {BoundId::EQ24, "EQ24", Direction::Lower, true, false, "connected non-bipartite, n>=3, alpha!=0,1"},
    {BoundId::EQ26, "EQ26", Direction::Lower, true, true, "connected non-bipartite, n>=3, alpha!=0,1"},
    {BoundId::EQ27, "EQ27", Direction::Lower, false, false, "connected bipartite, n>=3"},
    {BoundId::EQ28, "EQ28", Direction::Lower, true, false, "connected non-bipartite, n>=3"},
};

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_nontrivial(Alpha a) {
  if (a.trivial()) throw std::invalid_argument("bound evaluators need alpha != 0, 1");
  if (!std::isfinite(a.value)) throw std::invalid_argument("alpha must be finite");
}

/// Common hypotheses of the AM-GM and Kober families; returns n*t or t1.
double spanning_quantity(const SpectralSummary& s) {
  if (!s.connected()) throw HypothesisError("requires a connected graph");
  if (s.n() < 3) throw HypothesisError("requires n >= 3");
  if (s.bipartite()) {
    const double t = s.spanning_trees().value;
    if (!(t > 0)) throw HypothesisError("requires t > 0");
    return s.n() * t;
  }
  const auto t1 = s.t1();
  if (!t1 || !(*t1 > 0)) throw HypothesisError("requires t1 > 0");
  return *t1;
}

std::optional<std::string> zero_note(const PowerSum& p) {
  if (p.zero_excluded) return std::string("s_alpha excludes q_n=0");
  return std::nullopt;
}

}  // namespace

std::span<const BoundInfo> bound_catalog() { return kCatalog; }

const BoundInfo& bound_info(BoundId id) {
  for (const auto& info : kCatalog)
    if (info.id == id) return info;
  throw std::invalid_argument("unknown bound id");
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (const auto& info : kCatalog)
    if (info.name == name) return info.id;
  return std::nullopt;
}

double Tolerance::scaled(double lhs) const { return relative * std::max(1.0, std::abs(lhs)); }

BoundReport BoundReport::evaluate(BoundId id, std::optional<double> alpha, std::optional<double> k, double lhs,
                                  double rhs, Tolerance tol) {
  BoundReport r;
  r.bound = id;
  r.alpha = alpha;
  r.k = k;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = bound_info(id).direction == Direction::Upper ? rhs - lhs : lhs - rhs;
  const double eps = tol.scaled(lhs);
  r.holds = r.slack >= -eps;
  r.equality = std::abs(r.slack) <= eps;
  return r;
}

BoundReport BoundReport::not_applicable(BoundId id, std::optional<double> alpha, std::optional<double> k,
                                        std::string reason) {
  BoundReport r;
  r.bound = id;
  r.alpha = alpha;
  r.k = k;
  r.lhs = r.rhs = r.slack = std::numeric_limits<double>::quiet_NaN();
  r.not_applicable_reason = std::move(reason);
  return r;
}

BoundReport degree_square_bound(const SpectralSummary& s, Tolerance tol) {
  if (s.n() < 2) throw HypothesisError("requires n >= 2");
  const double n = s.n();
  const double m = s.m();
  const double rhs = m * (2.0 * m / (n - 1.0) + n - 2.0);
  return BoundReport::evaluate(BoundId::EQ2, std::nullopt, std::nullopt,
                               static_cast<double>(s.degree_square_sum()), rhs, tol);
}

BoundEvaluation mk_upper_bound(const SpectralSummary& s, int k, Tolerance tol) {
  if (!s.connected()) throw HypothesisError("requires a connected graph");
  const int n = s.n();
  const int k_max = s.bipartite() ? n - 2 : n - 1;
  if (k < 1 || k > k_max) {
    throw std::out_of_range("k=" + std::to_string(k) + " outside 1.." + std::to_string(k_max));
  }
  const double nn = n;
  const double m = s.m();
  const double kk = k;
  const double lhs = partial_sum_Mk(s, k);

  if (s.bipartite()) {
    const double root = std::sqrt(std::max(0.0, m * kk * (nn - kk - 1.0) * (nn * nn - nn - 2.0 * m)));
    const double rhs = (2.0 * m * kk + root) / (nn - 1.0);
    return {BoundReport::evaluate(BoundId::EQ4, std::nullopt, kk, lhs, rhs, tol), std::nullopt};
  }

  const double root = std::sqrt(std::max(0.0, m * kk * (nn - kk) * (nn * nn + 2.0 * m * nn / (nn - 1.0) - 4.0 * m)));
  const double rhs = (2.0 * m * kk + root) / nn;
  const double sq = static_cast<double>(s.degree_square_sum());
  const double exact_root = std::sqrt(std::max(0.0, kk * (nn - kk) * (nn * (2.0 * m + sq) - 4.0 * m * m)));
  const double exact_rhs = (2.0 * m * kk + exact_root) / nn;
  return {BoundReport::evaluate(BoundId::EQ5, std::nullopt, kk, lhs, rhs, tol),
          BoundReport::evaluate(BoundId::EQ6, std::nullopt, kk, lhs, exact_rhs, tol)};
}

namespace {

/// k^{1-a} x^a + r^{1-a} (2m - x)^a with r the number of trailing
/// eigenvalues: the power-mean form shared by EQ7, EQ8, EQ10, EQ11.
double power_mean_form(double k, double rest, double a, double head, double tail) {
  return std::pow(k, 1.0 - a) * std::pow(head, a) + std::pow(rest, 1.0 - a) * std::pow(tail, a);
}

/// Term x^a for a < 0; non-positive bases make the whole candidate unusable.
double negative_power_or_inf(double x, double a) { return x > 0 ? std::pow(x, a) : kInf; }

}  // namespace

BoundReport power_sum_bound(const SpectralSummary& s, Alpha a, int k, Tolerance tol) {
  require_nontrivial(a);
  const int n = s.n();
  if (n < 2) throw HypothesisError("requires n >= 2");
  const bool bip = s.bipartite();
  // Bipartite graphs spread 2m over the n-1 eigenvalues that can be non-zero.
  const int denom = bip ? n - 1 : n;
  const int k_max = bip ? n - 2 : n - 1;
  const double nn = n;
  const double m = s.m();
  const double alpha = a.value;

  if (alpha < 0) {
    if (!s.connected()) throw HypothesisError("alpha < 0 requires a connected graph");
    if (k_max < 1) throw HypothesisError("no admissible k");
    const PowerSum lhs = s_alpha(s, a);
    const double factor = bip ? (nn * nn - nn - 2.0 * m) : (nn * nn + 2.0 * m * nn / (nn - 1.0) - 4.0 * m);
    double best = kInf;
    int best_k = 1;
    for (int j = 1; j <= k_max; ++j) {
      const double kk = j;
      const double rest = denom - kk;
      const double root = std::sqrt(std::max(0.0, m * kk * rest * factor));
      const double head = (2.0 * m * kk + root) / denom;
      const double tail = (2.0 * m * rest - root) / denom;
      const double value = std::pow(kk, 1.0 - alpha) * negative_power_or_inf(head, alpha) +
                           std::pow(rest, 1.0 - alpha) * negative_power_or_inf(tail, alpha);
      if (value < best) {
        best = value;
        best_k = j;
      }
    }
    auto r = BoundReport::evaluate(bip ? BoundId::EQ9 : BoundId::EQ12, alpha, best_k, lhs.value, best, tol);
    r.note = zero_note(lhs);
    return r;
  }

  if (k < 1 || k > k_max) {
    throw std::out_of_range("k=" + std::to_string(k) + " outside 1.." + std::to_string(k_max));
  }
  const double kk = k;
  const double head = 2.0 * m * kk / denom;
  const double rhs = power_mean_form(kk, denom - kk, alpha, head, 2.0 * m - head);
  const double lhs = s_alpha(s, a).value;
  BoundId id;
  if (alpha < 1) {
    id = bip ? BoundId::EQ7 : BoundId::EQ10;
  } else {
    id = bip ? BoundId::EQ8 : BoundId::EQ11;
  }
  return BoundReport::evaluate(id, alpha, kk, lhs, rhs, tol);
}

double amgm_rhs(bool bipartite, int n, double spanning, double top, double alpha, double k) {
  const double nn = n;
  // Bipartite graphs have n-1 non-zero eigenvalues, of which n-2 follow q_1.
  const double rest = bipartite ? nn - 2.0 : nn - 1.0;
  const double count = rest + 1.0;
  const double bracket =
      (k + 1.0) * std::pow(spanning, alpha / ((k + 1.0) * count * rest)) / std::pow(top, alpha / ((k + 1.0) * rest)) -
      k;
  return rest * std::pow(spanning, alpha / count) * bracket + std::pow(top, alpha);
}

double kober_rhs(bool bipartite, int n, double spanning, double top, double alpha, int second_max_degree,
                 int min_degree) {
  const double rest = bipartite ? n - 2.0 : n - 1.0;
  const double second = bipartite ? second_max_degree : second_max_degree - 1.0;
  const double gap = std::pow(second, alpha / 2.0) - std::pow(static_cast<double>(min_degree), alpha / 2.0);
  return std::pow(top, alpha) + rest * std::pow(spanning / top, alpha / rest) + gap * gap;
}

namespace {

/// The EQ18 expression, written as in the proof rather than through amgm_rhs.
double amgm_diagnostic_rhs(int n, double t1, double q1, double alpha, double k) {
  const double nn = n;
  const double num_exp = ((k + 1.0) * nn - k) * alpha / ((k + 1.0) * nn * (nn - 1.0));
  const double den_exp = alpha / ((k + 1.0) * (nn - 1.0));
  return (nn - 1.0) * ((k + 1.0) * std::pow(t1, num_exp) / std::pow(q1, den_exp) + std::pow(q1, alpha) / (nn - 1.0) -
                       k * std::pow(t1, alpha / nn));
}

}  // namespace

BoundEvaluation amgm_bound(const SpectralSummary& s, Alpha a, double k, Tolerance tol) {
  require_nontrivial(a);
  if (!(k >= 0) || !std::isfinite(k)) throw std::invalid_argument("amgm_bound needs real k >= 0");
  const double spanning = spanning_quantity(s);
  const bool bip = s.bipartite();
  const double T = *s.bigT();
  const PowerSum lhs = s_alpha(s, a);

  auto primary = BoundReport::evaluate(bip ? BoundId::EQ16 : BoundId::EQ17, a.value, k, lhs.value,
                                       amgm_rhs(bip, s.n(), spanning, T, a.value, k), tol);
  primary.note = zero_note(lhs);
  if (bip) return {primary, std::nullopt};
  auto diag = BoundReport::evaluate(BoundId::EQ18, a.value, k, lhs.value,
                                    amgm_diagnostic_rhs(s.n(), spanning, s.q(1), a.value, k), tol);
  return {primary, diag};
}

BoundReport amgm_corollary_bound(const SpectralSummary& s, Alpha a, Tolerance tol) {
  auto r = amgm_bound(s, a, 1.0, tol).primary;
  r.bound = s.bipartite() ? BoundId::EQ19 : BoundId::EQ20;
  return r;
}

BoundReport ie_amgm_bound(const SpectralSummary& s, Tolerance tol) {
  auto r = amgm_bound(s, Alpha(0.5), 1.0, tol).primary;
  r.bound = s.bipartite() ? BoundId::EQ21 : BoundId::EQ22;
  return r;
}

BoundEvaluation kober_bound(const SpectralSummary& s, Alpha a, Tolerance tol) {
  require_nontrivial(a);
  const double spanning = spanning_quantity(s);
  const bool bip = s.bipartite();
  const double T = *s.bigT();
  const PowerSum lhs = s_alpha(s, a);
  const int d2 = s.second_max_degree();
  const int d = s.min_degree();

  auto primary = BoundReport::evaluate(bip ? BoundId::EQ23 : BoundId::EQ24, a.value, std::nullopt, lhs.value,
                                       kober_rhs(bip, s.n(), spanning, T, a.value, d2, d), tol);
  primary.note = zero_note(lhs);
  if (bip) return {primary, std::nullopt};
  auto diag = BoundReport::evaluate(BoundId::EQ26, a.value, std::nullopt, lhs.value,
                                    kober_rhs(false, s.n(), spanning, s.q(1), a.value, d2, d), tol);
  return {primary, diag};
}

BoundReport ie_kober_bound(const SpectralSummary& s, Tolerance tol) {
  auto r = kober_bound(s, Alpha(0.5), tol).primary;
  r.bound = s.bipartite() ? BoundId::EQ27 : BoundId::EQ28;
  return r;
}

std::vector<TightnessRecord> tightness_compare(const SpectralSummary& s, Alpha a, double k, Tolerance tol) {
  require_nontrivial(a);
  if (!(k >= 0) || !std::isfinite(k)) throw std::invalid_argument("tightness_compare needs real k >= 0");
  const double spanning = spanning_quantity(s);
  const bool bip = s.bipartite();
  const double T = *s.bigT();
  const double weak = s.max_degree() + 1.0;

  auto record = [&](BoundId id, std::optional<double> kk, double with_T, double with_degree) {
    const double margin = with_T - with_degree;
    return TightnessRecord{id, a.value, kk, with_T, with_degree, margin, margin >= -tol.scaled(with_T)};
  };
  return {
      record(bip ? BoundId::EQ16 : BoundId::EQ17, k, amgm_rhs(bip, s.n(), spanning, T, a.value, k),
             amgm_rhs(bip, s.n(), spanning, weak, a.value, k)),
      record(bip ? BoundId::EQ23 : BoundId::EQ24, std::nullopt,
             kober_rhs(bip, s.n(), spanning, T, a.value, s.second_max_degree(), s.min_degree()),
             kober_rhs(bip, s.n(), spanning, weak, a.value, s.second_max_degree(), s.min_degree())),
  };
}

namespace proof {

PowerMeanSteps power_mean_steps(const SpectralSummary& s, double alpha, int k) {
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("power_mean_steps needs 0 < alpha < 1");
  const int n = s.n();
  const double mk = partial_sum_Mk(s, k);
  const double two_m = 2.0 * s.m();
  PowerMeanSteps out{};
  for (int i = 1; i <= n; ++i) (i <= k ? out.head_lhs : out.tail_lhs) += std::pow(s.q(i), alpha);
  out.head_rhs = std::pow(static_cast<double>(k), 1.0 - alpha) * std::pow(mk, alpha);
  out.tail_rhs = std::pow(static_cast<double>(n - k), 1.0 - alpha) * std::pow(std::max(0.0, two_m - mk), alpha);
  out.split_lhs = mk;
  out.split_rhs = two_m * k / n;
  return out;
}

}  // namespace proof

}  // namespace signless
