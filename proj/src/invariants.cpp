#include "signless/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace signless {

namespace {

double power(double x, double a) {
  if (x == 0.0) {
    if (a > 0) return 0.0;
    throw std::domain_error("negative power of a zero eigenvalue");
  }
  return std::pow(x, a);
}

}  // namespace

PowerSum s_alpha(const SpectralSummary& s, Alpha a) {
  if (a.value == 0.0) return {static_cast<double>(s.n()), false};
  if (a.value == 1.0) return {2.0 * s.m(), false};

  PowerSum out;
  const auto& q = s.signless_spectrum();
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    if (a.value < 0 && q[i] == 0.0 && s.bipartite() && s.connected() && i == q.size() - 1) {
      out.zero_excluded = true;
      continue;
    }
    out.value += power(q[i], a.value);
  }
  return out;
}

double sigma_alpha(const SpectralSummary& s, Alpha a) {
  if (s.n() == 0) return 0.0;
  if (a.value == 0.0) return s.n() - 1.0;
  if (a.value == 1.0) return 2.0 * s.m();
  double total = 0;
  for (int i = 1; i <= s.n() - 1; ++i) total += power(s.mu(i), a.value);
  return total;
}

double incidence_energy(const SpectralSummary& s) {
  double total = 0;
  for (double q : s.signless_spectrum()) total += std::sqrt(q);
  return total;
}

double lel(const SpectralSummary& s) {
  double total = 0;
  for (int i = 1; i <= s.n() - 1; ++i) total += std::sqrt(s.mu(i));
  return total;
}

double graph_energy(const SpectralSummary& s) {
  double total = 0;
  for (double x : s.adjacency_spectrum()) total += std::abs(x);
  return total;
}

double kirchhoff_index(const SpectralSummary& s) {
  if (!s.connected()) throw std::domain_error("Kirchhoff index requires a connected graph");
  return s.n() * sigma_alpha(s, Alpha(-1.0));
}

}  // namespace signless
