// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpi/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <json.hpp>

#include "qpi/errors.hpp"

namespace qpi {
namespace {

void require_h(std::size_t h, std::size_t n) {
  if (n == 0) throw ParameterError("n must be positive");
  if (2 * h > n) throw ParameterError("h = " + std::to_string(h) + " exceeds n/2 for n = " + std::to_string(n));
}

}  // namespace

double error_bound(std::size_t h, std::size_t n, double x_norm) {
  require_h(h, n);
  const double hd = static_cast<double>(h);
  return 2.0 * x_norm * std::sqrt(hd * (1.0 - hd / static_cast<double>(n)));
}

double relative_error_bound(std::size_t h, std::size_t n) {
  require_h(h, n);
  const double hd = static_cast<double>(h);
  const double nd = static_cast<double>(n);
  return std::sqrt(hd * (1.0 - hd / nd)) / std::sqrt(nd);
}

double mi_achieved(std::size_t n, std::size_t t, std::size_t h) {
  const GammaSpec spec{n, t, h, GammaRule::kAtMostH};
  return static_cast<double>(n) - static_cast<double>(t) - log2_big(count_gamma(spec));
}

double mi_of_members(const GammaSpec& spec) {
  return static_cast<double>(spec.n) - static_cast<double>(spec.t) - log2_big(count_gamma_members(spec));
}

double closew_bound(double epsilon, std::size_t n) {
  if (n == 0) throw ParameterError("closew_bound: n must be positive");
  if (epsilon < 0) throw ParameterError("closew_bound: epsilon must be non-negative");
  return epsilon * std::sqrt(std::log(static_cast<double>(n)) + 1.0);
}

double closew_bound_harmonic(double epsilon, std::size_t n) {
  if (n == 0) throw ParameterError("closew_bound_harmonic: n must be positive");
  if (epsilon < 0) throw ParameterError("closew_bound_harmonic: epsilon must be non-negative");
  return epsilon * std::sqrt(harmonic(n));
}

BigInt mu_bound(std::size_t ell, std::size_t n, double eps_prime) {
  if (ell < 1 || ell > n) {
    throw ParameterError("mu_bound: need 1 <= l <= n (l = " + std::to_string(ell) + ", n = " + std::to_string(n) + ")");
  }
  if (!(eps_prime >= 0)) throw ParameterError("mu_bound: eps' must be non-negative");
  const BigInt orthants = orthant_cell_bound(n, ell);
  const BigInt ball = binomial_prefix_sum(n, floor_square(eps_prime));
  return orthants * ball;
}

MiLowerBound mi_lower(std::size_t n, std::size_t ell, double epsilon) {
  MiLowerBound out;
  out.eps_prime = closew_bound(epsilon, n);
  out.eps_prime_sq_floor = floor_square(out.eps_prime);
  out.mu = mu_bound(ell, n, out.eps_prime);
  out.bits = static_cast<double>(n) - log2_big(out.mu);
  out.clamped_bits = out.bits > 0 ? out.bits : 0.0;
  if (std::numbers::e <= out.eps_prime * out.eps_prime) {
    const double lg = std::log2(static_cast<double>(n));
    out.closed_form_bits = static_cast<double>(n) - static_cast<double>(ell) * lg - epsilon * epsilon * lg * lg - 1.0;
  }
  return out;
}

double binomial_sum_bound(std::size_t m, std::size_t n) {
  if (m < 1 || m > n) {
    throw ParameterError("binomial_sum_bound: need 1 <= m <= n (m = " + std::to_string(m) +
                         ", n = " + std::to_string(n) + ")");
  }
  const double md = static_cast<double>(m);
  return std::pow(std::numbers::e * static_cast<double>(n) / md, md);
}

BigInt orthant_cell_bound(std::size_t hyperplanes, std::size_t ell) {
  if (hyperplanes < 1 || ell < 1) throw ParameterError("orthant_cell_bound: need n >= 1 and l >= 1");
  return 2 * binomial_prefix_sum(hyperplanes - 1, ell - 1);
}

double orthant_distance(const SignVector& signature, const SignVector& v) {
  return std::sqrt(static_cast<double>(hamming_distance(signature, v)));
}

BoundReport report(std::size_t n, std::size_t t, std::size_t h, std::size_t ell, double epsilon) {
  const GammaSpec spec{n, t, h, GammaRule::kAtMostH};
  spec.validate();
  BoundReport r;
  r.n = n;
  r.t = t;
  r.h = h;
  r.ell = ell;
  r.epsilon = epsilon;
  r.error_bound = error_bound(h, n, 1.0);
  r.relative_error_bound = relative_error_bound(h, n);
  r.gamma_count = count_gamma(spec);
  r.gamma_members = count_gamma_members(spec);
  r.mi_achieved_bits = static_cast<double>(n) - static_cast<double>(t) - log2_big(r.gamma_count);
  r.mi_members_bits = static_cast<double>(n) - static_cast<double>(t) - log2_big(r.gamma_members);
  const MiLowerBound lower = mi_lower(n, ell, epsilon);
  r.eps_prime = lower.eps_prime;
  r.mu = lower.mu;
  r.mi_lower_bits = lower.bits;
  r.mi_lower_closed_form_bits = lower.closed_form_bits;
  r.gap_bits = r.mi_achieved_bits - r.mi_lower_bits;
  r.gap_violated = r.gap_bits < 0;
  r.publication_bits = n - t;
  return r;
}

std::string BoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["t"] = t;
  j["h"] = h;
  j["ell"] = ell;
  j["epsilon"] = epsilon;
  j["eps_prime"] = eps_prime;
  j["publication_bits"] = publication_bits;
  j["error_bound"] = error_bound;
  j["relative_error_bound"] = relative_error_bound;
  j["gamma_count"] = gamma_count.str();
  j["gamma_members"] = gamma_members.str();
  j["mi_achieved_bits"] = mi_achieved_bits;
  j["mi_members_bits"] = mi_members_bits;
  j["mu"] = mu.str();
  j["mi_lower_bits"] = mi_lower_bits;
  j["mi_lower_clamped_bits"] = mi_lower_bits > 0 ? mi_lower_bits : 0.0;
  if (mi_lower_closed_form_bits) {
    j["mi_lower_closed_form_bits"] = *mi_lower_closed_form_bits;
  } else {
    j["mi_lower_closed_form_bits"] = nullptr;
  }
  j["gap_bits"] = gap_bits;
  j["gap_violated"] = gap_violated;
  return j.dump(2) + "\n";
}

RegimeComparison compare_regime(std::size_t n, std::size_t t, std::size_t h) {
  RegimeComparison c;
  c.n = n;
  c.t = t;
  c.h = h;
  const double nd = static_cast<double>(n);
  const double lg = std::log2(nd);
  c.scheme_bits = mi_achieved(n, t, h);
  c.scheme_expression = nd - static_cast<double>(t) - static_cast<double>(h) * lg;
  c.lower_bits = mi_lower(n, t, 2.0 * std::sqrt(static_cast<double>(h))).bits;
  c.lower_expression = nd - static_cast<double>(t) * lg - 4.0 * static_cast<double>(h) * lg * lg;
  return c;
}

}  // namespace qpi
