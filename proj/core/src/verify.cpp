// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>
#include <sstream>
#include <utility>

#include "qpi/bounds.hpp"
#include "qpi/gamma.hpp"
#include "qpi/hadamard.hpp"
#include "qpi/oracles.hpp"
#include "qpi/scheme.hpp"
#include "qpi/scheme_approx.hpp"
#include "qpi/scheme_exact.hpp"
#include "qpi/wire.hpp"

namespace qpi {
namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail_if(bool bad, const std::string& why) {
    if (bad && passed) {
      passed = false;
      detail << why << "; ";
    }
  }
};

using CheckFn = void (*)(std::uint64_t, Outcome&);

std::vector<double> random_x(std::size_t n, std::mt19937_64& rng) { return random_data_vector(n, 1.0, rng); }

Scheme make_scheme(std::size_t n, std::size_t t, std::size_t h) {
  SchemeParams params;
  params.n = n;
  params.t = t;
  params.h = h;
  return Scheme(params);
}

double dot(const SignVector& w, std::span<const double> x) { return w.dot(x); }

void check_hadamard(std::uint64_t, Outcome& o) {
  for (unsigned k = 0; k <= 6; ++k) {
    const auto l = sylvester(k);
    const auto status = validate_hadamard(l.rows()).status;
    o.fail_if(status != HadamardCheck::Status::kAccepted, "sylvester(" + std::to_string(k) + ") rejected");
  }
  o.detail << "sylvester orders 1..64 satisfy L L^T = t I";
}

void check_exact(std::uint64_t seed, Outcome& o) {
  auto rng = data_rng(seed);
  double worst = 0.0;
  for (auto [n, t] : {std::pair<std::size_t, std::size_t>{4, 2}, {16, 4}, {64, 8}, {256, 8}}) {
    const Scheme scheme = make_scheme(n, t, 0);
    for (int i = 0; i < 100; ++i) {
      const auto w = random_sign_vector(n, rng);
      const auto x = random_x(n, rng);
      worst = std::max(worst, std::abs(exact_infer(w, x, scheme) - dot(w, x)));
    }
  }
  o.fail_if(worst > 1e-9, "max error " + std::to_string(worst));
  o.detail << "exact scheme max |error| = " << worst;
}

void check_closest(std::uint64_t seed, Outcome& o) {
  auto rng = data_rng(seed + 1);
  double worst = 0.0;
  for (auto [n, t] : {std::pair<std::size_t, std::size_t>{12, 4}, {16, 4}, {32, 8}, {64, 8}}) {
    const Scheme scheme = make_scheme(n, t, 0);
    for (int i = 0; i < 50; ++i) {
      const auto w = random_sign_vector(n, rng);
      const auto u = random_sign_vector(n, rng);
      const auto fast = closest_vector(w, u, scheme.coding_matrix());
      const auto slow = oracle::brute_closest(w, u, scheme.coding_matrix());
      for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(fast[j] - slow[j]));
    }
  }
  o.fail_if(worst > 1e-9, "max deviation " + std::to_string(worst));
  o.detail << "closest_vector vs least squares, max deviation " << worst;
}

void check_distance(std::uint64_t seed, Outcome& o) {
  auto rng = data_rng(seed + 2);
  double worst = 0.0;
  for (auto [n, t] : {std::pair<std::size_t, std::size_t>{12, 4}, {16, 4}, {64, 8}}) {
    const Scheme scheme = make_scheme(n, t, 0);
    for (int i = 0; i < 100; ++i) {
      const auto w = random_sign_vector(n, rng);
      const auto u = random_sign_vector(n, rng);
      const auto wp = closest_vector(w, u, scheme.coding_matrix());
      double sq = 0.0;
      for (std::size_t j = 0; j < n; ++j) sq += (w[j] - wp[j]) * (w[j] - wp[j]);
      worst = std::max(worst, std::abs(std::sqrt(sq) - approx_distance(w, u, scheme.partition())));
    }
  }
  o.fail_if(worst > 1e-9, "max deviation " + std::to_string(worst));
  o.detail << "distance formula vs ||w - w'||, max deviation " << worst;
}

void check_shift_choice(std::uint64_t seed, Outcome& o) {
  auto rng = data_rng(seed + 3);
  const Scheme scheme = make_scheme(16, 4, 0);
  const auto& p = scheme.partition();
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto w = random_sign_vector(16, rng);
    const auto u = random_sign_vector(16, rng);
    SignVector v(16);
    for (std::size_t r = 0; r < p.t(); ++r) {
      if (rng() & 1U) v ^= p.indicator(r);
    }
    const auto a = closest_vector(w, u, scheme.coding_matrix());
    const auto b = closest_vector(w, oplus(u, v), scheme.coding_matrix());
    for (std::size_t j = 0; j < 16; ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
  }
  o.fail_if(worst > 1e-12, "closest vector depends on the shift representative");
  o.detail << "closest vector invariant under u' -> u' (+) v, v in V";
}

void check_distinct_cosets(std::uint64_t, Outcome& o) {
  for (std::size_t h = 0; h <= 3; ++h) {
    const GammaSpec spec{12, 4, h};
    const SyndromeMatrix m(BlockPartition(12, 4));
    const auto e = oracle::brute_gamma(spec);
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& g : e.members) {
      const auto s = syndrome(m, g);
      seen.insert(std::vector<std::uint64_t>(s.words().begin(), s.words().end()));
    }
    o.fail_if(seen.size() != e.members.size(), "two Gamma members share a coset at h=" + std::to_string(h));
  }
  o.detail << "Gamma members lie in distinct cosets (n=12, t=4, h<=3)";
}

void check_gamma_count(std::uint64_t, Outcome& o) {
  std::size_t cases = 0;
  std::size_t discrepancies = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    for (std::size_t t : {std::size_t{1}, std::size_t{2}, std::size_t{4}}) {
      if (n % t != 0) continue;
      for (std::size_t h = 0; 2 * h <= n; ++h) {
        for (auto rule : {GammaRule::kAtMostH, GammaRule::kLemmaConsistent}) {
          const GammaSpec spec{n, t, h, rule};
          const auto e = oracle::brute_gamma(spec);
          ++cases;
          o.fail_if(e.count_lemma != count_gamma(spec), "count_gamma disagrees at n=" + std::to_string(n));
          o.fail_if(e.count_members != count_gamma_members(spec),
                    "count_gamma_members disagrees at n=" + std::to_string(n));
          if (rule == GammaRule::kAtMostH && e.count_le != e.count_lemma) ++discrepancies;
        }
      }
    }
  }
  o.detail << cases << " cases agree with enumeration; " << discrepancies
           << " (n,t,h) where the at-most-h set differs from the closed-form count";
}

void check_mi(std::uint64_t, Outcome& o) {
  const auto lemma = oracle::brute_mi(GammaSpec{8, 2, 1, GammaRule::kLemmaConsistent});
  o.fail_if(std::abs(lemma.bits - 3.0) > 1e-9, "brute_mi(8,2,1) lemma set = " + std::to_string(lemma.bits));
  o.fail_if(std::abs(lemma.bits - mi_achieved(8, 2, 1)) > 1e-9, "mi_achieved(8,2,1) disagrees");
  for (auto rule : {GammaRule::kAtMostH, GammaRule::kLemmaConsistent}) {
    for (auto [n, t, h] : {std::tuple<std::size_t, std::size_t, std::size_t>{8, 2, 1}, {12, 4, 2}, {8, 2, 2}}) {
      const GammaSpec spec{n, t, h, rule};
      const auto mi = oracle::brute_mi(spec);
      const std::uint64_t support = (std::uint64_t{1} << t) * static_cast<std::uint64_t>(count_gamma_members(spec));
      o.fail_if(std::abs(mi.bits - mi_of_members(spec)) > 1e-9, "brute_mi disagrees with n - t - log2|Gamma|");
      o.fail_if(mi.min_support != support || mi.max_support != support || !mi.conditionals_uniform,
                "conditional support is not uniform of size 2^t |Gamma|");
    }
  }
  o.detail << "I(W;Q) exhaustive: (8,2,1) = " << lemma.bits << " bits on the closed-form set";
}

void check_worstcase(std::uint64_t, Outcome& o) {
  for (std::size_t h = 0; h <= 3; ++h) {
    const GammaSpec spec{12, 4, h};
    const auto wc = oracle::brute_worstcase_distance(spec);
    o.fail_if(wc.distance > error_bound(h, 12, 1.0) + 1e-12, "worst case exceeds the bound at h=" + std::to_string(h));
  }
  const auto lp = oracle::lagrange_minimum(3.0, 4);
  o.fail_if(std::abs(lp.value - 9.0 / 4.0) > 1e-12, "Lagrange optimum is not h^2/t");
  o.detail << "exact worst case <= 2 sqrt(h(1-h/n)) for n=12, t=4, h<=3";
}

void check_sessions(std::uint64_t seed, Outcome& o) {
  std::size_t sessions = 0;
  for (auto [n, t, h] : {std::tuple<std::size_t, std::size_t, std::size_t>{8, 2, 2}, {12, 4, 3}, {16, 4, 4},
                         {64, 8, 4}}) {
    const Scheme scheme = make_scheme(n, t, h);
    auto rng = data_rng(seed + 4);
    for (int i = 0; i < 200; ++i) {
      const auto w = random_sign_vector(n, rng);
      const auto x = random_x(n, rng);
      const auto tr = run_session(scheme, w, x, seed + static_cast<std::uint64_t>(i));
      ++sessions;
      o.fail_if(std::abs(tr.estimate - *tr.truth) > *tr.bound + 1e-9, "session error exceeds the bound");
      o.fail_if(!gamma_contains(tr.g, scheme.gamma_spec()), "sampled perturbation outside Gamma");
    }
  }
  o.detail << sessions << " sessions within 2 ||x|| sqrt(h(1-h/n))";
}

void check_neighborhood(std::uint64_t seed, Outcome& o) {
  auto rng = data_rng(seed + 5);
  for (int i = 0; i < 30; ++i) {
    const std::size_t ell = 1 + static_cast<std::size_t>(i % 3);
    const auto basis = oracle::random_subspace(ell, 10, rng);
    const double eps = 1.5;
    const auto count = oracle::brute_neighborhood(basis, eps);
    o.fail_if(BigInt(count) > mu_bound(ell, 10, eps), "neighborhood count exceeds mu");
  }
  o.detail << "|N(R, eps') cap {+-1}^10| <= mu on 30 random subspaces";
}

void check_orthants(std::uint64_t seed, Outcome& o) {
  auto rng = data_rng(seed + 6);
  std::size_t tight = 0;
  for (int i = 0; i < 10; ++i) {
    const auto basis = oracle::random_subspace(2, 6, rng);
    const auto est = oracle::brute_orthants(basis, 20000, rng);
    const auto bound = orthant_cell_bound(6, 2);
    o.fail_if(BigInt(est) > bound, "orthant estimate exceeds the cell bound");
    if (BigInt(est) == bound) ++tight;
  }
  o.fail_if(tight == 0, "no generic basis reached the cell bound");
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        const auto va = SignVector::from_words(n, std::vector<std::uint64_t>{a});
        const auto vb = SignVector::from_words(n, std::vector<std::uint64_t>{b});
        const double d = orthant_distance(va, vb);
        if (std::abs(d - oracle::clipped_orthant_distance(va, vb)) > 1e-12 ||
            std::abs(d * d - static_cast<double>(hamming_distance(va, vb))) > 1e-9) {
          o.fail_if(true, "orthant distance mismatch at n=" + std::to_string(n));
        }
      }
    }
  }
  o.detail << "orthant estimate <= cell bound (" << tight << "/10 tight); orthant distance = sqrt(d_H) for n<=8";
}

void check_binomial_sum(std::uint64_t, Outcome& o) {
  for (std::size_t n = 1; n <= 64; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      const double lhs = log2_big(binomial_prefix_sum(n, m));
      const double rhs = static_cast<double>(m) * std::log2(std::exp(1.0) * static_cast<double>(n) / m);
      o.fail_if(lhs > rhs + 1e-12, "binomial sum exceeds (en/m)^m at n=" + std::to_string(n));
    }
  }
  o.detail << "sum_{k<=m} binom(n,k) <= (en/m)^m for 1<=m<=n<=64";
}

void check_cascade(std::uint64_t, Outcome& o) {
  for (std::size_t n : {4, 16, 64, 256, 1024}) {
    const auto r = oracle::cascade_residual(n, 1.0);
    double sq = 0.0;
    for (double v : r) sq += v * v;
    o.fail_if(std::sqrt(sq) > closew_bound_harmonic(1.0, n) + 1e-12, "cascade exceeds eps sqrt(H_n)");
    o.fail_if(closew_bound_harmonic(1.0, n) > closew_bound(1.0, n) + 1e-12, "eps sqrt(H_n) exceeds eps sqrt(ln n + 1)");
  }
  o.detail << "cascade residual <= eps sqrt(H_n) <= eps sqrt(ln n + 1)";
}

void check_headline(std::uint64_t, Outcome& o) {
  std::size_t cases = 0;
  std::size_t degenerate = 0;
  for (std::size_t n : {8, 12, 16, 32, 64, 128}) {
    for (std::size_t t : {2, 4, 8}) {
      if (n % t != 0) continue;
      for (std::size_t h = 1; 2 * h <= n; ++h) {
        const GammaSpec spec{n, t, h};
        if (spec.max_block_weight() == 0) {
          // blocks of two: the cap admits only g = 0, so nothing is hidden
          ++degenerate;
          o.fail_if(mi_achieved(n, t, h) != static_cast<double>(n - t), "degenerate case not at n - t");
          continue;
        }
        ++cases;
        o.fail_if(!(mi_achieved(n, t, h) < static_cast<double>(n - t)), "mi_achieved not below n - t");
        o.fail_if(!(mi_of_members(spec) < static_cast<double>(n - t)), "members MI not below n - t");
      }
      o.fail_if(mi_achieved(n, t, 0) != static_cast<double>(n - t), "h=0 does not give n - t");
    }
  }
  o.detail << cases << " (n,t,h) with h>=1 leak strictly less than n - t bits; " << degenerate
           << " with n/t = 2 sit at n - t because Gamma = {0}";
}

void check_wire(std::uint64_t seed, Outcome& o) {
  auto rng = data_rng(seed + 7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t bits = 1 + rng() % 100;
    const wire::Message q = wire::Query{random_sign_vector(bits, rng)};
    o.fail_if(wire::decode(wire::encode(q), {bits, std::nullopt}) != q, "QUERY round trip");
    const wire::Message a = wire::Answer{random_x(1 + rng() % 8, rng)};
    o.fail_if(wire::decode(wire::encode(a)) != a, "ANSWER round trip");
  }
  o.detail << "wire encode/decode round trips";
}

struct Entry {
  const char* name;
  CheckFn fn;
};

constexpr Entry kChecks[] = {
    {"hadamard.sylvester", check_hadamard},
    {"exact.correctness", check_exact},
    {"approx.closest_vector", check_closest},
    {"approx.distance_formula", check_distance},
    {"coset.shift_choice", check_shift_choice},
    {"coset.distinct", check_distinct_cosets},
    {"gamma.count", check_gamma_count},
    {"privacy.mutual_information", check_mi},
    {"error.worst_case", check_worstcase},
    {"error.sessions", check_sessions},
    {"lower.neighborhood", check_neighborhood},
    {"lower.orthants", check_orthants},
    {"lower.binomial_sum", check_binomial_sum},
    {"lower.cascade", check_cascade},
    {"headline.below_n_minus_t", check_headline},
    {"wire.round_trip", check_wire},
};

}  // namespace

std::vector<std::string> verification_names() {
  std::vector<std::string> out;
  for (const auto& e : kChecks) out.emplace_back(e.name);
  return out;
}

std::vector<CheckResult> run_verification(std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (const auto& e : kChecks) {
    Outcome o;
    try {
      e.fn(seed, o);
    } catch (const std::exception& ex) {
      o.passed = false;
      o.detail << "exception: " << ex.what();
    }
    out.push_back({e.name, o.passed, o.detail.str()});
  }
  return out;
}

}  // namespace qpi
