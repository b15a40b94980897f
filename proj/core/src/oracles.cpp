// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpi/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <bit>
#include <string>
#include <unordered_set>

#include "qpi/errors.hpp"

namespace qpi::oracle {
namespace {

SignVector from_index(std::size_t n, std::uint64_t bits) {
  SignVector v(n);
  for (std::size_t j = 0; j < n; ++j) v.set_bit(j, (bits >> j) & 1U);
  return v;
}

std::uint64_t to_index(const SignVector& v) {
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < v.size(); ++j) bits |= static_cast<std::uint64_t>(v.bit(j)) << j;
  return bits;
}

}  // namespace

SubspaceBasis::SubspaceBasis(Eigen::MatrixXd rows) : rows_(std::move(rows)) {
  if (rows_.rows() == 0 || rows_.cols() == 0) throw ParameterError("SubspaceBasis: empty basis");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(rows_.transpose());
  qr.setThreshold(kBoundaryTolerance);
  if (qr.rank() != rows_.rows()) {
    throw ParameterError("SubspaceBasis: rows are rank deficient (rank " + std::to_string(qr.rank()) + " < " +
                         std::to_string(rows_.rows()) + ")");
  }
}

Eigen::MatrixXd SubspaceBasis::orthonormal() const {
  const Eigen::Index n = rows_.cols();
  const Eigen::Index ell = rows_.rows();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(rows_.transpose());
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, ell);
}

SubspaceBasis random_subspace(std::size_t ell, std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Eigen::MatrixXd rows(static_cast<Eigen::Index>(ell), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
      for (Eigen::Index j = 0; j < rows.cols(); ++j) rows(i, j) = normal(rng);
    }
    try {
      return SubspaceBasis(std::move(rows));
    } catch (const ParameterError&) {
      // Degenerate draw; try again.
    }
  }
}

std::vector<double> brute_closest(const SignVector& w, const SignVector& u_shift, const CodingMatrix& c) {
  const auto n = static_cast<Eigen::Index>(c.cols());
  const auto t = static_cast<Eigen::Index>(c.rows());
  require_length("brute_closest", c.cols(), w.size());
  require_length("brute_closest", c.cols(), u_shift.size());

  Eigen::MatrixXd v(t, n);
  for (Eigen::Index i = 0; i < t; ++i) {
    const SignVector vi = oplus(u_shift, c.row(static_cast<std::size_t>(i)));
    for (Eigen::Index j = 0; j < n; ++j) v(i, j) = vi[static_cast<std::size_t>(j)];
  }
  Eigen::VectorXd target(n);
  for (Eigen::Index j = 0; j < n; ++j) target(j) = w[static_cast<std::size_t>(j)];

  const Eigen::MatrixXd gram = v * v.transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (!lu.isInvertible()) throw std::logic_error("brute_closest: Gram matrix of the v'_i is singular");
  const Eigen::VectorXd alpha = lu.solve(v * target);
  const Eigen::VectorXd proj = v.transpose() * alpha;
  return std::vector<double>(proj.data(), proj.data() + proj.size());
}

GammaEnumeration brute_gamma(const GammaSpec& spec) {
  spec.validate();
  if (spec.n > kMaxGammaEnumeration) {
    throw OracleLimit("brute_gamma: n = " + std::to_string(spec.n) + " exceeds " +
                      std::to_string(kMaxGammaEnumeration));
  }
  GammaEnumeration out;
  const std::size_t n = spec.n;
  const std::size_t b = spec.block_size();
  std::uint64_t le = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::size_t weight = 0;
    bool capped = true;
    for (std::size_t r = 0; r < spec.t; ++r) {
      const std::uint64_t mask = ((std::uint64_t{1} << b) - 1) << (r * b);
      const auto bw = static_cast<std::size_t>(std::popcount(bits & mask));
      weight += bw;
      if (2 * spec.t * bw >= n) capped = false;
    }
    if (capped && weight <= spec.h) ++le;
    const SignVector g = from_index(n, bits);
    if (gamma_contains(g, spec)) out.members.push_back(g);
  }
  out.count_le = le;
  out.count_members = out.members.size();

  // Closed-form value, summing over E by explicit tuple enumeration.
  if (2 * spec.t * spec.h < n) {
    out.count_lemma = binomial(n, spec.h);
  } else {
    BigInt total = 0;
    std::vector<std::size_t> e(spec.t, 0);
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t used) {
      if (i == spec.t) {
        BigInt prod = 1;
        for (std::size_t k : e) prod *= binomial(b, k);
        total += prod;
        return;
      }
      for (std::size_t v = 0; 2 * spec.t * v < n && used + v <= spec.h; ++v) {
        e[i] = v;
        walk(i + 1, used + v);
      }
      e[i] = 0;
    };
    walk(0, 0);
    out.count_lemma = total;
  }
  return out;
}

MutualInformation brute_mi(const GammaSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  const std::size_t t = spec.t;
  if (2 * n - t > 26) {
    throw OracleLimit("brute_mi: joint table 2^(2n - t) too large for n = " + std::to_string(n) +
                      ", t = " + std::to_string(t));
  }
  const auto gamma = brute_gamma(spec).members;
  const BlockPartition p(n, t);
  const SyndromeMatrix m(p);
  const std::size_t q_bits = n - t;
  const std::uint64_t w_count = std::uint64_t{1} << n;
  const std::uint64_t q_count = std::uint64_t{1} << q_bits;

  // counts[q * 2^n + w] = #{g in Gamma : syndrome(w (+) g) = q}
  std::vector<std::uint16_t> counts(q_count * w_count, 0);
  for (std::uint64_t wi = 0; wi < w_count; ++wi) {
    const SignVector w = from_index(n, wi);
    for (const auto& g : gamma) {
      const std::uint64_t qi = to_index(syndrome(m, oplus(w, g)));
      ++counts[qi * w_count + wi];
    }
  }

  const double gsize = static_cast<double>(gamma.size());
  const double pw = 1.0 / static_cast<double>(w_count);
  MutualInformation out;
  out.gamma_size = gamma.size();
  out.min_support = ~std::uint64_t{0};
  for (std::uint64_t qi = 0; qi < q_count; ++qi) {
    const std::uint16_t* row = &counts[qi * w_count];
    std::uint64_t row_total = 0;
    std::uint64_t support = 0;
    std::uint16_t first = 0;
    bool uniform = true;
    for (std::uint64_t wi = 0; wi < w_count; ++wi) {
      if (row[wi] == 0) continue;
      row_total += row[wi];
      if (support == 0) first = row[wi];
      uniform = uniform && row[wi] == first;
      ++support;
    }
    if (support == 0) continue;
    ++out.queries;
    out.min_support = std::min(out.min_support, support);
    out.max_support = std::max(out.max_support, support);
    out.conditionals_uniform = out.conditionals_uniform && uniform;

    const double pq = pw * static_cast<double>(row_total) / gsize;
    for (std::uint64_t wi = 0; wi < w_count; ++wi) {
      if (row[wi] == 0) continue;
      const double pwq = pw * static_cast<double>(row[wi]) / gsize;
      out.bits += pwq * std::log2(pwq / (pw * pq));
      const double cond = pwq / pq;
      out.conditional_entropy -= pwq * std::log2(cond);
    }
  }
  return out;
}

std::uint64_t brute_neighborhood(const SubspaceBasis& basis, double eps_prime) {
  const std::size_t n = basis.ambient();
  if (n > kMaxNeighborhoodN) {
    throw OracleLimit("brute_neighborhood: n = " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxNeighborhoodN));
  }
  const Eigen::MatrixXd q = basis.orthonormal();
  const double limit = eps_prime + kBoundaryTolerance;
  std::uint64_t count = 0;
  Eigen::VectorXd y(static_cast<Eigen::Index>(n));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t j = 0; j < n; ++j) y(static_cast<Eigen::Index>(j)) = ((bits >> j) & 1U) ? -1.0 : 1.0;
    const Eigen::VectorXd residual = y - q * (q.transpose() * y);
    if (residual.norm() <= limit) ++count;
  }
  return count;
}

std::uint64_t brute_orthants(const SubspaceBasis& basis, std::size_t samples, std::mt19937_64& rng) {
  const std::size_t ell = basis.dim();
  const std::size_t n = basis.ambient();
  if (ell > 4 || n > 16) throw OracleLimit("brute_orthants: needs l <= 4 and n <= 16");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::unordered_set<std::uint32_t> patterns;
  Eigen::RowVectorXd x(static_cast<Eigen::Index>(ell));
  for (std::size_t s = 0; s < samples; ++s) {
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = normal(rng);
    const double norm = x.norm();
    if (norm == 0.0) continue;
    x /= norm;
    const Eigen::RowVectorXd y = x * basis.rows();
    std::uint32_t pattern = 0;
    bool boundary = false;
    for (Eigen::Index j = 0; j < y.size(); ++j) {
      if (std::abs(y(j)) < kBoundaryTolerance) {
        boundary = true;
        break;
      }
      if (y(j) < 0) pattern |= std::uint32_t{1} << j;
    }
    if (!boundary) patterns.insert(pattern);
  }
  return patterns.size();
}

WorstCase brute_worstcase_distance(const GammaSpec& spec) {
  spec.validate();
  const std::size_t t = spec.t;
  const std::size_t emax = spec.max_block_weight();
  const bool exact_total = spec.rule == GammaRule::kLemmaConsistent && spec.below_block_cap();
  const auto n = static_cast<long long>(spec.n);

  WorstCase out;
  long long best = -1;  // n * objective, an exact integer
  std::vector<std::size_t> d(t, 0);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t used) {
    if (i == t) {
      if (exact_total && used != spec.h) return;
      if (++out.tuples > kMaxWorstCaseTuples) {
        throw OracleLimit("brute_worstcase_distance: more than " + std::to_string(kMaxWorstCaseTuples) +
                          " profiles");
      }
      long long sum_sq = 0;
      for (std::size_t v : d) sum_sq += static_cast<long long>(v * v);
      const long long scaled = n * static_cast<long long>(used) - static_cast<long long>(t) * sum_sq;
      if (scaled > best) {
        best = scaled;
        out.argmax = d;
      }
      return;
    }
    for (std::size_t v = 0; v <= emax && used + v <= spec.h; ++v) {
      d[i] = v;
      walk(i + 1, used + v);
    }
    d[i] = 0;
  };
  walk(0, 0);
  out.objective = static_cast<double>(best) / static_cast<double>(n);
  out.distance = 2.0 * std::sqrt(out.objective);
  return out;
}

LagrangePoint lagrange_minimum(double total, std::size_t t) {
  if (t == 0) throw ParameterError("lagrange_minimum: t must be positive");
  // Stationarity 2 d_i - lambda = 0 and feasibility sum d_i = total.
  const auto k = static_cast<Eigen::Index>(t);
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  for (Eigen::Index i = 0; i < k; ++i) {
    kkt(i, i) = 2.0;
    kkt(i, k) = -1.0;
    kkt(k, i) = 1.0;
  }
  rhs(k) = total;
  const Eigen::VectorXd sol = kkt.fullPivLu().solve(rhs);
  LagrangePoint out;
  out.point.assign(sol.data(), sol.data() + k);
  out.multiplier = sol(k);
  for (double v : out.point) out.value += v * v;
  return out;
}

std::vector<double> cascade_residual(std::size_t n, double epsilon) {
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = epsilon / std::sqrt(static_cast<double>(i + 1));
  return r;
}

double clipped_orthant_distance(const SignVector& signature, const SignVector& alpha) {
  require_length("clipped_orthant_distance", signature.size(), alpha.size());
  double sq = 0.0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    const double a = signature[j];
    const double x = alpha[j];
    const double projected = a * std::max(0.0, a * x);
    sq += (x - projected) * (x - projected);
  }
  return std::sqrt(sq);
}

}  // namespace qpi::oracle
