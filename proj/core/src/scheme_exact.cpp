// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpi/scheme_exact.hpp"

#include <string>

#include "qpi/errors.hpp"
#include "qpi/scheme.hpp"

namespace qpi {

CodingMatrix::CodingMatrix(const HadamardMatrix& l, const BlockPartition& p) : l_(l), partition_(p) {
  if (l.order() != p.t()) {
    throw ParameterError("Hadamard order " + std::to_string(l.order()) + " does not match t = " +
                         std::to_string(p.t()));
  }
  rows_.reserve(p.t());
  for (std::size_t i = 0; i < p.t(); ++i) {
    SignVector c(p.n());
    for (std::size_t r = 0; r < p.t(); ++r) {
      if (l(i, r) == -1) {
        for (std::size_t j = p.block_begin(r); j < p.block_end(r); ++j) c.set_bit(j, true);
      }
    }
    rows_.push_back(std::move(c));
  }
}

CodingMatrix build_coding_matrix(const HadamardMatrix& l, const BlockPartition& p) { return CodingMatrix(l, p); }

std::vector<SignVector> user_vectors(const SignVector& u, const CodingMatrix& c) {
  require_length("user_vectors", c.cols(), u.size());
  std::vector<SignVector> out;
  out.reserve(c.rows());
  for (std::size_t i = 0; i < c.rows(); ++i) out.push_back(oplus(u, c.row(i)));
  return out;
}

std::vector<long> block_agreement(const SignVector& w, const SignVector& u, const BlockPartition& p) {
  require_length("block_agreement", p.n(), w.size());
  require_length("block_agreement", p.n(), u.size());
  const auto weights = block_weights(oplus(w, u), p);
  const long b = static_cast<long>(p.block_size());
  std::vector<long> s(p.t());
  for (std::size_t r = 0; r < p.t(); ++r) s[r] = b - 2 * static_cast<long>(weights[r]);
  return s;
}

std::vector<double> projection_coefficients(const SignVector& w, const SignVector& u, const CodingMatrix& c) {
  const auto s = block_agreement(w, u, c.partition());
  const std::size_t t = c.rows();
  const double n = static_cast<double>(c.cols());
  std::vector<double> alpha(t);
  for (std::size_t i = 0; i < t; ++i) {
    long acc = 0;
    for (std::size_t r = 0; r < t; ++r) acc += c.hadamard()(i, r) * s[r];
    alpha[i] = static_cast<double>(acc) / n;
  }
  return alpha;
}

std::vector<double> exact_coeffs(const SignVector& w, const SignVector& u, const CodingMatrix& c) {
  require_length("exact_coeffs", c.cols(), w.size());
  require_length("exact_coeffs", c.cols(), u.size());
  if (!c.partition().in_subspace(oplus(w, u))) {
    throw CosetMismatch("exact_coeffs: w (+) u is not in V; u is not a shift of w's coset");
  }
  return projection_coefficients(w, u, c);
}

std::vector<double> answer_products(std::span<const SignVector> vectors, std::span<const double> x) {
  std::vector<double> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(v.dot(x));
  return out;
}

double exact_infer(const SignVector& w, std::span<const double> x, const Scheme& scheme) {
  require_length("exact_infer", scheme.n(), w.size());
  require_length("exact_infer", scheme.n(), x.size());
  const SignVector q = syndrome(scheme.syndrome_matrix(), w);
  const SignVector u = solve_syndrome(scheme.syndrome_matrix(), q);
  const auto answers = answer_products(user_vectors(u, scheme.coding_matrix()), x);
  const auto beta = exact_coeffs(w, u, scheme.coding_matrix());
  double y = 0.0;
  for (std::size_t i = 0; i < beta.size(); ++i) y += beta[i] * answers[i];
  return y;
}

}  // namespace qpi
