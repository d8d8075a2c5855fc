// Copyright 2026 The mdist Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdist/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "mdist/mean_distance.hpp"
#include "mdist/random.hpp"

namespace mdist {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

std::vector<std::size_t> initial_divisions(const MetricGraph& g,
                                           double h_target) {
  std::vector<std::size_t> out(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const double ratio = g.length(e) / h_target;
    const double n = std::ceil(ratio * (1.0 - 1e-12));
    out[e] = std::max<std::size_t>(4, static_cast<std::size_t>(n));
  }
  return out;
}

double min_length(const MetricGraph& g) {
  double best = g.length(0);
  for (std::size_t e = 1; e < g.edge_count(); ++e) {
    best = std::min(best, g.length(e));
  }
  return best;
}

double dense_eigenvalue(const FemSystem& sys) {
  const MatrixXd k(sys.stiffness);
  const MatrixXd m(sys.mass);
  Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> es(k, m,
                                                        Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw SpectralConvergenceError("dense eigensolver failed", {});
  }
  const std::size_t index = sys.dirichlet_vertex ? 0 : 1;
  return es.eigenvalues()(static_cast<Eigen::Index>(index));
}

// Largest eigenvalue theta of (K + sigma M)^{-1} M, M-self-adjoint, by Lanczos
// with full reorthogonalisation and explicit restarts. With `deflate` the
// constant vector (the kernel of K) is projected out of every iterate.
double lanczos_eigenvalue(const FemSystem& sys, double sigma, bool deflate) {
  const SparseMatrix& k = sys.stiffness;
  const SparseMatrix& m = sys.mass;
  const Eigen::Index n = k.rows();
  SparseMatrix shifted = k + sigma * m;
  Eigen::SimplicialLDLT<SparseMatrix> solver(shifted);
  if (solver.info() != Eigen::Success) {
    throw SpectralConvergenceError("sparse factorisation failed", {});
  }

  const VectorXd ones = VectorXd::Ones(n);
  const VectorXd m_ones = m * ones;
  const double ones_norm2 = ones.dot(m_ones);
  auto project = [&](VectorXd& v) {
    if (deflate) v -= (m_ones.dot(v) / ones_norm2) * ones;
  };
  auto m_norm = [&](const VectorXd& v) { return std::sqrt(v.dot(m * v)); };

  const Eigen::Index usable = deflate ? n - 1 : n;
  const Eigen::Index kmax = std::min<Eigen::Index>(40, usable);

  CounterRng rng(0x6d646973ull + static_cast<std::uint64_t>(n));
  VectorXd start(n);
  for (Eigen::Index i = 0; i < n; ++i) start(i) = rng.uniform() - 0.5;

  double theta = 0.0;
  for (int restart = 0; restart < 30; ++restart) {
    project(start);
    MatrixXd q(n, kmax);
    std::vector<double> alpha, beta;
    q.col(0) = start / m_norm(start);
    Eigen::Index steps = 0;
    VectorXd ritz_coeffs;
    bool converged = false;
    for (Eigen::Index j = 0; j < kmax; ++j) {
      VectorXd w = solver.solve(m * q.col(j));
      project(w);
      VectorXd mw = m * w;
      const double a = q.col(j).dot(mw);
      alpha.push_back(a);
      for (int pass = 0; pass < 2; ++pass) {
        mw = m * w;
        const VectorXd coeffs = q.leftCols(j + 1).transpose() * mw;
        w -= q.leftCols(j + 1) * coeffs;
        project(w);
      }
      const double b = m_norm(w);
      steps = j + 1;

      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(steps, steps);
      for (Eigen::Index i = 0; i < steps; ++i) {
        t(i, i) = alpha[static_cast<std::size_t>(i)];
        if (i + 1 < steps) {
          t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
        }
      }
      Eigen::SelfAdjointEigenSolver<MatrixXd> tes(t);
      theta = tes.eigenvalues()(steps - 1);
      ritz_coeffs = tes.eigenvectors().col(steps - 1);
      const double residual = std::abs(b * ritz_coeffs(steps - 1));
      if (residual <= 1e-11 * std::abs(theta) || b <= 1e-14 * std::abs(theta) ||
          steps == usable) {
        converged = true;
        break;
      }
      if (j + 1 < kmax) {
        beta.push_back(b);
        q.col(j + 1) = w / b;
      }
    }
    if (converged) return theta;
    start = q.leftCols(steps) * ritz_coeffs;
  }
  throw SpectralConvergenceError("Lanczos iteration did not converge", {});
}

SpectralResult refine(const MetricGraph& g,
                      std::optional<std::size_t> dirichlet_vertex,
                      const SpectralOptions& options) {
  require_valid(g);
  if (!(options.tol > 0.0)) {
    throw std::invalid_argument("spectral tolerance must be positive");
  }
  std::vector<std::size_t> divisions =
      initial_divisions(g, min_length(g) / 4.0);

  SpectralResult result;
  result.kind = dirichlet_vertex ? SpectralKind::kDirichletAtVertex
                                 : SpectralKind::kSpectralGap;
  if (dirichlet_vertex) result.vertex = g.vertices()[*dirichlet_vertex];

  FemSystem coarse = assemble(g, divisions, dirichlet_vertex);
  double previous = discrete_eigenvalue(coarse, options);
  result.value = previous;
  result.mesh_h = coarse.mesh_h;
  result.dof_count = coarse.dof_count;
  result.error_estimate = std::numeric_limits<double>::infinity();

  for (int round = 1; round <= options.max_rounds; ++round) {
    for (auto& n : divisions) n *= 2;
    FemSystem fine = assemble(g, divisions, dirichlet_vertex);
    if (fine.dof_count > options.max_dofs) break;
    const double current = discrete_eigenvalue(fine, options);
    result.value = (4.0 * current - previous) / 3.0;
    result.error_estimate = std::abs(current - previous) / 3.0;
    result.extrapolated = true;
    result.mesh_h = fine.mesh_h;
    result.dof_count = fine.dof_count;
    result.rounds = round;
    if (result.error_estimate <= options.tol * std::abs(result.value)) {
      return result;
    }
    previous = current;
  }
  throw SpectralConvergenceError(
      "eigenvalue extrapolation did not reach the requested tolerance",
      result);
}

}  // namespace

FemSystem assemble(const MetricGraph& g, double h_target) {
  if (!(h_target > 0.0)) {
    throw std::invalid_argument("mesh size must be positive");
  }
  return assemble(g, initial_divisions(g, h_target));
}

FemSystem assemble(const MetricGraph& g,
                   const std::vector<std::size_t>& divisions,
                   std::optional<std::size_t> dirichlet_vertex) {
  if (divisions.size() != g.edge_count()) {
    throw std::invalid_argument("one division count per edge is required");
  }
  const std::size_t nv = g.vertex_count();
  // Global node numbering before removing the Dirichlet vertex.
  std::vector<std::size_t> first_interior(g.edge_count());
  std::size_t total = nv;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (divisions[e] == 0) {
      throw std::invalid_argument("every edge needs at least one element");
    }
    first_interior[e] = total;
    total += divisions[e] - 1;
  }
  constexpr std::size_t kRemoved = static_cast<std::size_t>(-1);
  auto dof = [&](std::size_t node) -> std::size_t {
    if (!dirichlet_vertex) return node;
    if (node == *dirichlet_vertex) return kRemoved;
    return node > *dirichlet_vertex ? node - 1 : node;
  };

  FemSystem sys;
  sys.divisions = divisions;
  sys.dirichlet_vertex = dirichlet_vertex;
  sys.dof_count = dirichlet_vertex ? total - 1 : total;

  std::vector<Eigen::Triplet<double>> kt, mt;
  kt.reserve(4 * (total + g.edge_count()));
  mt.reserve(4 * (total + g.edge_count()));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::size_t n = divisions[e];
    const double h = g.length(e) / static_cast<double>(n);
    sys.mesh_h = std::max(sys.mesh_h, h);
    auto node = [&](std::size_t k) {
      if (k == 0) return g.tail(e);
      if (k == n) return g.head(e);
      return first_interior[e] + k - 1;
    };
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t p = dof(node(k)), q = dof(node(k + 1));
      const std::size_t ids[2] = {p, q};
      const double kl[2][2] = {{1.0 / h, -1.0 / h}, {-1.0 / h, 1.0 / h}};
      const double ml[2][2] = {{h / 3.0, h / 6.0}, {h / 6.0, h / 3.0}};
      for (int r = 0; r < 2; ++r) {
        if (ids[r] == kRemoved) continue;
        for (int c = 0; c < 2; ++c) {
          if (ids[c] == kRemoved) continue;
          const auto ri = static_cast<Eigen::Index>(ids[r]);
          const auto ci = static_cast<Eigen::Index>(ids[c]);
          kt.emplace_back(ri, ci, kl[r][c]);
          mt.emplace_back(ri, ci, ml[r][c]);
        }
      }
    }
  }
  const auto size = static_cast<Eigen::Index>(sys.dof_count);
  sys.stiffness.resize(size, size);
  sys.mass.resize(size, size);
  sys.stiffness.setFromTriplets(kt.begin(), kt.end());
  sys.mass.setFromTriplets(mt.begin(), mt.end());
  return sys;
}

double discrete_eigenvalue(const FemSystem& system,
                           const SpectralOptions& options) {
  const bool dirichlet = system.dirichlet_vertex.has_value();
  if (system.dof_count < (dirichlet ? 1u : 2u)) {
    throw std::invalid_argument("system too small for an eigenvalue");
  }
  if (system.dof_count <= options.dense_threshold) {
    return dense_eigenvalue(system);
  }
  // Shift by the scale of the spectrum so that K + sigma M is definite and
  // the wanted eigenvalue dominates; mu = 1/theta - sigma.
  double shift = 0.0;
  if (!dirichlet) {
    const double total_mass = Eigen::VectorXd::Ones(system.mass.rows())
                                  .dot(system.mass *
                                       Eigen::VectorXd::Ones(system.mass.rows()));
    shift = 1.0 / (total_mass * total_mass);
  }
  const double theta = lanczos_eigenvalue(system, shift, !dirichlet);
  return 1.0 / theta - shift;
}

SpectralResult spectral_gap(const MetricGraph& g,
                            const SpectralOptions& options) {
  return refine(g, std::nullopt, options);
}

SpectralResult dirichlet_eigenvalue(const MetricGraph& g, std::size_t vertex,
                                    const SpectralOptions& options) {
  if (vertex >= g.vertex_count()) {
    throw GraphError("unknown vertex index");
  }
  return refine(g, vertex, options);
}

ComparisonRecord comparison_products(const MetricGraph& g, double rho,
                                     const SpectralOptions& options) {
  ComparisonRecord rec;
  rec.rho = rho;
  rec.total_length = total_length(g);
  rec.edge_count = g.edge_count();
  rec.betti = betti_number(g);
  const double l = rec.total_length;
  const double e = static_cast<double>(rec.edge_count);
  const double beta = static_cast<double>(rec.betti);

  try {
    rec.mu2 = spectral_gap(g, options);
  } catch (const SpectralConvergenceError& err) {
    rec.spectral_error = err.what();
  }
  const char* names[] = {"mu2_nicaise_lower",   "mu2_edge_upper",
                         "mu2_rho_lower",       "mu2_rho_sq_lower",
                         "mu2_rho_sq_pi_lower", "mu2_rho_sq_edge_upper",
                         "mu2_rho_sq_betti_upper"};
  if (!rec.mu2) {
    for (const char* n : names) rec.checks.push_back(indeterminate(n));
    return rec;
  }
  const double mu2 = rec.mu2->value;
  rec.mu2_rho = mu2 * rho;
  rec.mu2_rho_sq = mu2 * rho * rho;
  const double rel = kSpectralSlackFactor * options.tol;
  // A single loop is excluded from the edge-count eigenvalue bound.
  const bool single_loop = rec.edge_count == 1 && rec.betti == 1;

  rec.checks.push_back(
      check_le(names[0], kPi2 / (l * l), mu2, rel * mu2));
  if (single_loop) {
    rec.checks.push_back(not_applicable(names[1], mu2, kPi2 * e * e / (l * l)));
  } else {
    rec.checks.push_back(
        check_le(names[1], mu2, kPi2 * e * e / (l * l), rel * mu2));
  }
  rec.checks.push_back(
      check_le(names[2], 1.0 / l, rec.mu2_rho, rel * rec.mu2_rho));
  rec.checks.push_back(check_le(names[3], (2.0 * e - 1.0) / (4.0 * e * e),
                                rec.mu2_rho_sq, rel * rec.mu2_rho_sq));
  rec.checks.push_back(check_le(
      names[4], kPi2 * (2.0 * e - 1.0) * (2.0 * e - 1.0) / (16.0 * e * e * e * e),
      rec.mu2_rho_sq, rel * rec.mu2_rho_sq));
  if (single_loop) {
    rec.checks.push_back(
        not_applicable(names[5], rec.mu2_rho_sq, kPi2 * e * e / 9.0));
  } else {
    rec.checks.push_back(check_le(names[5], rec.mu2_rho_sq, kPi2 * e * e / 9.0,
                                  rel * rec.mu2_rho_sq));
  }
  rec.checks.push_back(check_le(names[6], rec.mu2_rho_sq,
                                kPi2 * (1.0 + beta) * (1.0 + beta),
                                rel * rec.mu2_rho_sq));
  return rec;
}

ComparisonRecord comparison_products(const MetricGraph& g,
                                     const SpectralOptions& options) {
  return comparison_products(g, rho_graph(g).rho, options);
}

}  // namespace mdist
