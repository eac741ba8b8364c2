#pragma once

#include <span>
#include <utility>
#include <vector>

#include "stml/tensor.hpp"

namespace stml {

/// Levi-Civita connection of g:
///   Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij).
/// Torsion-free and self-dual; both are checkable properties.
Connection levi_civita(const MetricField& g);

/// g-conjugate connection: Gamma*^k_ij = (d_i g_jl - Gamma^m_il g_jm) g^{lk}.
/// Involution: dual of dual reproduces the input.
Connection dual_connection(const MetricField& g, const Connection& nabla);

/// Tor^k_ij = Gamma^k_ij - Gamma^k_ji, laid out [k][i][j].
std::vector<double> torsion_at(const Connection& nabla, std::span<const double> point);
FieldBatch torsion_fields(const Connection& nabla);

/// R^l_kij = d_i Gamma^l_jk - d_j Gamma^l_ik + Gamma^l_im Gamma^m_jk
///         - Gamma^l_jm Gamma^m_ik, laid out [l][k][i][j];
/// antisymmetric in (i, j) by construction.
std::vector<double> curvature_at(const Connection& nabla, std::span<const double> point);
FieldBatch curvature_fields(const Connection& nabla);

/// (nabla_i g)_jk = d_i g_jk - Gamma^m_ij g_mk - Gamma^m_ik g_jm,
/// laid out [i][j][k].
std::vector<double> nabla_g_at(const Connection& nabla, const MetricField& g,
                               std::span<const double> point);
FieldBatch nabla_g_fields(const Connection& nabla, const MetricField& g);

/// Eigenvalue signature (positives, negatives) of the component matrix.
std::pair<int, int> signature(const MetricField& g, std::span<const double> point);

/// Push a covariant tensor / metric / connection through a coordinate change;
/// the result lives on map.target. The connection law carries the usual
/// second-derivative term.
TensorField transform_tensor(const CoordinateMap& map, const TensorField& t);
MetricField transform_metric(const CoordinateMap& map, const MetricField& g);
Connection transform_connection(const CoordinateMap& map, const Connection& nabla);

/// Max |forward(inverse(y)) - y| over the given points.
double map_roundtrip_defect(const CoordinateMap& map, std::span<const std::vector<double>> points);

/// Horizontal lift of X through nabla, a vector field on the r = 1 tangent
/// chart: X^h = X^i d_i - X^i Gamma^k_ij xdot^j d_{xdot^k}.
VectorField horizontal_lift(const Connection& nabla, const VectorField& x);

/// Lie bracket [X, Y]^k = X^j d_j Y^k - Y^j d_j X^k.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

}  // namespace stml
