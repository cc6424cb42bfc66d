#pragma once

#include <cstddef>

#include "pint/linalg.hpp"

namespace pint {

enum class NodeKind { first_kind, second_kind };

/// M Chebyshev points of the first kind on [a, b] (roots grid, no endpoints),
/// sorted ascending. M = 1 degenerates to the midpoint.
Vector cheb_nodes(std::size_t M, double a, double b);

/// M Chebyshev points of the second kind on [a, b] (extrema / Gauss-Lobatto
/// grid, endpoints included), sorted ascending. M = 1 degenerates to the midpoint.
Vector cheb_nodes_second_kind(std::size_t M, double a, double b);

Vector sample_nodes(NodeKind kind, std::size_t M, double a, double b);

/// Barycentric weights w_j = 1 / prod_{k != j} (x_j - x_k). Throws DuplicateNodes.
Vector barycentric_weights(const Vector& nodes);

/// A one-dimensional barycentric Lagrange interpolant with its sampling interval.
struct InterpolantData {
    Vector nodes;
    Vector weights;
    Vector values;
    double a = 0.0, b = 0.0;
};

InterpolantData make_interpolant(Vector nodes, Vector values, double a, double b);

/// Evaluate at xi; an argument within 1e-14 (relative) of a node returns the
/// stored value exactly. Arguments outside [a, b] extrapolate.
double interp_eval(const InterpolantData& f, double xi);

/// Chebyshev spectral differentiation on the (M+1)-point extrema grid of [a, b].
/// Grid follows the usual descending cos(j pi / M) layout: grid[0] = b, grid[M] = a.
struct ChebDiff {
    Matrix D;
    Vector grid;
};

ChebDiff cheb_diff_matrix(std::size_t M, double a, double b);

} // namespace pint
