#include "pint/interp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "pint/errors.hpp"

namespace pint {

namespace {
constexpr double kPi = 3.14159265358979323846;

Vector map_sorted(Vector x, double a, double b) {
    for (double& v : x) v = a + (b - a) * (v + 1.0) / 2.0;
    std::sort(x.begin(), x.end());
    return x;
}
} // namespace

Vector cheb_nodes(std::size_t M, double a, double b) {
    if (M == 0) throw BadGrid("cheb_nodes: M >= 1 required");
    if (M == 1) return {0.5 * (a + b)};
    Vector x(M);
    for (std::size_t k = 0; k < M; ++k)
        x[k] = std::cos((2.0 * static_cast<double>(k) + 1.0) * kPi / (2.0 * static_cast<double>(M)));
    return map_sorted(std::move(x), a, b);
}

Vector cheb_nodes_second_kind(std::size_t M, double a, double b) {
    if (M == 0) throw BadGrid("cheb_nodes_second_kind: M >= 1 required");
    if (M == 1) return {0.5 * (a + b)};
    Vector x(M);
    for (std::size_t k = 0; k < M; ++k)
        x[k] = std::cos(static_cast<double>(k) * kPi / static_cast<double>(M - 1));
    return map_sorted(std::move(x), a, b);
}

Vector sample_nodes(NodeKind kind, std::size_t M, double a, double b) {
    return kind == NodeKind::first_kind ? cheb_nodes(M, a, b) : cheb_nodes_second_kind(M, a, b);
}

Vector barycentric_weights(const Vector& nodes) {
    const std::size_t n = nodes.size();
    Vector w(n, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            const double diff = nodes[j] - nodes[k];
            if (diff == 0.0) throw DuplicateNodes("barycentric_weights: repeated node");
            w[j] /= diff;
        }
    }
    return w;
}

InterpolantData make_interpolant(Vector nodes, Vector values, double a, double b) {
    assert(nodes.size() == values.size());
    InterpolantData f;
    f.weights = barycentric_weights(nodes);
    f.nodes = std::move(nodes);
    f.values = std::move(values);
    f.a = a;
    f.b = b;
    return f;
}

double interp_eval(const InterpolantData& f, double xi) {
    const std::size_t n = f.nodes.size();
    for (std::size_t j = 0; j < n; ++j)
        if (std::abs(xi - f.nodes[j]) <= 1e-14 * std::max(1.0, std::abs(f.nodes[j])))
            return f.values[j];
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double r = f.weights[j] / (xi - f.nodes[j]);
        num += r * f.values[j];
        den += r;
    }
    return num / den;
}

ChebDiff cheb_diff_matrix(std::size_t M, double a, double b) {
    if (M == 0) throw BadGrid("cheb_diff_matrix: M >= 1 required");
    const std::size_t n = M + 1;
    Vector x(n);
    for (std::size_t j = 0; j < n; ++j)
        x[j] = std::cos(static_cast<double>(j) * kPi / static_cast<double>(M));

    Vector c(n, 1.0);
    c[0] = 2.0;
    c[M] = 2.0;
    Matrix D(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double rowsum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            D(i, j) = (c[i] / c[j]) * sign / (x[i] - x[j]);
            rowsum += D(i, j);
        }
        D(i, i) = -rowsum; // negative sum trick keeps row sums exactly zero
    }

    const double scale = 2.0 / (b - a);
    ChebDiff out;
    out.D = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.D(i, j) = D(i, j) * scale;
    out.grid.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.grid[j] = a + (b - a) * (x[j] + 1.0) / 2.0;
    return out;
}

} // namespace pint
