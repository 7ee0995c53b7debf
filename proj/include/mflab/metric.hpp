#pragma once
#include <cmath>
#include <string>

#include "mflab/errors.hpp"
#include "mflab/trigpoly.hpp"

namespace mflab {

enum class MetricKind { Riemannian, Randers, ConstantCurvature };

// Analytic description of a Finsler metric F on a chart.
//  - Riemannian:        F^2 = a_ij(x) y^i y^j
//  - Randers:           F   = sqrt(a_ij y^i y^j) + b_i(x) y^i,  |b|_a < 1
//  - ConstantCurvature: K0 = 0 Euclidean plane; K0 < 0 Poincare disk chart
//                       with conformal factor 2*rho/(1-|x|^2), rho = 1/sqrt(-K0)
struct MetricSpec {
    MetricKind kind = MetricKind::Riemannian;
    int dim = 2;
    SymmetricMatrixField a;
    OneFormField b;
    double K0 = 0.0;

    static MetricSpec euclidean(int n = 2) {
        MetricSpec m;
        m.kind = MetricKind::Riemannian;
        m.dim = n;
        for (int i = 0; i < n; ++i) m.a.comp[i][i] = TrigPoly::constant(1.0);
        return m;
    }

    static MetricSpec constant_curvature(double k0, int n = 2) {
        if (k0 > 0.0)
            throw ConfigError("constant_curvature chart supports only K0 <= 0");
        MetricSpec m;
        m.kind = MetricKind::ConstantCurvature;
        m.dim = n;
        m.K0 = k0;
        return m;
    }

    bool torus_chart() const { return kind != MetricKind::ConstantCurvature; }

    // Validity of a chart point (only the disk chart is restricted).
    template <class S, int N>
    bool in_chart(const Vec<S, N>& x) const {
        if (kind != MetricKind::ConstantCurvature || K0 >= 0.0) return true;
        double r2 = 0.0;
        for (int i = 0; i < N; ++i) r2 += scalar_of(x[i]) * scalar_of(x[i]);
        return 1.0 - r2 > 1e-12;
    }
};

// F^2(x,y), generic over the scalar type so nested jets deliver every
// derivative the tensor pipeline needs.
template <class S, int N>
S eval_F2(const MetricSpec& m, const Vec<S, N>& x, const Vec<S, N>& y) {
    switch (m.kind) {
        case MetricKind::Riemannian: {
            Mat<S, N> a = m.a.template eval<S, N>(x);
            return inner<S, N>(a, y, y);
        }
        case MetricKind::Randers: {
            Mat<S, N> a = m.a.template eval<S, N>(x);
            Vec<S, N> b = m.b.template eval<S, N>(x);
            S alpha = sqrt(inner<S, N>(a, y, y));
            S f = alpha + dot<S, N>(b, y);
            return f * f;
        }
        case MetricKind::ConstantCurvature: {
            S yy = dot<S, N>(y, y);
            if (m.K0 == 0.0) return yy;
            double rho = 1.0 / std::sqrt(-m.K0);
            S r2 = dot<S, N>(x, x);
            S conf = (2.0 * rho) / (1.0 - r2);
            return conf * conf * yy;
        }
    }
    return S(0.0);
}

template <class S, int N>
S eval_F(const MetricSpec& m, const Vec<S, N>& x, const Vec<S, N>& y) {
    return sqrt(eval_F2<S, N>(m, x, y));
}

} // namespace mflab
