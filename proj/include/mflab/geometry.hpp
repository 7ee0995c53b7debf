#pragma once
#include "mflab/metric.hpp"

namespace mflab {

// ---------------------------------------------------------------------------
// Stage functions.  Each one is generic over the scalar type S and obtains
// the derivatives it needs by evaluating the stage below it with one more
// nested jet level, so every composition is exact to rounding.
// ---------------------------------------------------------------------------

// g_ij = 1/2 [F^2]_{y^i y^j}
template <class S, int N>
Mat<S, N> fundamental_matrix(const MetricSpec& m, const Vec<S, N>& x,
                             const Vec<S, N>& y) {
    using J1 = Jet<S, N>;
    using J2 = Jet<J1, N>;
    Vec<J2, N> xj{}, yj{};
    for (int i = 0; i < N; ++i) {
        xj[i] = J2::lift(J1::lift(x[i]));
        J2 yi = J2::lift(J1::seed(y[i], i));
        yi.d[i] = J1(1.0);
        yj[i] = yi;
    }
    J2 f2 = eval_F2<J2, N>(m, xj, yj);
    Mat<S, N> g{};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) g[i][j] = f2.d[i].d[j] * 0.5;
    return g;
}

// Cartan tensor C_ijk = 1/4 [F^2]_{y^i y^j y^k}
template <class S, int N>
Arr3<S, N> cartan_tensor(const MetricSpec& m, const Vec<S, N>& x,
                         const Vec<S, N>& y) {
    using J1 = Jet<S, N>;
    using J2 = Jet<J1, N>;
    using J3 = Jet<J2, N>;
    Vec<J3, N> xj{}, yj{};
    for (int i = 0; i < N; ++i) {
        xj[i] = J3::lift(J2::lift(J1::lift(x[i])));
        J3 yi = J3::lift(J2::lift(J1::seed(y[i], i)));
        yi.v.d[i] = J1(1.0);
        yi.d[i] = J2(1.0);
        yj[i] = yi;
    }
    J3 f2 = eval_F2<J3, N>(m, xj, yj);
    Arr3<S, N> c{};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) c[i][j][k] = f2.d[i].d[j].d[k] * 0.25;
    return c;
}

// D[k][i][j] = dg_ij/dx^k  (plain x-derivative of the fundamental tensor)
template <class S, int N>
Arr3<S, N> dg_dx(const MetricSpec& m, const Vec<S, N>& x, const Vec<S, N>& y) {
    using J = Jet<S, N>;
    Vec<J, N> xj{}, yj{};
    for (int i = 0; i < N; ++i) {
        xj[i] = J::seed(x[i], i);
        yj[i] = J::lift(y[i]);
    }
    Mat<J, N> gj = fundamental_matrix<J, N>(m, xj, yj);
    Arr3<S, N> d{};
    for (int k = 0; k < N; ++k)
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) d[k][i][j] = gj[i][j].d[k];
    return d;
}

// Geodesic coefficients G^i = 1/4 g^{il} {2 dg_jl/dx^k - dg_jk/dx^l} y^j y^k
template <class S, int N>
Vec<S, N> spray_coeffs(const MetricSpec& m, const Vec<S, N>& x,
                       const Vec<S, N>& y) {
    Mat<S, N> g = fundamental_matrix<S, N>(m, x, y);
    Mat<S, N> ginv = inverse<S, N>(g);
    Arr3<S, N> d = dg_dx<S, N>(m, x, y);
    Vec<S, N> a{};
    for (int l = 0; l < N; ++l) {
        S s = S(0.0);
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k)
                s += (d[k][j][l] * 2.0 - d[l][j][k]) * y[j] * y[k];
        a[l] = s;
    }
    Vec<S, N> G{};
    for (int i = 0; i < N; ++i) {
        S s = S(0.0);
        for (int l = 0; l < N; ++l) s += ginv[i][l] * a[l];
        G[i] = s * 0.25;
    }
    return G;
}

// N^i_j = dG^i/dy^j
template <class S, int N>
Mat<S, N> nonlinear_connection(const MetricSpec& m, const Vec<S, N>& x,
                               const Vec<S, N>& y) {
    using J = Jet<S, N>;
    Vec<J, N> xj{}, yj{};
    for (int i = 0; i < N; ++i) {
        xj[i] = J::lift(x[i]);
        yj[i] = J::seed(y[i], i);
    }
    Vec<J, N> Gj = spray_coeffs<J, N>(m, xj, yj);
    Mat<S, N> n{};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) n[i][j] = Gj[i].d[j];
    return n;
}

// ---------------------------------------------------------------------------
// GeomContext: everything the calculus needs at one point, computed with
// shared intermediates.  S = double gives values; S = Jet<double,2N> gives
// in addition all first x- and y-derivatives of every entry (jet directions
// 0..N-1 are d/dx^i, N..2N-1 are d/dy^i).
// ---------------------------------------------------------------------------
template <class S, int N>
struct GeomContext {
    Vec<S, N> x{}, y{};
    S F2{}, F{};
    Mat<S, N> g{}, ginv{};
    Arr3<S, N> C{};       // Cartan, all indices down
    Vec<S, N> G{};        // geodesic coefficients
    Mat<S, N> Nc{};       // N^i_j
    Arr3<S, N> Gamma{};   // Chern connection, Gamma[i][j][k] = Gamma^i_{jk}
};

template <class S, int N>
GeomContext<S, N> make_geom_context(const MetricSpec& m, const Vec<S, N>& x,
                                    const Vec<S, N>& y) {
    if (!m.template in_chart<S, N>(x))
        throw ChartExit("point outside the constant-curvature chart");
    GeomContext<S, N> ctx;
    ctx.x = x;
    ctx.y = y;
    ctx.F2 = eval_F2<S, N>(m, x, y);
    if (!(scalar_of(ctx.F2) > 0.0))
        throw NonPositiveMetric("F^2 <= 0 at evaluation point");
    ctx.F = sqrt(ctx.F2);
    ctx.g = fundamental_matrix<S, N>(m, x, y);
    if (!positive_definite<S, N>(ctx.g))
        throw DegenerateTensor("fundamental tensor not positive definite");
    ctx.ginv = inverse<S, N>(ctx.g);
    ctx.C = cartan_tensor<S, N>(m, x, y);
    Arr3<S, N> d = dg_dx<S, N>(m, x, y);
    // spray from shared g, ginv, d
    for (int i = 0; i < N; ++i) {
        S s = S(0.0);
        for (int l = 0; l < N; ++l) {
            S al = S(0.0);
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k)
                    al += (d[k][j][l] * 2.0 - d[l][j][k]) * y[j] * y[k];
            s += ctx.ginv[i][l] * al;
        }
        ctx.G[i] = s * 0.25;
    }
    ctx.Nc = nonlinear_connection<S, N>(m, x, y);
    // delta g_ij / delta x^k = dg/dx^k - N^m_k dg/dy^m, with dg/dy^m = 2 C_ijm
    Arr3<S, N> delta{};
    for (int k = 0; k < N; ++k)
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                S s = d[k][i][j];
                for (int mm = 0; mm < N; ++mm)
                    s -= ctx.Nc[mm][k] * (ctx.C[i][j][mm] * 2.0);
                delta[k][i][j] = s;
            }
    for (int l = 0; l < N; ++l)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                S s = S(0.0);
                for (int i = 0; i < N; ++i)
                    s += ctx.ginv[l][i] *
                         (delta[k][i][j] + delta[j][i][k] - delta[i][j][k]);
                ctx.Gamma[l][j][k] = s * 0.5;
            }
    return ctx;
}

// Minimal context for flow right-hand sides: F2, g, ginv, G only.
template <class S, int N>
struct SprayContext {
    S F2{};
    Mat<S, N> g{}, ginv{};
    Vec<S, N> G{};
};

template <class S, int N>
SprayContext<S, N> make_spray_context(const MetricSpec& m, const Vec<S, N>& x,
                                      const Vec<S, N>& y) {
    if (!m.template in_chart<S, N>(x))
        throw ChartExit("point outside the constant-curvature chart");
    SprayContext<S, N> ctx;
    ctx.F2 = eval_F2<S, N>(m, x, y);
    if (!(scalar_of(ctx.F2) > 0.0))
        throw NonPositiveMetric("F^2 <= 0 at evaluation point");
    ctx.g = fundamental_matrix<S, N>(m, x, y);
    ctx.ginv = inverse<S, N>(ctx.g);
    Arr3<S, N> d = dg_dx<S, N>(m, x, y);
    for (int i = 0; i < N; ++i) {
        S s = S(0.0);
        for (int l = 0; l < N; ++l) {
            S al = S(0.0);
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k)
                    al += (d[k][j][l] * 2.0 - d[l][j][k]) * y[j] * y[k];
            s += ctx.ginv[i][l] * al;
        }
        ctx.G[i] = s * 0.25;
    }
    return ctx;
}

// ---------------------------------------------------------------------------
// Curvature.  Assembled at plain double precision from the jet-level context.
// ---------------------------------------------------------------------------
template <int N>
struct CurvatureND {
    Arr3<double, N> P{};      // P^i_{kl} = y^j P^i_{jkl}
    Arr3<double, N> R{};      // R^i_{kl} = y^j R^i_{jkl}
    Mat<double, N> R_op{};    // R^i_k = R^i_{kl} y^l
    Arr3<double, N> L{};      // Landsberg tensor, all indices down
    Vec<double, N> mean_cartan{};
    Vec<double, N> mean_landsberg{};
};

template <int N>
using JetCtx = GeomContext<Jet<double, 2 * N>, N>;

template <int N>
JetCtx<N> make_jet_context(const MetricSpec& m, const Vec<double, N>& x,
                           const Vec<double, N>& y) {
    using J = Jet<double, 2 * N>;
    Vec<J, N> xj{}, yj{};
    for (int i = 0; i < N; ++i) {
        xj[i] = J::seed(x[i], i);
        yj[i] = J::seed(y[i], N + i);
    }
    return make_geom_context<J, N>(m, xj, yj);
}

template <int N>
CurvatureND<N> curvature_from_jet(const JetCtx<N>& ctx) {
    CurvatureND<N> cur;
    Vec<double, N> y{};
    for (int i = 0; i < N; ++i) y[i] = ctx.y[i].v;
    // P^i_{jkl} = -dGamma^i_{jk}/dy^l, then contract with y^j
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l) {
                double s = 0.0;
                for (int j = 0; j < N; ++j)
                    s -= y[j] * ctx.Gamma[i][j][k].d[N + l];
                cur.P[i][k][l] = s;
            }
    // R^i_{jkl} per the curvature formula, contracted with y^j
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l) {
                double s = 0.0;
                for (int j = 0; j < N; ++j) {
                    double r = ctx.Gamma[i][j][l].d[k] - ctx.Gamma[i][j][k].d[l];
                    for (int mm = 0; mm < N; ++mm) {
                        r += ctx.Gamma[i][j][k].d[N + mm] * ctx.Nc[mm][l].v -
                             ctx.Gamma[i][j][l].d[N + mm] * ctx.Nc[mm][k].v;
                        r += ctx.Gamma[mm][j][l].v * ctx.Gamma[i][mm][k].v -
                             ctx.Gamma[mm][j][k].v * ctx.Gamma[i][mm][l].v;
                    }
                    s += y[j] * r;
                }
                cur.R[i][k][l] = s;
            }
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            double s = 0.0;
            for (int l = 0; l < N; ++l) s += cur.R[i][k][l] * y[l];
            cur.R_op[i][k] = s;
        }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                double s = 0.0;
                for (int mm = 0; mm < N; ++mm)
                    s -= ctx.g[i][mm].v * cur.P[mm][j][k];
                cur.L[i][j][k] = s;
            }
    for (int k = 0; k < N; ++k) {
        double mc = 0.0, ml = 0.0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                mc += ctx.ginv[i][j].v * ctx.C[i][j][k].v;
                ml += ctx.ginv[i][j].v * cur.L[k][i][j];
            }
        cur.mean_cartan[k] = mc;
        cur.mean_landsberg[k] = ml;
    }
    return cur;
}

// Value-level copy of a jet context (drops the derivative payload).
template <int N>
GeomContext<double, N> value_context(const JetCtx<N>& ctx) {
    GeomContext<double, N> v;
    for (int i = 0; i < N; ++i) {
        v.x[i] = ctx.x[i].v;
        v.y[i] = ctx.y[i].v;
        v.G[i] = ctx.G[i].v;
    }
    v.F2 = ctx.F2.v;
    v.F = ctx.F.v;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            v.g[i][j] = ctx.g[i][j].v;
            v.ginv[i][j] = ctx.ginv[i][j].v;
            v.Nc[i][j] = ctx.Nc[i][j].v;
            for (int k = 0; k < N; ++k) {
                v.C[i][j][k] = ctx.C[i][j][k].v;
                v.Gamma[i][j][k] = ctx.Gamma[i][j][k].v;
            }
        }
    return v;
}

} // namespace mflab
