#pragma once
#include <array>
#include <cmath>

#include "mflab/errors.hpp"
#include "mflab/jet.hpp"

namespace mflab {

// Small fixed-size tensors over a generic scalar (double or nested Jet).
template <class S, int N> using Vec = std::array<S, N>;
template <class S, int N> using Mat = std::array<std::array<S, N>, N>;
template <class S, int N> using Arr3 = std::array<std::array<std::array<S, N>, N>, N>;
template <class S, int N> using Arr4 =
    std::array<std::array<std::array<std::array<S, N>, N>, N>, N>;

template <class S, int N>
Vec<S, N> zero_vec() {
    Vec<S, N> v{};
    for (int i = 0; i < N; ++i) v[i] = S(0.0);
    return v;
}

template <class S, int N>
Mat<S, N> zero_mat() {
    Mat<S, N> m{};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m[i][j] = S(0.0);
    return m;
}

template <class S, int N>
Arr3<S, N> zero_arr3() {
    Arr3<S, N> a{};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) a[i][j][k] = S(0.0);
    return a;
}

template <class S, int N>
S dot(const Vec<S, N>& a, const Vec<S, N>& b) {
    S r = a[0] * b[0];
    for (int i = 1; i < N; ++i) r += a[i] * b[i];
    return r;
}

// g-inner product <a,b> = g_ij a^i b^j
template <class S, int N>
S inner(const Mat<S, N>& g, const Vec<S, N>& a, const Vec<S, N>& b) {
    S r = S(0.0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r += g[i][j] * a[i] * b[j];
    return r;
}

template <class S, int N>
Vec<S, N> matvec(const Mat<S, N>& m, const Vec<S, N>& v) {
    Vec<S, N> r{};
    for (int i = 0; i < N; ++i) {
        r[i] = m[i][0] * v[0];
        for (int j = 1; j < N; ++j) r[i] += m[i][j] * v[j];
    }
    return r;
}

template <class S, int N>
S det(const Mat<S, N>& m) {
    static_assert(N == 2 || N == 3);
    if constexpr (N == 2) {
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    } else {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
}

template <class S, int N>
Mat<S, N> inverse(const Mat<S, N>& m) {
    static_assert(N == 2 || N == 3);
    Mat<S, N> r{};
    S dm = det<S, N>(m);
    if constexpr (N == 2) {
        r[0][0] = m[1][1] / dm;
        r[0][1] = -m[0][1] / dm;
        r[1][0] = -m[1][0] / dm;
        r[1][1] = m[0][0] / dm;
    } else {
        r[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / dm;
        r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / dm;
        r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / dm;
        r[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / dm;
        r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / dm;
        r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / dm;
        r[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / dm;
        r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / dm;
        r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / dm;
    }
    return r;
}

// Sylvester criterion on the numeric values (leading principal minors > 0).
template <class S, int N>
bool positive_definite(const Mat<S, N>& m) {
    static_assert(N == 2 || N == 3);
    double m00 = scalar_of(m[0][0]);
    if (!(m00 > 0.0)) return false;
    double d2 = scalar_of(m[0][0]) * scalar_of(m[1][1]) -
                scalar_of(m[0][1]) * scalar_of(m[1][0]);
    if (!(d2 > 0.0)) return false;
    if constexpr (N == 3) {
        Mat<double, 3> md{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) md[i][j] = scalar_of(m[i][j]);
        if (!(det<double, 3>(md) > 0.0)) return false;
    }
    return true;
}

} // namespace mflab
