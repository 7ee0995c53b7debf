#pragma once
#include <array>
#include <vector>

#include "mflab/jet.hpp"
#include "mflab/linalg.hpp"

namespace mflab {

inline constexpr int kMaxDim = 3;

// One term  c*cos(k.x) + s*sin(k.x)  of a trigonometric polynomial on the
// torus chart (coordinates periodic mod 2pi).  Closed under differentiation,
// which is why all coefficient fields in this project use it.
struct TrigTerm {
    std::array<int, kMaxDim> freq{0, 0, 0};
    double c = 0.0;
    double s = 0.0;
};

struct TrigPoly {
    std::vector<TrigTerm> terms;

    bool empty() const { return terms.empty(); }

    static TrigPoly constant(double c) {
        TrigPoly p;
        if (c != 0.0) p.terms.push_back(TrigTerm{{0, 0, 0}, c, 0.0});
        return p;
    }

    template <class S, int N>
    S eval(const Vec<S, N>& x) const {
        S r = S(0.0);
        for (const TrigTerm& t : terms) {
            if (is_zero_freq(t, N)) {
                r += t.c;
                continue;
            }
            S phase = S(0.0);
            for (int i = 0; i < N; ++i) {
                if (t.freq[i] != 0) phase += x[i] * static_cast<double>(t.freq[i]);
            }
            S sn, cn;
            sincos_pair(phase, sn, cn);
            r += cn * t.c + sn * t.s;
        }
        return r;
    }

private:
    static bool is_zero_freq(const TrigTerm& t, int n) {
        for (int i = 0; i < n; ++i)
            if (t.freq[i] != 0) return false;
        return true;
    }
};

// 1-form with trig-poly components plus an optional linear part
// beta_j = sum_i linear[i][j] * x^i  (used for primitives like x^1 dx^2 on
// plane charts, where the coefficient cannot be periodic).
struct OneFormField {
    std::array<TrigPoly, kMaxDim> comp;
    std::array<std::array<double, kMaxDim>, kMaxDim> linear{};
    bool has_linear = false;

    bool empty() const {
        if (has_linear) return false;
        for (const auto& p : comp)
            if (!p.empty()) return false;
        return true;
    }

    template <class S, int N>
    Vec<S, N> eval(const Vec<S, N>& x) const {
        Vec<S, N> b{};
        for (int j = 0; j < N; ++j) {
            b[j] = comp[j].template eval<S, N>(x);
            if (has_linear)
                for (int i = 0; i < N; ++i) b[j] += x[i] * linear[i][j];
        }
        return b;
    }
};

// Symmetric matrix field a_ij(x) with trig-poly entries.
struct SymmetricMatrixField {
    std::array<std::array<TrigPoly, kMaxDim>, kMaxDim> comp;  // upper triangle used

    template <class S, int N>
    Mat<S, N> eval(const Vec<S, N>& x) const {
        Mat<S, N> a{};
        for (int i = 0; i < N; ++i)
            for (int j = i; j < N; ++j) {
                a[i][j] = comp[i][j].template eval<S, N>(x);
                if (j != i) a[j][i] = a[i][j];
            }
        return a;
    }
};

} // namespace mflab
