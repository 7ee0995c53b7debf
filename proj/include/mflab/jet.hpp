#pragma once
#include <array>
#include <cmath>
#include <cstddef>

namespace mflab {

// Forward-mode dual number carrying a value and M directional derivatives.
// Nesting Jet<Jet<double,M1>,M2> yields exact mixed second derivatives, and
// so on to any depth.  All tensor evaluation in this project is built on
// nested jets; finite differences appear only in test oracles.
template <class T, int M>
struct Jet {
    T v{};
    std::array<T, M> d{};

    Jet() = default;
    Jet(double c) : v(c) {}  // NOLINT: implicit constant lift is intended

    static Jet lift(const T& value) {
        Jet j;
        j.v = value;
        return j;
    }
    // Lift with unit seed in direction `dir`.
    static Jet seed(const T& value, int dir) {
        Jet j;
        j.v = value;
        j.d[static_cast<std::size_t>(dir)] = T(1.0);
        return j;
    }

    Jet operator-() const {
        Jet r;
        r.v = -v;
        for (int i = 0; i < M; ++i) r.d[i] = -d[i];
        return r;
    }

    Jet& operator+=(const Jet& o) {
        v += o.v;
        for (int i = 0; i < M; ++i) d[i] += o.d[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        v -= o.v;
        for (int i = 0; i < M; ++i) d[i] -= o.d[i];
        return *this;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet r;
        r.v = a.v + b.v;
        for (int i = 0; i < M; ++i) r.d[i] = a.d[i] + b.d[i];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        Jet r;
        r.v = a.v - b.v;
        for (int i = 0; i < M; ++i) r.d[i] = a.d[i] - b.d[i];
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        r.v = a.v * b.v;
        for (int i = 0; i < M; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
        return r;
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        Jet r;
        r.v = a.v / b.v;
        for (int i = 0; i < M; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) / b.v;
        return r;
    }

    // double interop (cheap paths, no promotion of the constant)
    friend Jet operator+(const Jet& a, double c) {
        Jet r = a;
        r.v += c;
        return r;
    }
    friend Jet operator+(double c, const Jet& a) { return a + c; }
    friend Jet operator-(const Jet& a, double c) {
        Jet r = a;
        r.v -= c;
        return r;
    }
    friend Jet operator-(double c, const Jet& a) {
        Jet r = -a;
        r.v += c;
        return r;
    }
    friend Jet operator*(const Jet& a, double c) {
        Jet r;
        r.v = a.v * c;
        for (int i = 0; i < M; ++i) r.d[i] = a.d[i] * c;
        return r;
    }
    friend Jet operator*(double c, const Jet& a) { return a * c; }
    friend Jet operator/(const Jet& a, double c) { return a * (1.0 / c); }
    friend Jet operator/(double c, const Jet& a) { return Jet(c) / a; }
};

inline double scalar_of(double x) { return x; }
template <class T, int M>
double scalar_of(const Jet<T, M>& j) {
    return scalar_of(j.v);
}

using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;

template <class T, int M>
Jet<T, M> sqrt(const Jet<T, M>& a) {
    Jet<T, M> r;
    r.v = sqrt(a.v);
    T half_inv = T(0.5) / r.v;
    for (int i = 0; i < M; ++i) r.d[i] = a.d[i] * half_inv;
    return r;
}

template <class T, int M>
Jet<T, M> exp(const Jet<T, M>& a) {
    Jet<T, M> r;
    r.v = exp(a.v);
    for (int i = 0; i < M; ++i) r.d[i] = a.d[i] * r.v;
    return r;
}

template <class T, int M>
Jet<T, M> log(const Jet<T, M>& a) {
    Jet<T, M> r;
    r.v = log(a.v);
    for (int i = 0; i < M; ++i) r.d[i] = a.d[i] / a.v;
    return r;
}

inline void sincos_pair(double a, double& s, double& c) {
    s = std::sin(a);
    c = std::cos(a);
}

// sin and cos share work; prefer sincos_pair() when both are needed.
template <class T, int M>
void sincos_pair(const Jet<T, M>& a, Jet<T, M>& s, Jet<T, M>& c) {
    T sv, cv;
    sincos_pair(a.v, sv, cv);
    s.v = sv;
    c.v = cv;
    for (int i = 0; i < M; ++i) {
        s.d[i] = a.d[i] * cv;
        c.d[i] = -(a.d[i] * sv);
    }
}

template <class T, int M>
Jet<T, M> sin(const Jet<T, M>& a) {
    Jet<T, M> s, c;
    sincos_pair(a, s, c);
    return s;
}
template <class T, int M>
Jet<T, M> cos(const Jet<T, M>& a) {
    Jet<T, M> s, c;
    sincos_pair(a, s, c);
    return c;
}

} // namespace mflab
