#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace trilie {

/// Exact arbitrary-precision rational scalar. Always stored in lowest terms
/// with positive denominator; every operation in the library is exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using Vec = std::vector<Rational>;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec& add_scaled(Vec& dst, const Rational& s, const Vec& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += s * src[i];
    return dst;
}

inline Vec operator+(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec operator-(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vec operator*(const Rational& s, Vec a) {
    for (auto& x : a) x *= s;
    return a;
}

inline Vec basis_vec(int dim, int i) {
    Vec v(dim);
    v[i] = 1;
    return v;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace trilie
