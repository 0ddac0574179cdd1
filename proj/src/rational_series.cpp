#include "darcais/rational_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace darcais {

RationalSeries::RationalSeries(int truncation_order) {
    if (truncation_order < 0) throw std::domain_error("RationalSeries: order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(truncation_order) + 1, Rational(0));
}

RationalSeries RationalSeries::one(int truncation_order) {
    RationalSeries s(truncation_order);
    s[0] = 1;
    return s;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    const int n = std::min(a.truncation_order(), b.truncation_order());
    RationalSeries c(n);
    Rational t;
    for (int i = 0; i <= n; ++i) {
        Rational acc(0);
        for (int j = 0; j <= i; ++j) {
            if (sgn(a[j]) == 0 || sgn(b[i - j]) == 0) continue;
            t = a[j] * b[i - j];
            acc += t;
        }
        c[i] = acc;
    }
    return c;
}

RationalSeries RationalSeries::pow(unsigned long k) const {
    RationalSeries acc = one(truncation_order());
    if (k == 0) return acc;
    RationalSeries base = *this;
    while (true) {
        if (k & 1UL) acc = acc * base;
        k >>= 1UL;
        if (k == 0) break;
        base = base * base;
    }
    return acc;
}

}  // namespace darcais
