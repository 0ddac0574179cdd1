#pragma once

#include <vector>

#include "darcais/rational.hpp"

namespace darcais {

/// Truncated power series with exact rational coefficients, indices 0..N.
/// Products of two series are truncated at the minimum of the two orders.
class RationalSeries {
public:
    explicit RationalSeries(int truncation_order);

    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

    /// Series truncated to 1 + 0 z + ... at the given order.
    static RationalSeries one(int truncation_order);

    /// this^k by binary exponentiation, truncated at this->truncation_order().
    RationalSeries pow(unsigned long k) const;

    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);

private:
    std::vector<Rational> coeffs_;
};

}  // namespace darcais
