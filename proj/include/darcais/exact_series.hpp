#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "darcais/rational.hpp"
#include "darcais/rational_series.hpp"

namespace darcais {

// Exact arbitrary-precision combinatorics around the d'Arcais numbers
// A(2,n,k) (OEIS A008298): the coefficients of the polynomials P_n defined by
//
//     sum_n P_n(x) z^n = exp(-x ln((z;z)_inf)),   P_n(x) = sum_k A(2,n,k) x^k / n!.
//
// The log of the q-Pochhammer product is the Lambert-type series
// L(z) = sum_m (sigma(m)/m) z^m, so the triangle is the Bell transform of the
// abundancy index and A(2,n,k) = n!/k! [z^n] L(z)^k. Everything here is exact;
// floating point enters only through ln_rational.

/// sigma(n) as an arbitrary-precision integer. Throws for n = 0.
BigInt sigma(std::uint64_t n);

/// L(z) = sum_{m=1..N} (sigma(m)/m) z^m truncated at order N >= 1.
RationalSeries lambert_series(int n_max);

/// Rows A(2,n,k), 1 <= k <= n <= max_n, built from the differential
/// recurrence n P_n(x) = x sum_{j=1..n} sigma(j) P_{n-j}(x). Scaling away the
/// factorials turns that into the pure-integer form
///
///     A(2,n,k) = sum_{j>=1} sigma(j) * (n-1)!/(n-j)! * A(2,n-j,k-1),
///
/// so every intermediate value is an exact integer. darcais_bell below is the
/// independent route used to validate the recurrence.
class DArcaisTriangle {
public:
    explicit DArcaisTriangle(int max_n);

    int max_n() const { return max_n_; }

    /// A(2,n,k) for 1 <= k <= n <= max_n.
    const BigInt& entry(int n, int k) const;

    /// Row n as A(2,n,1..n).
    const std::vector<BigInt>& row(int n) const;

private:
    int max_n_;
    std::vector<std::vector<BigInt>> rows_;
};

DArcaisTriangle darcais_triangle(int n_max);

/// A(2,n,k) = n!/k! [z^n] L(z)^k by exact truncated series powering.
BigInt darcais_bell(int n, int k);

/// a(n,k) = k! A(2,n,k) / n!, exact and reduced.
Rational a_coeff(const DArcaisTriangle& triangle, int n, int k);

/// Partition numbers p(0..max_n) from Euler's pentagonal recurrence
/// p(n) = sum_{j>=1} (-1)^{j+1} [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)].
class PartitionTable {
public:
    explicit PartitionTable(int max_n);

    int max_n() const { return static_cast<int>(values_.size()) - 1; }
    const BigInt& value(int n) const { return values_[static_cast<std::size_t>(n)]; }

private:
    std::vector<BigInt> values_;
};

PartitionTable partition_table(int n_max);

struct CompositionCheck {
    Rational sum;      ///< sum over k-part compositions of prod_j sigma(nu_j)/nu_j
    Rational a_value;  ///< a(n,k); equals sum identically
};

/// Brute-force enumeration of all C(n-1,k-1) compositions; capped at n <= 14
/// (std::length_error beyond). The average of the product over compositions
/// is sum / C(n-1,k-1).
CompositionCheck composition_check(int n, int k);

/// (a(n,k) - a(n,n+1-k)) / (a(n,k) + a(n,n+1-k)), exact.
Rational asymmetry_stat(const DArcaisTriangle& triangle, int n, int k);

/// a(n,k)^2 / (a(n,k-1) a(n,k+1)) for 2 <= k <= n-1, exact.
Rational logconcavity_ratio(const DArcaisTriangle& triangle, int n, int k);

/// ln of logconcavity_ratio via ln_rational.
double logconcavity_lhs(const DArcaisTriangle& triangle, int n, int k);

}  // namespace darcais
