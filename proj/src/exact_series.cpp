#include "darcais/exact_series.hpp"

#include <stdexcept>
#include <string>

#include "darcais/divisor.hpp"

namespace darcais {

BigInt sigma(std::uint64_t n) {
    if (n == 0) throw std::domain_error("sigma: n must be positive");
    BigInt s = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += static_cast<unsigned long>(d);
        const std::uint64_t e = n / d;
        if (e != d) s += static_cast<unsigned long>(e);
    }
    return s;
}

RationalSeries lambert_series(int n_max) {
    if (n_max < 1) throw std::domain_error("lambert_series: order must be >= 1");
    const auto sig = sigma_sieve(static_cast<std::size_t>(n_max));
    RationalSeries series(n_max);
    for (int m = 1; m <= n_max; ++m)
        series[m] = make_rational(BigInt(static_cast<unsigned long>(sig[static_cast<std::size_t>(m)])),
                                  BigInt(static_cast<unsigned long>(m)));
    return series;
}

DArcaisTriangle::DArcaisTriangle(int max_n) : max_n_(max_n) {
    if (max_n < 1) throw std::domain_error("DArcaisTriangle: max_n must be >= 1");
    const auto sig = sigma_sieve(static_cast<std::size_t>(max_n));
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n) {
        std::vector<BigInt> row(static_cast<std::size_t>(n));
        BigInt falling = 1;  // (n-1)!/(n-j)! for the current j
        BigInt c;
        for (int j = 1; j <= n; ++j) {
            c = falling * static_cast<unsigned long>(sig[static_cast<std::size_t>(j)]);
            const int m = n - j;
            if (m == 0) {
                row[0] += c;  // A(2,0,0) = 1 feeds k = 1
            } else {
                const std::vector<BigInt>& prev = rows_[static_cast<std::size_t>(m)];
                for (int i = 0; i < m; ++i)
                    mpz_addmul(row[static_cast<std::size_t>(i) + 1].get_mpz_t(), c.get_mpz_t(),
                               prev[static_cast<std::size_t>(i)].get_mpz_t());
            }
            if (j < n) falling *= static_cast<unsigned long>(n - j);
        }
        rows_[static_cast<std::size_t>(n)] = std::move(row);
    }
}

const BigInt& DArcaisTriangle::entry(int n, int k) const {
    if (n < 1 || n > max_n_ || k < 1 || k > n)
        throw std::domain_error("DArcaisTriangle::entry: require 1 <= k <= n <= max_n");
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k) - 1];
}

const std::vector<BigInt>& DArcaisTriangle::row(int n) const {
    if (n < 1 || n > max_n_)
        throw std::domain_error("DArcaisTriangle::row: require 1 <= n <= max_n");
    return rows_[static_cast<std::size_t>(n)];
}

DArcaisTriangle darcais_triangle(int n_max) { return DArcaisTriangle(n_max); }

BigInt darcais_bell(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("darcais_bell: require 1 <= k <= n");
    const RationalSeries power = lambert_series(n).pow(static_cast<unsigned long>(k));
    Rational value = power[n];
    value *= make_rational(factorial(static_cast<unsigned long>(n)),
                           factorial(static_cast<unsigned long>(k)));
    if (value.get_den() != 1)
        throw std::runtime_error("darcais_bell: non-integer result, series power is inconsistent");
    return value.get_num();
}

Rational a_coeff(const DArcaisTriangle& triangle, int n, int k) {
    return make_rational(factorial(static_cast<unsigned long>(k)) * triangle.entry(n, k),
                         factorial(static_cast<unsigned long>(n)));
}

PartitionTable::PartitionTable(int max_n) {
    if (max_n < 0) throw std::domain_error("PartitionTable: max_n must be >= 0");
    values_.resize(static_cast<std::size_t>(max_n) + 1);
    values_[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        BigInt acc = 0;
        for (long j = 1;; ++j) {
            const long g1 = j * (3 * j - 1) / 2;
            if (g1 > n) break;
            const long g2 = j * (3 * j + 1) / 2;
            if (j % 2 == 1) {
                acc += values_[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) acc += values_[static_cast<std::size_t>(n - g2)];
            } else {
                acc -= values_[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) acc -= values_[static_cast<std::size_t>(n - g2)];
            }
        }
        values_[static_cast<std::size_t>(n)] = acc;
    }
}

PartitionTable partition_table(int n_max) { return PartitionTable(n_max); }

namespace {

void composition_sum(int remaining, int parts, const Rational& prod,
                     const std::vector<Rational>& ratio, Rational& total) {
    if (parts == 1) {
        total += prod * ratio[static_cast<std::size_t>(remaining)];
        return;
    }
    for (int v = 1; v <= remaining - (parts - 1); ++v)
        composition_sum(remaining - v, parts - 1, prod * ratio[static_cast<std::size_t>(v)], ratio,
                        total);
}

}  // namespace

CompositionCheck composition_check(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("composition_check: require 1 <= k <= n");
    if (n > 14)
        throw std::length_error("composition_check: n = " + std::to_string(n) +
                                " exceeds the enumeration cap of 14");
    std::vector<Rational> ratio(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m)
        ratio[static_cast<std::size_t>(m)] =
            make_rational(sigma(static_cast<std::uint64_t>(m)), BigInt(static_cast<unsigned long>(m)));
    Rational total(0);
    composition_sum(n, k, Rational(1), ratio, total);
    const DArcaisTriangle triangle(n);
    return {total, a_coeff(triangle, n, k)};
}

Rational asymmetry_stat(const DArcaisTriangle& triangle, int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("asymmetry_stat: require 1 <= k <= n");
    const Rational a = a_coeff(triangle, n, k);
    const Rational b = a_coeff(triangle, n, n + 1 - k);
    return Rational(a - b) / Rational(a + b);
}

Rational logconcavity_ratio(const DArcaisTriangle& triangle, int n, int k) {
    if (k < 2 || k > n - 1)
        throw std::domain_error("logconcavity_ratio: require 2 <= k <= n-1");
    const Rational mid = a_coeff(triangle, n, k);
    return Rational(mid * mid) /
           Rational(a_coeff(triangle, n, k - 1) * a_coeff(triangle, n, k + 1));
}

double logconcavity_lhs(const DArcaisTriangle& triangle, int n, int k) {
    return ln_rational(logconcavity_ratio(triangle, n, k));
}

}  // namespace darcais
