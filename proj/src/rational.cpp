#include "darcais/rational.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace darcais {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt factorial(unsigned long n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

double ln_rational(const Rational& q) {
    if (sgn(q) <= 0) throw std::domain_error("ln_rational: argument must be positive");
    long en = 0;
    long ed = 0;
    const double mn = mpz_get_d_2exp(&en, mpq_numref(q.get_mpq_t()));
    const double md = mpz_get_d_2exp(&ed, mpq_denref(q.get_mpq_t()));
    return static_cast<double>(en - ed) * std::numbers::ln2 + std::log(mn) - std::log(md);
}

}  // namespace darcais
