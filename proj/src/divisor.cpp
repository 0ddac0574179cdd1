#include "darcais/divisor.hpp"

#include <stdexcept>

namespace darcais {

std::uint64_t sigma_u64(std::uint64_t n) {
    if (n == 0) throw std::domain_error("sigma: n must be positive");
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += d;
        const std::uint64_t e = n / d;
        if (e != d) s += e;
    }
    return s;
}

std::vector<std::uint64_t> sigma_sieve(std::size_t max_n) {
    std::vector<std::uint64_t> s(max_n + 1, 0);
    for (std::size_t d = 1; d <= max_n; ++d)
        for (std::size_t m = d; m <= max_n; m += d) s[m] += d;
    return s;
}

}  // namespace darcais
