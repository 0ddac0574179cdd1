#pragma once

#include <cstdint>
#include <vector>

namespace darcais {

/// Sum of divisors sigma(n) = sum_{d|n} d, by trial division. Throws
/// std::domain_error for n = 0.
std::uint64_t sigma_u64(std::uint64_t n);

/// sigma(1..max_n) filled by an additive sieve over multiples,
/// O(N log N) additions. Index 0 is unused and holds 0.
std::vector<std::uint64_t> sigma_sieve(std::size_t max_n);

}  // namespace darcais
