#pragma once

#include <cstdint>
#include <vector>

namespace sfd {

// Sieve of Eratosthenes; primes p <= bound in ascending order.
// bound above 2^31 is rejected (the sieve table would not fit anyway).
std::vector<std::uint64_t> sieve_primes(std::uint64_t bound);

bool is_prime_u64(std::uint64_t n);

}  // namespace sfd
