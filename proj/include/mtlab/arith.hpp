#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mtlab/bigint.hpp"

namespace mtlab {

struct SqrtResult
{
    BigInt root;
    bool exact = false;
};

/// floor(sqrt(n)) and whether n is a perfect square. Throws usage_error for n < 0.
SqrtResult int_sqrt(BigInt const & n);

/// Largest e with q^e | n. Requires n != 0 and q >= 2.
unsigned valuation(BigInt const & n, BigInt const & q);

/// Kronecker symbol (a|n). (0|0) is a usage error.
int kronecker(BigInt const & a, BigInt const & n);
int kronecker_i64(std::int64_t a, std::int64_t n);

struct PrimalityConfig
{
    /// Miller-Rabin rounds beyond 64 bits; 64 random bases put the
    /// false-positive rate below 4^-64 = 2^-128.
    unsigned rounds = 64;
    std::uint64_t seed = 0x6d746c6162ULL;
};

/// Deterministic for |n| < 2^64, Miller-Rabin with seeded random bases above.
/// Values below 2 are not prime.
bool is_prime(BigInt const & n, PrimalityConfig const & cfg = {});

// 64-bit kernels shared by the factoring and class-number hot paths.
namespace u64 {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t isqrt(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

}  // namespace u64

/// Primes below `bound`, computed once per bound by a simple sieve.
std::vector<std::uint32_t> primes_below(std::uint32_t bound);

/// Shared table of primes below 10^6 used for trial division.
std::span<std::uint32_t const> small_primes();

}  // namespace mtlab
