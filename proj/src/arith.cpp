#include "mtlab/arith.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <utility>

namespace mtlab {

SqrtResult int_sqrt(BigInt const & n)
{
    if (sgn(n) < 0)
        throw usage_error("int_sqrt: negative input " + to_string(n));
    SqrtResult r;
    BigInt rem;
    mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    r.exact = sgn(rem) == 0;
    return r;
}

unsigned valuation(BigInt const & n, BigInt const & q)
{
    if (sgn(n) == 0)
        throw usage_error("valuation: n must be nonzero");
    if (q < 2)
        throw usage_error("valuation: q must be at least 2");
    BigInt m = abs(n);
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), q.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
        ++e;
    }
    return e;
}

int kronecker(BigInt const & a, BigInt const & n)
{
    if (sgn(a) == 0 && sgn(n) == 0)
        throw usage_error("kronecker: (0|0) is undefined");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker_i64(std::int64_t a, std::int64_t n)
{
    if (a == 0 && n == 0)
        throw usage_error("kronecker: (0|0) is undefined");
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            result = -result;
    }
    // Strip the factors of 2 from n using (a|2).
    int twos = std::countr_zero(static_cast<std::uint64_t>(n));
    if (twos > 0) {
        if ((a & 1) == 0)
            return 0;
        n >>= twos;
        if (twos & 1) {
            std::int64_t r8 = ((a % 8) + 8) % 8;
            if (r8 == 3 || r8 == 5)
                result = -result;
        }
    }
    // n is now odd and positive: Jacobi symbol.
    std::int64_t m = n;
    std::int64_t x = a % m;
    if (x < 0)
        x += m;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            std::int64_t r8 = m % 8;
            if (r8 == 3 || r8 == 5)
                result = -result;
        }
        std::swap(x, m);
        if (x % 4 == 3 && m % 4 == 3)
            result = -result;
        x %= m;
    }
    return m == 1 ? result : 0;
}

namespace u64 {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n)
        --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
    return std::gcd(a, b);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0)
            return n == p;
    }
    if (n < 41 * 41)
        return true;
    std::uint64_t d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    // These twelve bases are a deterministic witness set for n < 3.3e24.
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

}  // namespace u64

bool is_prime(BigInt const & n, PrimalityConfig const & cfg)
{
    if (n < 2)
        return false;
    if (fits_u64(n))
        return u64::is_prime(n.get_ui());

    for (std::uint32_t p : small_primes()) {
        if (p > 1000)
            break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }

    BigInt const n_minus_1 = n - 1;
    BigInt d = n_minus_1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(cfg.seed));
    BigInt const span_size = n - 3;
    BigInt x;
    for (unsigned round = 0; round < cfg.rounds; ++round) {
        BigInt a = rng.get_z_range(span_size) + 2;  // a in [2, n-2]
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_1)
            continue;
        bool composite = true;
        for (unsigned long i = 1; i < s; ++i) {
            mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
            if (x == n_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::uint32_t> primes_below(std::uint32_t bound)
{
    std::vector<std::uint32_t> primes;
    if (bound <= 2)
        return primes;
    std::vector<bool> composite(bound, false);
    for (std::uint32_t i = 2; i < bound; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < bound; j += i)
            composite[j] = true;
    }
    return primes;
}

std::span<std::uint32_t const> small_primes()
{
    static std::vector<std::uint32_t> const table = primes_below(1'000'000);
    return table;
}

}  // namespace mtlab
