#include "mtlab/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "mtlab/arith.hpp"

namespace mtlab {

FactoredInt::FactoredInt(BigInt value, std::vector<PrimePower> factors, BigInt cofactor)
    : value_(std::move(value)), factors_(std::move(factors)), cofactor_(std::move(cofactor))
{
    std::sort(factors_.begin(), factors_.end(),
              [](PrimePower const & l, PrimePower const & r) { return l.prime < r.prime; });
}

BigInt FactoredInt::product() const
{
    BigInt p = cofactor_;
    for (auto const & f : factors_)
        p *= pow_ui(f.prime, f.exponent);
    return p;
}

namespace {

std::uint64_t rho_u64(std::uint64_t n)
{
    if (n % 2 == 0)
        return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, x = 2, ys = 2, g = 1, q = 1;
        std::uint64_t r = 1;
        constexpr std::uint64_t m = 128;
        auto f = [&](std::uint64_t v) {
            std::uint64_t s = u64::mulmod(v, v, n) + c;
            return s >= n ? s - n : s;
        };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = f(y);
                    q = u64::mulmod(q, x > y ? x - y : y - x, n);
                }
                g = u64::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = u64::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split_u64(std::uint64_t n, std::map<std::uint64_t, unsigned> & out)
{
    if (n == 1)
        return;
    if (u64::is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t const root = u64::isqrt(n);
    if (root * root == n) {
        split_u64(root, out);
        split_u64(root, out);
        return;
    }
    std::uint64_t d = rho_u64(n);
    split_u64(d, out);
    split_u64(n / d, out);
}

class Deadline
{
public:
    explicit Deadline(std::chrono::milliseconds limit)
        : enabled_(limit.count() > 0), end_(std::chrono::steady_clock::now() + limit)
    {}

    bool expired() const { return enabled_ && std::chrono::steady_clock::now() >= end_; }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point end_;
};

/// Brent's variant of Pollard rho. Returns a nontrivial divisor or 0 when
/// the iteration allowance runs out.
BigInt rho_big(BigInt const & n, std::mt19937_64 & rng, std::uint64_t & iterations_left,
               Deadline const & deadline)
{
    constexpr std::uint64_t m = 128;
    while (iterations_left > 0 && !deadline.expired()) {
        BigInt const c = BigInt(static_cast<unsigned long>(rng() % 1'000'000 + 1));
        BigInt y = BigInt(static_cast<unsigned long>(rng() % 1'000'000 + 2));
        BigInt x, ys, q = 1, g = 1, diff;
        std::uint64_t r = 1;
        auto step = [&](BigInt & v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                step(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    step(y);
                    diff = x - y;
                    q *= abs(diff);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += m;
                std::uint64_t spent = std::min<std::uint64_t>(iterations_left, lim);
                iterations_left -= spent;
                if (iterations_left == 0 || deadline.expired())
                    break;
            }
            if (g == 1 && (iterations_left == 0 || deadline.expired()))
                return 0;
            r <<= 1;
        }
        if (g == n) {
            do {
                step(ys);
                diff = x - ys;
                g = gcd(abs(diff), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
    return 0;
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n)
{
    if (n == 0)
        throw usage_error("factor_u64: n must be positive");
    std::map<std::uint64_t, unsigned> acc;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
        while (n % p == 0) {
            n /= p;
            ++acc[p];
        }
    }
    split_u64(n, acc);
    return {acc.begin(), acc.end()};
}

FactoredInt factorize(BigInt const & n, FactorBudget const & budget)
{
    if (sgn(n) == 0)
        throw usage_error("factorize: n must be nonzero");
    Deadline const deadline(budget.time_limit);

    BigInt m = abs(n);
    std::map<BigInt, unsigned> acc;

    for (std::uint32_t p : small_primes()) {
        if (p >= budget.trial_bound)
            break;
        if (m == 1 || fits_u64(m))
            break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            acc[BigInt(p)] += e;
        }
        if (BigInt(p) * p > m)
            break;
    }

    BigInt cofactor = 1;
    std::vector<BigInt> pending;
    if (m > 1)
        pending.push_back(m);

    std::mt19937_64 rng(budget.seed);
    std::uint64_t iterations_left = budget.rho_iterations;
    PrimalityConfig const primality{.rounds = 64, .seed = budget.seed};

    while (!pending.empty()) {
        BigInt x = std::move(pending.back());
        pending.pop_back();
        if (x == 1)
            continue;
        if (fits_u64(x)) {
            for (auto [p, e] : factor_u64(x.get_ui()))
                acc[from_u64(p)] += e;
            continue;
        }
        if (is_prime(x, primality)) {
            ++acc[x];
            continue;
        }
        if (auto sq = int_sqrt(x); sq.exact) {
            pending.push_back(sq.root);
            pending.push_back(sq.root);
            continue;
        }
        BigInt d = rho_big(x, rng, iterations_left, deadline);
        if (d == 0) {
            cofactor *= x;
            continue;
        }
        pending.push_back(x / d);
        pending.push_back(d);
    }

    // A split of an unfinished piece may leave primes that also divide the
    // cofactor; pull them out so the cofactor only holds unsplit material.
    std::vector<PrimePower> factors;
    for (auto & [p, e] : acc) {
        while (cofactor > 1 && mpz_divisible_p(cofactor.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(cofactor.get_mpz_t(), cofactor.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        factors.push_back({p, e});
    }
    return FactoredInt(n, std::move(factors), std::move(cofactor));
}

SquarefreeStatus squarefree_status(FactoredInt const & f)
{
    SquarefreeStatus s;
    for (auto const & pp : f.factors()) {
        if (pp.exponent >= 2) {
            s.kind = SquarefreeStatus::Kind::NotSquarefree;
            s.witness = pp.prime;
            return s;
        }
    }
    if (f.complete()) {
        s.kind = SquarefreeStatus::Kind::Squarefree;
        return s;
    }
    s.kind = SquarefreeStatus::Kind::Unknown;
    s.reason = "factorization incomplete; unsplit cofactor of " +
               std::to_string(bit_length(f.cofactor())) + " bits";
    return s;
}

SquarefreeStatus squarefree_status(BigInt const & n, FactorBudget const & budget)
{
    if (sgn(n) == 0)
        throw usage_error("squarefree_status: n must be nonzero");
    // Early exit on a repeated small prime before paying for the full pipeline.
    BigInt m = abs(n);
    for (std::uint32_t p : small_primes()) {
        if (p >= budget.trial_bound || BigInt(p) * p > m)
            break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                SquarefreeStatus s;
                s.kind = SquarefreeStatus::Kind::NotSquarefree;
                s.witness = p;
                return s;
            }
        }
    }
    return squarefree_status(factorize(n, budget));
}

char const * to_string(SquarefreeStatus::Kind k)
{
    switch (k) {
        case SquarefreeStatus::Kind::Squarefree: return "Squarefree";
        case SquarefreeStatus::Kind::NotSquarefree: return "NotSquarefree";
        case SquarefreeStatus::Kind::Unknown: return "Unknown";
    }
    return "Unknown";
}

}  // namespace mtlab
