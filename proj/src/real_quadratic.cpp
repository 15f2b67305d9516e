#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "divisors.hpp"
#include "mtlab/arith.hpp"
#include "mtlab/quadfield.hpp"

namespace mtlab {

namespace {

using i128 = __int128;

void check_real_discriminant(std::int64_t D, char const * who)
{
    if (D <= 1)
        throw usage_error(std::string(who) + ": D must be greater than 1");
    if (D >= (std::int64_t{1} << 62))
        throw usage_error(std::string(who) + ": D outside the supported range");
    std::int64_t const r = D % 4;
    if (r != 0 && r != 1)
        throw usage_error(std::string(who) + ": D must be 0 or 1 mod 4");
    std::uint64_t const s = u64::isqrt(static_cast<std::uint64_t>(D));
    if (s * s == static_cast<std::uint64_t>(D))
        throw usage_error(std::string(who) + ": D must not be a square");
}

/// Walks the complete quotients (P + sqrt D)/Q of omega_D; calls
/// visit(P, Q) for each quotient of the first period and returns its length.
template <class Visit>
std::uint64_t walk_period(std::int64_t D, Visit && visit)
{
    auto const s = static_cast<std::int64_t>(u64::isqrt(static_cast<std::uint64_t>(D)));
    std::int64_t P = D % 4 == 1 ? 1 : 0;
    std::int64_t Q = 2;
    auto advance = [&]() {
        std::int64_t const a = (P + s) / Q;
        P = a * Q - P;
        Q = static_cast<std::int64_t>((static_cast<i128>(D) - static_cast<i128>(P) * P) / Q);
    };
    advance();
    std::int64_t const P1 = P, Q1 = Q;
    std::uint64_t period = 0;
    do {
        visit(P, Q);
        ++period;
        advance();
    } while (P != P1 || Q != Q1);
    return period;
}

}  // namespace

ContinuedFractionData continued_fraction_sqrt(std::int64_t D)
{
    check_real_discriminant(D, "continued_fraction_sqrt");
    long double const root = std::sqrt(static_cast<long double>(D));
    long double log_sum = 0;
    ContinuedFractionData out;
    out.period = walk_period(D, [&](std::int64_t P, std::int64_t Q) {
        log_sum += std::log((static_cast<long double>(P) + root) / static_cast<long double>(Q));
    });
    out.unit_norm = out.period % 2 == 1 ? -1 : 1;
    out.regulator = log_sum;
    return out;
}

FundamentalUnit fundamental_unit(std::int64_t D, std::uint64_t max_period)
{
    check_real_discriminant(D, "fundamental_unit");
    BigInt const Dz = from_i64(D);
    // epsilon = (X + Y sqrt D) / den, accumulated over one period.
    BigInt X = 1, Y = 0, den = 1;
    std::uint64_t steps = 0;
    std::uint64_t const period = walk_period(D, [&](std::int64_t P, std::int64_t Q) {
        if (++steps > max_period)
            throw usage_error("fundamental_unit: period exceeds the configured limit");
        BigInt const Pz = from_i64(P);
        BigInt const nx = X * Pz + Y * Dz;
        BigInt const ny = X + Y * Pz;
        X = nx;
        Y = ny;
        den *= from_i64(Q);
        BigInt g = gcd(gcd(X, Y), den);
        if (g > 1) {
            X /= g;
            Y /= g;
            den /= g;
        }
    });
    FundamentalUnit u;
    BigInt const x2 = 2 * X, y2 = 2 * Y;
    if (!mpz_divisible_p(x2.get_mpz_t(), den.get_mpz_t()) || !mpz_divisible_p(y2.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("fundamental_unit: period product is not a half-integral unit");
    u.x = x2 / den;
    u.y = y2 / den;
    u.norm = period % 2 == 1 ? -1 : 1;
    if (u.x * u.x - Dz * u.y * u.y != 4 * u.norm)
        throw std::logic_error("fundamental_unit: norm check failed");
    return u;
}

std::vector<QuadForm> reduced_forms_real(std::int64_t D, EnumerationOptions const & opts)
{
    check_real_discriminant(D, "reduced_forms_real");
    auto const ud = static_cast<std::uint64_t>(D);
    std::uint64_t const s = u64::isqrt(ud);
    std::uint64_t const b_start = ud % 2 == 1 ? 1 : 2;
    std::uint64_t const total = s >= b_start ? (s - b_start) / 2 + 1 : 0;

    // |a| lies in ((sqrt D - b)/2, (sqrt D + b)/2) for a reduced form.
    auto reduced = [&](std::uint64_t abs_a, std::uint64_t b) {
        i128 const lhs = static_cast<i128>(b) + 2 * static_cast<i128>(abs_a);
        if (lhs * lhs <= static_cast<i128>(ud))
            return false;
        i128 const diff = 2 * static_cast<i128>(abs_a) - static_cast<i128>(b);
        return diff <= 0 || diff * diff < static_cast<i128>(ud);
    };

    std::vector<QuadForm> forms;
    std::uint64_t done = 0;
    for (std::uint64_t b = b_start; b <= s; b += 2) {
        std::uint64_t const m = (ud - b * b) / 4;  // -a * c
        for (std::uint64_t a : detail::divisors_u64(m)) {
            if (!reduced(a, b))
                continue;
            std::uint64_t const c = m / a;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            auto const ai = static_cast<std::int64_t>(a);
            auto const bi = static_cast<std::int64_t>(b);
            auto const ci = static_cast<std::int64_t>(c);
            forms.push_back({ai, bi, -ci});
            forms.push_back({-ai, bi, ci});
        }
        ++done;
        if (opts.progress && (done % 4096 == 0 || done == total))
            opts.progress(done, total);
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

QuadForm rho_step(QuadForm const & f, std::int64_t D)
{
    auto const s = static_cast<std::int64_t>(u64::isqrt(static_cast<std::uint64_t>(D)));
    std::int64_t const two_c = 2 * (f.c < 0 ? -f.c : f.c);
    std::int64_t const t = ((s + f.b) % two_c + two_c) % two_c;
    std::int64_t const b = s - t;
    i128 const num = static_cast<i128>(b) * b - D;
    return {f.c, b, static_cast<std::int64_t>(num / (4 * static_cast<i128>(f.c)))};
}

ClassNumberResult class_number_real(std::int64_t D, EnumerationOptions const & opts)
{
    check_real_discriminant(D, "class_number_real");
    if (!is_fundamental_discriminant(D))
        throw usage_error("class_number_real: D is not a fundamental discriminant");

    std::vector<QuadForm> const forms = reduced_forms_real(D, opts);
    std::vector<bool> seen(forms.size(), false);
    auto index_of = [&](QuadForm const & f) {
        auto it = std::lower_bound(forms.begin(), forms.end(), f);
        if (it == forms.end() || *it != f)
            throw std::logic_error("rho step left the set of reduced forms: " + f.to_string());
        return static_cast<std::size_t>(it - forms.begin());
    };

    std::uint64_t cycles = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (seen[i])
            continue;
        ++cycles;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = index_of(rho_step(forms[j], D));
        }
        if (j != i)
            throw std::logic_error("rho orbit is not a cycle");
    }

    ContinuedFractionData const cf = continued_fraction_sqrt(D);
    ClassNumberResult res;
    res.method = ClassNumberMethod::CycleCount;
    res.narrow_h = cycles;
    res.unit_norm = cf.unit_norm;
    if (cf.unit_norm == -1) {
        res.h = cycles;
    } else {
        if (cycles % 2 != 0)
            throw std::logic_error("narrow class number is odd although the unit norm is +1");
        res.h = cycles / 2;
    }
    return res;
}

long double analytic_class_number_value(std::int64_t D)
{
    check_real_discriminant(D, "analytic_class_number_value");
    ContinuedFractionData const cf = continued_fraction_sqrt(D);
    long double const pi = std::numbers::pi_v<long double>;
    // chi_D is even, so the terms for a and D - a coincide.
    long double sum = 0, carry = 0;
    for (std::int64_t a = 1; 2 * a < D; ++a) {
        int const chi = kronecker_i64(D, a);
        if (chi == 0)
            continue;
        long double const term = chi * std::log(2 * std::sin(pi * static_cast<long double>(a) / static_cast<long double>(D)));
        long double const y = term - carry;
        long double const t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    sum *= 2;
    return -sum / (2 * cf.regulator);
}

std::optional<ClassNumberResult> class_number_real_analytic(std::int64_t D, AnalyticOptions const & opts)
{
    if (D > opts.cutoff)
        throw usage_error("class_number_real_analytic: D exceeds the cutoff");
    if (!is_fundamental_discriminant(D) || D <= 1)
        throw usage_error("class_number_real_analytic: D must be a positive fundamental discriminant");
    long double const value = analytic_class_number_value(D);
    long double const nearest = std::round(value);
    long double const gap = 0.5L - std::fabs(value - nearest);
    if (gap < opts.margin || nearest < 1)
        return std::nullopt;
    ClassNumberResult res;
    res.h = static_cast<std::uint64_t>(nearest);
    res.method = ClassNumberMethod::Analytic;
    ContinuedFractionData const cf = continued_fraction_sqrt(D);
    res.unit_norm = cf.unit_norm;
    return res;
}

}  // namespace mtlab
