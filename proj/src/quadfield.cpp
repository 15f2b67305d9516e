#include "mtlab/quadfield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "divisors.hpp"
#include "mtlab/arith.hpp"
#include "mtlab/factor.hpp"

namespace mtlab {

namespace {

using i128 = __int128;

constexpr std::int64_t max_abs_discriminant = std::int64_t{1} << 62;

i128 mod_nonneg(i128 a, i128 m)
{
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

struct XGcd
{
    i128 u, v, d;
};

/// u a + v b = d = gcd(a, b) >= 0.
XGcd xgcd(i128 a, i128 b)
{
    i128 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        i128 const q = old_r / r;
        i128 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_s, -old_t, -old_r};
    return {old_s, old_t, old_r};
}

std::int64_t narrow(i128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("quadratic form coefficient exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

void check_discriminant_range(std::int64_t D)
{
    if (D >= max_abs_discriminant || D <= -max_abs_discriminant)
        throw usage_error("discriminant outside the supported range |D| < 2^62");
}

bool squarefree_u64(std::uint64_t n)
{
    for (auto [p, e] : factor_u64(n)) {
        if (e > 1)
            return false;
    }
    return true;
}

}  // namespace

std::string QuadForm::to_string() const
{
    std::ostringstream os;
    os << '(' << a << ", " << b << ", " << c << ')';
    return os.str();
}

BigInt fundamental_discriminant(BigInt const & delta)
{
    if (delta == 0 || delta == 1)
        throw usage_error("fundamental_discriminant: delta must differ from 0 and 1");
    FactorBudget quick;
    quick.trial_bound = 10'000;
    quick.rho_iterations = 1 << 16;
    if (squarefree_status(delta, quick).is_not_squarefree())
        throw usage_error("fundamental_discriminant: delta is not squarefree: " + to_string(delta));
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), delta.get_mpz_t(), 4);
    return r == 1 ? delta : BigInt(4 * delta);
}

bool is_fundamental_discriminant(std::int64_t D)
{
    if (D == 0 || D == 1)
        return false;
    std::int64_t const r = ((D % 4) + 4) % 4;
    std::uint64_t const mag = D < 0 ? static_cast<std::uint64_t>(-D) : static_cast<std::uint64_t>(D);
    if (r == 1)
        return squarefree_u64(mag);
    if (r != 0)
        return false;
    std::int64_t const m = D / 4;
    std::int64_t const mr = ((m % 4) + 4) % 4;
    if (mr != 2 && mr != 3)
        return false;
    return squarefree_u64(mag / 4);
}

QuadField::QuadField(BigInt delta) : delta_(std::move(delta)), D_(fundamental_discriminant(delta_))
{}

char const * to_string(ClassNumberMethod m)
{
    switch (m) {
        case ClassNumberMethod::FormEnumeration: return "FormEnumeration";
        case ClassNumberMethod::CycleCount: return "CycleCount";
        case ClassNumberMethod::Analytic: return "Analytic";
    }
    return "FormEnumeration";
}

QuadForm principal_form(std::int64_t D)
{
    std::int64_t const b = ((D % 2) + 2) % 2;
    return {1, b, (b * b - D) / 4};
}

QuadForm reduce_definite(QuadForm f)
{
    i128 const D = f.discriminant();
    if (D >= 0 || f.a <= 0)
        throw usage_error("reduce_definite: form must be positive definite: " + f.to_string());
    i128 a = f.a, b = f.b, c = f.c;
    for (;;) {
        if (!(-a < b && b <= a)) {
            i128 const two_a = 2 * a;
            i128 r = mod_nonneg(b, two_a);  // [0, 2a)
            if (r > a)
                r -= two_a;
            b = r;
            c = (b * b - D) / (4 * a);
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        if ((a == c || b == a) && b < 0)
            b = -b;
        break;
    }
    return {narrow(a), narrow(b), narrow(c)};
}

std::vector<QuadForm> reduced_forms_imaginary(std::int64_t D, EnumerationOptions const & opts)
{
    if (D >= 0)
        throw usage_error("reduced_forms_imaginary: D must be negative");
    check_discriminant_range(D);
    std::int64_t const r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1)
        throw usage_error("reduced_forms_imaginary: D must be 0 or 1 mod 4");

    std::uint64_t const abs_d = static_cast<std::uint64_t>(-D);
    std::uint64_t const b_max = u64::isqrt(abs_d / 3);
    std::uint64_t const b_start = abs_d % 2;
    std::uint64_t const total = b_max >= b_start ? (b_max - b_start) / 2 + 1 : 0;

    std::vector<QuadForm> forms;
    std::uint64_t done = 0;
    for (std::uint64_t b = b_start; b <= b_max; b += 2) {
        std::uint64_t const m = (b * b + abs_d) / 4;  // a * c
        for (std::uint64_t a : detail::divisors_u64(m)) {
            if (a < b || a == 0)
                continue;
            std::uint64_t const c = m / a;
            if (a > c)
                continue;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            auto const ai = static_cast<std::int64_t>(a);
            auto const bi = static_cast<std::int64_t>(b);
            auto const ci = static_cast<std::int64_t>(c);
            forms.push_back({ai, bi, ci});
            if (b > 0 && a != b && a != c)
                forms.push_back({ai, -bi, ci});
        }
        ++done;
        if (opts.progress && (done % 4096 == 0 || done == total))
            opts.progress(done, total);
    }
    std::sort(forms.begin(), forms.end(), [](QuadForm const & l, QuadForm const & r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    });
    return forms;
}

ClassNumberResult class_number_imaginary(std::int64_t D, EnumerationOptions const & opts)
{
    if (D >= 0)
        throw usage_error("class_number_imaginary: D must be negative");
    check_discriminant_range(D);
    if (!is_fundamental_discriminant(D))
        throw usage_error("class_number_imaginary: D is not a fundamental discriminant");
    ClassNumberResult res;
    res.h = reduced_forms_imaginary(D, opts).size();
    res.method = ClassNumberMethod::FormEnumeration;
    return res;
}

QuadForm compose(QuadForm const & f1, QuadForm const & f2, std::int64_t D)
{
    if (D >= 0)
        throw usage_error("compose: D must be negative");
    if (f1.discriminant() != D || f2.discriminant() != D)
        throw usage_error("compose: forms do not have discriminant " + std::to_string(D));
    auto primitive = [](QuadForm const & f) {
        return std::gcd(std::gcd(f.a, f.b), f.c) == 1;
    };
    if (!primitive(f1) || !primitive(f2))
        throw usage_error("compose: forms must be primitive");

    i128 a1 = f1.a, b1 = f1.b;
    i128 a2 = f2.a, b2 = f2.b, c2 = f2.c;
    if (a1 > a2) {
        std::swap(a1, a2);
        std::swap(b1, b2);
        c2 = f1.c;
    }
    i128 const s = (b1 + b2) / 2;
    i128 const n = b2 - s;

    i128 y1, d;
    if (a2 % a1 == 0) {
        y1 = 0;
        d = a1;
    } else {
        XGcd const g = xgcd(a2, a1);
        y1 = g.u;
        d = g.d;
    }

    i128 x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        XGcd const g = xgcd(s, d);
        x2 = g.u;
        y2 = -g.v;
        d1 = g.d;
    }

    i128 const v1 = a1 / d1;
    i128 const v2 = a2 / d1;
    i128 const r = mod_nonneg(y1 * y2 * n - x2 * c2, v1);
    i128 const b3 = b2 + 2 * v2 * r;
    i128 const a3 = v1 * v2;
    i128 const c3 = (b3 * b3 - static_cast<i128>(D)) / (4 * a3);
    return reduce_definite({narrow(a3), narrow(b3), narrow(c3)});
}

std::optional<std::uint64_t> form_order(QuadForm const & f, std::int64_t D, std::uint64_t bound)
{
    QuadForm const base = reduce_definite(f);
    if (base.discriminant() != D)
        throw usage_error("form_order: form does not have discriminant " + std::to_string(D));
    QuadForm const one = principal_form(D);
    QuadForm power = base;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        if (power == one)
            return k;
        power = compose(power, base, D);
    }
    return std::nullopt;
}

}  // namespace mtlab
