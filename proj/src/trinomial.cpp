#include "mtlab/trinomial.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "mtlab/arith.hpp"
#include "polymod.hpp"
#include "sylvester.hpp"

namespace mtlab {

Trinomial::Trinomial(unsigned degree, BigInt A, BigInt B)
    : degree_(degree), A_(std::move(A)), B_(std::move(B))
{
    if (degree_ < 2)
        throw usage_error("trinomial degree must be at least 2");
    if (sgn(B_) == 0)
        throw usage_error("trinomial constant term must be nonzero");
}

std::vector<BigInt> Trinomial::coefficients() const
{
    std::vector<BigInt> c(degree_ + 1, BigInt(0));
    c[0] = B_;
    c[1] += A_;
    c[degree_] += 1;
    return c;
}

BigInt Trinomial::evaluate(BigInt const & x) const
{
    return pow_ui(x, degree_) + A_ * x + B_;
}

std::string Trinomial::to_string() const
{
    std::ostringstream os;
    os << "x^" << degree_;
    auto term = [&](BigInt const & c, char const * suffix) {
        if (sgn(c) == 0)
            return;
        os << (sgn(c) < 0 ? " - " : " + ");
        BigInt const mag = abs(c);
        if (mag != 1 || *suffix == '\0')
            os << mtlab::to_string(mag);
        os << suffix;
    };
    term(A_, "x");
    term(B_, "");
    return os.str();
}

BigInt swan_discriminant(Trinomial const & t)
{
    unsigned long const n = t.degree();
    BigInt const N = n;
    BigInt inner = pow_ui(N, n) * pow_ui(t.B(), n - 1);
    BigInt const second = pow_ui(N - 1, n - 1) * pow_ui(t.A(), n);
    if (n % 2 == 0)
        inner -= second;
    else
        inner += second;
    unsigned long const sign_exp = n * (n - 1) / 2;
    return sign_exp % 2 == 0 ? inner : BigInt(-inner);
}

BigInt sylvester_resultant(std::span<BigInt const> f, std::span<BigInt const> g)
{
    return detail::sylvester_resultant<BigInt>(f, g);
}

BigInt resultant_discriminant(Trinomial const & t)
{
    unsigned const n = t.degree();
    if (n > max_sylvester_degree)
        throw usage_error("resultant_discriminant: degree above " +
                          std::to_string(max_sylvester_degree));
    std::vector<BigInt> const f = t.coefficients();
    std::vector<BigInt> df(n, BigInt(0));
    for (unsigned i = 1; i <= n; ++i)
        df[i - 1] = f[i] * i;
    while (!df.empty() && df.back() == 0)
        df.pop_back();
    BigInt const res = sylvester_resultant(f, df);
    unsigned long const sign_exp = static_cast<unsigned long>(n) * (n - 1) / 2;
    return sign_exp % 2 == 0 ? res : BigInt(-res);
}

namespace {

/// floor of the real k-th root of num/den for num, den > 0.
BigInt floor_root_of_ratio(BigInt const & num, BigInt const & den, unsigned long k)
{
    BigInt q = num / den;
    BigInt r;
    mpz_root(r.get_mpz_t(), q.get_mpz_t(), k);
    return r;
}

/// Integer points where the sign of f' may change, i.e. floor(c) for each
/// real zero c of f'(x) = N x^{N-1} + A.
std::vector<BigInt> breakpoints(Trinomial const & t)
{
    unsigned long const k = t.degree() - 1;
    BigInt const N = t.degree();
    BigInt const magA = abs(t.A());
    std::vector<BigInt> out;
    if (sgn(t.A()) == 0) {
        out.push_back(0);
        return out;
    }
    BigInt const r = floor_root_of_ratio(magA, N, k);
    bool const exact = N * pow_ui(r, k) == magA;
    BigInt const ceil_r = exact ? r : BigInt(r + 1);
    if (k % 2 == 1) {
        // single real critical point with the sign of -A
        if (sgn(t.A()) < 0)
            out.push_back(r);
        else
            out.push_back(-ceil_r);
    } else if (sgn(t.A()) < 0) {
        out.push_back(-ceil_r);
        out.push_back(r);
    }
    return out;
}

}  // namespace

std::vector<BigInt> rational_roots(Trinomial const & t)
{
    // Every root satisfies |z| < 1 + max(|A|, |B|).
    BigInt const bound = 1 + std::max(abs(t.A()), abs(t.B()));
    std::vector<BigInt> cuts = breakpoints(t);

    std::vector<std::pair<BigInt, BigInt>> segments;
    BigInt lo = -bound;
    for (auto const & c : cuts) {
        if (c >= lo) {
            segments.emplace_back(lo, std::min<BigInt>(c, bound));
            lo = c + 1;
        }
    }
    if (lo <= bound)
        segments.emplace_back(lo, bound);

    std::vector<BigInt> roots;
    for (auto const & [a, b] : segments) {
        if (a > b)
            continue;
        BigInt const fa = t.evaluate(a);
        BigInt const fb = t.evaluate(b);
        if (sgn(fa) == 0)
            roots.push_back(a);
        if (sgn(fb) == 0 && b != a)
            roots.push_back(b);
        if (sgn(fa) == 0 || sgn(fb) == 0 || sgn(fa) == sgn(fb))
            continue;
        // f is strictly monotone on [a, b]: bisect for an exact zero.
        BigInt l = a, h = b;
        int const sl = sgn(fa);
        while (h - l > 1) {
            BigInt mid = l + (h - l) / 2;
            int const sm = sgn(t.evaluate(mid));
            if (sm == 0) {
                roots.push_back(mid);
                break;
            }
            if (sm == sl)
                l = mid;
            else
                h = mid;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<BigInt> eisenstein_primes(Trinomial const & t, FactoredInt const & fB)
{
    if (!fB.complete())
        throw usage_error("eisenstein_primes: factorization of B is incomplete");
    if (fB.value() != t.B())
        throw usage_error("eisenstein_primes: factorization does not match B");
    std::vector<BigInt> out;
    for (auto const & pp : fB.factors()) {
        if (pp.exponent == 1 && mpz_divisible_p(t.A().get_mpz_t(), pp.prime.get_mpz_t()))
            out.push_back(pp.prime);
    }
    return out;
}

bool is_irreducible_mod_p(Trinomial const & t, std::uint64_t p)
{
    if (p < 2 || p >= (1ULL << 32) || !u64::is_prime(p))
        throw usage_error("is_irreducible_mod_p: p must be a prime below 2^32");
    polymod::Poly m(t.degree() + 1, 0);
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), t.B().get_mpz_t(), p);
    m[0] = r.get_ui();
    mpz_fdiv_r_ui(r.get_mpz_t(), t.A().get_mpz_t(), p);
    m[1] = (m[1] + r.get_ui()) % p;
    m[t.degree()] = 1;
    return polymod::is_irreducible(m, p);
}

char const * to_string(IrreducibilityVerdict::Kind k)
{
    switch (k) {
        case IrreducibilityVerdict::Kind::Irreducible: return "Irreducible";
        case IrreducibilityVerdict::Kind::Reducible: return "Reducible";
        case IrreducibilityVerdict::Kind::Unknown: return "Unknown";
    }
    return "Unknown";
}

char const * to_string(IrreducibilityVerdict::Certificate c)
{
    switch (c) {
        case IrreducibilityVerdict::Certificate::None: return "None";
        case IrreducibilityVerdict::Certificate::RationalRootExhaustion: return "RationalRootExhaustion";
        case IrreducibilityVerdict::Certificate::Eisenstein: return "Eisenstein";
        case IrreducibilityVerdict::Certificate::ModP: return "ModP";
    }
    return "None";
}

std::vector<std::uint64_t> default_trial_primes(BigInt const & disc, std::size_t count)
{
    std::vector<std::uint64_t> out;
    for (std::uint32_t p : small_primes()) {
        if (out.size() >= count)
            break;
        if (sgn(disc) != 0 && mpz_divisible_ui_p(disc.get_mpz_t(), p))
            continue;
        out.push_back(p);
    }
    return out;
}

IrreducibilityVerdict irreducibility(Trinomial const & t,
                                     std::span<std::uint64_t const> trial_primes,
                                     FactorBudget const & budget)
{
    using V = IrreducibilityVerdict;
    V v;
    auto const roots = rational_roots(t);
    if (!roots.empty()) {
        v.kind = V::Kind::Reducible;
        v.root = roots.front();
        v.reason = "integer root " + to_string(roots.front());
        return v;
    }
    if (t.degree() <= 3) {
        v.kind = V::Kind::Irreducible;
        v.certificate = V::Certificate::RationalRootExhaustion;
        return v;
    }
    BigInt const disc = swan_discriminant(t);
    if (sgn(disc) == 0) {
        v.kind = V::Kind::Reducible;
        v.reason = "zero discriminant: repeated factor";
        return v;
    }

    FactoredInt const fB = factorize(t.B(), budget);
    if (fB.complete()) {
        auto const eis = eisenstein_primes(t, fB);
        if (!eis.empty()) {
            v.kind = V::Kind::Irreducible;
            v.certificate = V::Certificate::Eisenstein;
            v.prime = eis.front();
            return v;
        }
    }

    std::vector<std::uint64_t> defaults;
    if (trial_primes.empty()) {
        defaults = default_trial_primes(disc);
        trial_primes = defaults;
    }
    for (std::uint64_t p : trial_primes) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p))
            continue;
        if (is_irreducible_mod_p(t, p)) {
            v.kind = V::Kind::Irreducible;
            v.certificate = V::Certificate::ModP;
            v.prime = from_u64(p);
            return v;
        }
    }
    v.kind = V::Kind::Unknown;
    v.reason = "no Eisenstein prime and no irreducible reduction among " +
               std::to_string(trial_primes.size()) + " trial primes";
    return v;
}

namespace {

/// Residue of x modulo m in [0, m).
BigInt mod_nonneg(BigInt const & x, BigInt const & m)
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool divides(BigInt const & d, BigInt const & n)
{
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// (x + (-x)^(q^e)) / q reduced mod q, computed from residues mod q^2.
BigInt frobenius_quotient_mod_q(BigInt const & x, BigInt const & q, unsigned e)
{
    BigInt const q2 = q * q;
    BigInt const base = mod_nonneg(-x, q2);
    BigInt const exponent = pow_ui(q, e);
    BigInt power;
    mpz_powm(power.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), q2.get_mpz_t());
    BigInt const total = mod_nonneg(x + power, q2);
    if (!divides(q, total))
        throw std::logic_error("JKS: q does not divide x + (-x)^(q^e)");
    return BigInt(total / q);
}

/// Residue of b^e mod q for e >= 0.
BigInt powmod(BigInt const & b, unsigned long e, BigInt const & q)
{
    BigInt r;
    BigInt const base = mod_nonneg(b, q);
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), e, q.get_mpz_t());
    return r;
}

}  // namespace

int jks_condition_for(Trinomial const & t, BigInt const & q)
{
    bool const qa = divides(q, t.A());
    bool const qb = divides(q, t.B());
    if (qa && qb)
        return 1;
    if (qa)
        return 2;
    if (qb)
        return 3;
    return 4;
}

JksResult jks_prime_test(Trinomial const & t, BigInt const & q)
{
    if (t.degree() < 3)
        throw usage_error("jks_prime_test: degree must be at least 3");
    BigInt const disc = swan_discriminant(t);
    if (q < 2 || !divides(q, disc))
        throw usage_error("jks_prime_test: q must be a prime dividing the discriminant");

    unsigned long const N = t.degree();
    BigInt const & A = t.A();
    BigInt const & B = t.B();
    JksResult res;
    res.condition = jks_condition_for(t, q);

    switch (res.condition) {
        case 1: {
            res.pass = !divides(q * q, B);
            break;
        }
        case 2: {
            BigInt const A2 = A / q;
            unsigned const j = valuation(BigInt(N), q);
            BigInt const B1 = frobenius_quotient_mod_q(B, q, j);
            bool const q_a2 = divides(q, A2);
            bool const q_b1 = divides(q, B1);
            // A2 * (-B * A2^N - (-B1)^N) mod q
            BigInt const inner = mod_nonneg(-B * powmod(A2, N, q) - powmod(-B1, N, q), q);
            BigInt const value = mod_nonneg(A2 * inner, q);
            res.pass = (q_a2 && !q_b1) || sgn(value) != 0;
            break;
        }
        case 3: {
            BigInt const B2 = B / q;
            unsigned const l = valuation(BigInt(N - 1), q);
            BigInt const A1 = frobenius_quotient_mod_q(A, q, l);
            bool const q_a1 = divides(q, A1);
            bool const q_b2 = divides(q, B2);
            // A1 * (-A * A1^(N-1) - (-B2)^(N-1)) mod q
            BigInt const inner = mod_nonneg(-A * powmod(A1, N - 1, q) - powmod(-B2, N - 1, q), q);
            BigInt const value = mod_nonneg(A1 * inner, q);
            res.pass = (q_a1 && !q_b2) || sgn(value) != 0;
            break;
        }
        default: {
            res.pass = !divides(q * q, disc);
            break;
        }
    }
    return res;
}

char const * to_string(MonogenicityVerdict::Kind k)
{
    switch (k) {
        case MonogenicityVerdict::Kind::Monogenic: return "Monogenic";
        case MonogenicityVerdict::Kind::NotMonogenic: return "NotMonogenic";
        case MonogenicityVerdict::Kind::NotIrreducible: return "NotIrreducible";
        case MonogenicityVerdict::Kind::Unknown: return "Unknown";
    }
    return "Unknown";
}

MonogenicityVerdict monogenicity(Trinomial const & t, FactoredInt const & disc_factors,
                                 IrreducibilityVerdict const & irr)
{
    using V = MonogenicityVerdict;
    if (t.degree() < 3)
        throw usage_error("monogenicity: degree must be at least 3");
    BigInt const disc = swan_discriminant(t);
    V v;
    if (irr.reducible() || sgn(disc) == 0) {
        v.kind = V::Kind::NotIrreducible;
        v.root = irr.root;
        v.reason = irr.reducible() ? irr.reason : "zero discriminant";
        return v;
    }
    if (disc_factors.value() != disc)
        throw usage_error("monogenicity: factorization does not match the discriminant");

    for (auto const & pp : disc_factors.factors()) {
        JksResult const r = jks_prime_test(t, pp.prime);
        if (!r.pass) {
            v.kind = V::Kind::NotMonogenic;
            v.witness_prime = pp.prime;
            v.condition = r.condition;
            return v;
        }
    }
    if (irr.unknown()) {
        v.kind = V::Kind::Unknown;
        v.reason = "irreducibility not certified: " + irr.reason;
        return v;
    }
    if (!disc_factors.complete()) {
        v.kind = V::Kind::Unknown;
        v.reason = "discriminant factorization incomplete (cofactor of " +
                   std::to_string(bit_length(disc_factors.cofactor())) + " bits)";
        return v;
    }
    v.kind = V::Kind::Monogenic;
    return v;
}

MonogenicityVerdict monogenicity(Trinomial const & t, FactorBudget const & budget)
{
    IrreducibilityVerdict const irr = irreducibility(t, {}, budget);
    BigInt const disc = swan_discriminant(t);
    if (irr.reducible() || sgn(disc) == 0)
        return monogenicity(t, FactoredInt(disc, {}, abs(disc)), irr);
    return monogenicity(t, factorize(disc, budget), irr);
}

namespace {

using i128 = __int128;

i128 cubic_resultant_at(std::array<i128, 4> const & f, i128 x0, i128 c0, i128 c1, i128 c2)
{
    // h(y) = x0 - (c2 y^2 + c1 y + c0)
    std::vector<i128> h{x0 - c0, -c1, -c2};
    while (!h.empty() && h.back() == 0)
        h.pop_back();
    return detail::sylvester_resultant<i128>(std::span<i128 const>(f.data(), f.size()),
                                             std::span<i128 const>(h.data(), h.size()));
}

}  // namespace

bool index_oracle_cubic(Trinomial const & t, std::uint64_t q, std::uint64_t q_bound)
{
    if (t.degree() != 3)
        throw usage_error("index_oracle_cubic: cubic trinomials only");
    if (q > q_bound || !u64::is_prime(q))
        throw usage_error("index_oracle_cubic: q must be a prime at most " + std::to_string(q_bound));
    if (!fits_i64(t.A()) || !fits_i64(t.B()) || abs(t.A()) > 1'000'000 || abs(t.B()) > 1'000'000)
        throw usage_error("index_oracle_cubic: coefficients too large for the brute-force scan");
    BigInt const disc = swan_discriminant(t);
    if (!mpz_divisible_ui_p(disc.get_mpz_t(), q))
        throw usage_error("index_oracle_cubic: q must divide the discriminant");
    if (!rational_roots(t).empty())
        throw usage_error("index_oracle_cubic: trinomial is reducible");

    std::array<i128, 4> const f{static_cast<i128>(to_i64(t.B())), static_cast<i128>(to_i64(t.A())), 0, 1};
    i128 const qq = static_cast<i128>(q);
    for (std::uint64_t c2 = 0; c2 < q; ++c2) {
        for (std::uint64_t c1 = 0; c1 < q; ++c1) {
            for (std::uint64_t c0 = 0; c0 < q; ++c0) {
                if (c0 == 0 && c1 == 0 && c2 == 0)
                    continue;
                // chi(x) = Res_y(f(y), x - g(y)) is the monic characteristic
                // polynomial x^3 + p2 x^2 + p1 x + p0 of g(theta).
                std::array<i128, 4> vals;
                for (int x = 0; x < 4; ++x)
                    vals[x] = cubic_resultant_at(f, x, c0, c1, c2);
                i128 const p0 = vals[0];
                i128 const s1 = vals[1] - 1 - p0;  // p2 + p1
                i128 const s2 = vals[2] - 8 - p0;  // 4 p2 + 2 p1
                i128 const p2 = (s2 - 2 * s1) / 2;
                i128 const p1 = s1 - p2;
                if (27 + 9 * p2 + 3 * p1 + p0 != vals[3])
                    throw std::logic_error("index_oracle_cubic: interpolation mismatch");
                // g(theta)/q is integral iff q^k divides the x^(3-k) coefficient.
                if (p2 % qq == 0 && p1 % (qq * qq) == 0 && p0 % (qq * qq * qq) == 0)
                    return true;
            }
        }
    }
    return false;
}

char const * to_string(CubicGaloisGroup g)
{
    return g == CubicGaloisGroup::S3 ? "S3" : "C3";
}

CubicGaloisGroup cubic_galois_group(Trinomial const & t)
{
    if (t.degree() != 3)
        throw usage_error("cubic_galois_group: cubic trinomials only");
    if (!rational_roots(t).empty())
        throw usage_error("cubic_galois_group: trinomial is reducible");
    BigInt const disc = swan_discriminant(t);
    if (sgn(disc) < 0)
        return CubicGaloisGroup::S3;
    return int_sqrt(disc).exact ? CubicGaloisGroup::C3 : CubicGaloisGroup::S3;
}

}  // namespace mtlab
