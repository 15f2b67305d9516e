#include "doctest.h"
#include "mtlab/arith.hpp"
#include "mtlab/trinomial.hpp"

using namespace mtlab;

namespace {

Trinomial tri(unsigned n, long a, long b)
{
    return Trinomial(n, BigInt(a), BigInt(b));
}

// Monic f (constant first) has a monic factor of degree k over GF(p)?
bool has_factor_of_degree(std::vector<long> f, long p, unsigned k)
{
    std::vector<long> g(k + 1, 0);
    g[k] = 1;
    long const combos = [&] {
        long c = 1;
        for (unsigned i = 0; i < k; ++i)
            c *= p;
        return c;
    }();
    for (long idx = 0; idx < combos; ++idx) {
        long t = idx;
        for (unsigned i = 0; i < k; ++i) {
            g[i] = t % p;
            t /= p;
        }
        std::vector<long> r = f;
        for (auto & x : r)
            x = ((x % p) + p) % p;
        for (std::size_t top = r.size() - 1; top >= k; --top) {
            long const coef = r[top];
            for (unsigned i = 0; i <= k; ++i)
                r[top - k + i] = ((r[top - k + i] - coef * g[i]) % p + p) % p;
            if (top == k)
                break;
        }
        bool zero = true;
        for (unsigned i = 0; i < k; ++i)
            zero = zero && r[i] == 0;
        if (zero)
            return true;
    }
    return false;
}

}  // namespace

TEST_CASE("trinomial construction")
{
    CHECK_THROWS_AS(tri(1, 1, 1), usage_error);
    CHECK_THROWS_AS(tri(3, 1, 0), usage_error);
    CHECK(tri(3, -1, -1).to_string() == "x^3 - x - 1");
    CHECK(tri(6, -30, -5).to_string() == "x^6 - 30x - 5");
    CHECK(tri(3, 0, 7).to_string() == "x^3 + 7");
    CHECK(tri(3, 2, 5).evaluate(2) == 17);
}

TEST_CASE("swan_discriminant examples")
{
    CHECK(swan_discriminant(tri(3, -1, -1)) == -23);
    CHECK(swan_discriminant(tri(3, -10, -1)) == 3973);
    CHECK(swan_discriminant(tri(5, 1, 1)) == 3381);
    CHECK(swan_discriminant(tri(6, -30, -5)) == BigInt("2278270800000"));
}

TEST_CASE("resultant_discriminant examples")
{
    CHECK(resultant_discriminant(tri(3, -1, -1)) == -23);
    CHECK(resultant_discriminant(tri(2, 2, 1)) == 0);
    CHECK(resultant_discriminant(tri(3, -4, -3)) == 13);
    CHECK(resultant_discriminant(tri(5, 1, 1)) == 3381);
    CHECK_THROWS_AS(resultant_discriminant(tri(13, 1, 1)), usage_error);
}

TEST_CASE("swan and Sylvester discriminants agree on a small box")
{
    for (unsigned n = 2; n <= 7; ++n) {
        for (long a = -8; a <= 8; ++a) {
            for (long b = -8; b <= 8; ++b) {
                if (b == 0)
                    continue;
                Trinomial const t = tri(n, a, b);
                REQUIRE(swan_discriminant(t) == resultant_discriminant(t));
            }
        }
    }
}

TEST_CASE("rational_roots examples")
{
    CHECK(rational_roots(tri(3, -2, -1)) == std::vector<BigInt>{-1});
    CHECK(rational_roots(tri(3, -1, -1)).empty());
    CHECK(rational_roots(tri(3, -4, -3)) == std::vector<BigInt>{-1});
    CHECK(rational_roots(tri(3, -7, 6)) == std::vector<BigInt>{-3, 1, 2});
    CHECK(rational_roots(tri(2, 2, 1)) == std::vector<BigInt>{-1});
    CHECK(rational_roots(tri(4, -9, 0 + 8)) == std::vector<BigInt>{1});
}

TEST_CASE("rational_roots matches a divisor scan")
{
    for (unsigned n = 2; n <= 6; ++n) {
        for (long a = -40; a <= 40; ++a) {
            for (long b = -40; b <= 40; ++b) {
                if (b == 0)
                    continue;
                Trinomial const t = tri(n, a, b);
                std::vector<BigInt> expected;
                for (long r = -std::abs(b); r <= std::abs(b); ++r) {
                    if (r != 0 && b % r == 0 && sgn(t.evaluate(r)) == 0)
                        expected.push_back(r);
                }
                REQUIRE(rational_roots(t) == expected);
            }
        }
    }
}

TEST_CASE("rational_roots on large coefficients")
{
    // (x + 3^20) divides x^3 - (3^40 - 1) x + 3^20 ... built explicitly:
    // f(-r) = 0 for r = 3^20 requires A = r^2 + B / r.
    BigInt const r = pow_ui(BigInt(3), 20);
    BigInt const B = BigInt(7) * r;
    BigInt const A = -(r * r) + B / r;  // makes f(r) = r^3 + A r + B = 0 ... check below
    Trinomial const t(3, A, -B - 0);
    std::vector<BigInt> roots = rational_roots(t);
    for (auto const & x : roots)
        CHECK(sgn(t.evaluate(x)) == 0);
    CHECK(rational_roots(Trinomial(3, -pow_ui(BigInt(2), 40), -pow_ui(BigInt(3), 39))).empty());
}

TEST_CASE("eisenstein_primes")
{
    Trinomial const t1 = tri(6, -30, -5);
    CHECK(eisenstein_primes(t1, factorize(t1.B())) == std::vector<BigInt>{5});
    Trinomial const t2 = tri(3, -1, -18);
    CHECK(eisenstein_primes(t2, factorize(t2.B())).empty());
    Trinomial const t3 = tri(3, -6, -2);
    CHECK(eisenstein_primes(t3, factorize(t3.B())) == std::vector<BigInt>{2});
    CHECK_THROWS_AS(eisenstein_primes(t3, factorize(BigInt(3))), usage_error);
}

TEST_CASE("is_irreducible_mod_p examples")
{
    CHECK(is_irreducible_mod_p(tri(3, -1, -1), 2));
    CHECK_FALSE(is_irreducible_mod_p(tri(3, -2, -1), 5));
    CHECK_FALSE(is_irreducible_mod_p(tri(2, 0, 1), 2));
    CHECK(is_irreducible_mod_p(tri(7, -1, -42), 5));
    CHECK_THROWS_AS(is_irreducible_mod_p(tri(3, 1, 1), 4), usage_error);
}

TEST_CASE("is_irreducible_mod_p matches a brute-force factor search")
{
    for (long p : {2L, 3L, 5L, 7L}) {
        for (unsigned n = 2; n <= 5; ++n) {
            for (long a = 0; a < p; ++a) {
                for (long b = 1; b < p; ++b) {
                    std::vector<long> f(n + 1, 0);
                    f[0] = b;
                    f[1] += a;
                    f[n] = 1;
                    bool reducible = false;
                    for (unsigned k = 1; 2 * k <= n; ++k)
                        reducible = reducible || has_factor_of_degree(f, p, k);
                    REQUIRE(is_irreducible_mod_p(tri(n, a, b), p) == !reducible);
                }
            }
        }
    }
}

TEST_CASE("irreducibility verdicts")
{
    using V = IrreducibilityVerdict;
    V v = irreducibility(tri(3, -1, -1));
    CHECK(v.kind == V::Kind::Irreducible);
    CHECK(v.certificate == V::Certificate::RationalRootExhaustion);

    v = irreducibility(tri(3, -4, -3));
    CHECK(v.kind == V::Kind::Reducible);
    REQUIRE(v.root.has_value());
    CHECK(*v.root == -1);

    v = irreducibility(tri(6, -30, -5));
    CHECK(v.kind == V::Kind::Irreducible);
    CHECK(v.certificate == V::Certificate::Eisenstein);
    CHECK(v.prime == 5);

    v = irreducibility(tri(7, -1, -42));
    CHECK(v.kind == V::Kind::Irreducible);
    CHECK(v.certificate == V::Certificate::ModP);
    CHECK(v.prime == 5);

    // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2) has no root and no certificate.
    v = irreducibility(tri(4, 0, 4));
    CHECK(v.kind == V::Kind::Unknown);

    // explicit trial list without a certifying prime
    std::vector<std::uint64_t> const only7{7};
    v = irreducibility(tri(7, -1, -42), only7);
    CHECK(v.kind == V::Kind::Unknown);
}

TEST_CASE("jks_prime_test examples")
{
    JksResult r = jks_prime_test(tri(3, -1, -1), 23);
    CHECK(r.pass);
    CHECK(r.condition == 4);

    r = jks_prime_test(tri(3, -4, -4), 2);
    CHECK_FALSE(r.pass);
    CHECK(r.condition == 1);

    r = jks_prime_test(tri(6, -30, -5), 2);
    CHECK(r.pass);
    CHECK(r.condition == 2);

    // Theorem-family values: x^6 - 30x - 5 at q = 3 (3 || N) and q = 5 (Eisenstein).
    CHECK(jks_prime_test(tri(6, -30, -5), 3).pass);
    CHECK(jks_prime_test(tri(6, -30, -5), 5).pass);

    // condition 3: q does not divide A but divides B
    r = jks_prime_test(tri(3, -1, -18), 2);
    CHECK(r.condition == 3);

    CHECK_THROWS_AS(jks_prime_test(tri(3, -1, -1), 5), usage_error);
    CHECK_THROWS_AS(jks_prime_test(tri(2, 1, -1), 5), usage_error);
}

TEST_CASE("jks_prime_test only reads the clause selected by (q | A, q | B)")
{
    for (long a = -15; a <= 15; ++a) {
        for (long b = -15; b <= 15; ++b) {
            if (b == 0)
                continue;
            Trinomial const t = tri(4, a, b);
            BigInt const disc = swan_discriminant(t);
            if (sgn(disc) == 0)
                continue;
            for (auto const & pp : factorize(disc).factors()) {
                JksResult const r = jks_prime_test(t, pp.prime);
                bool const qa = a % pp.prime.get_si() == 0;
                bool const qb = b % pp.prime.get_si() == 0;
                int const expected = qa && qb ? 1 : qa ? 2 : qb ? 3 : 4;
                REQUIRE(r.condition == expected);
            }
        }
    }
}

TEST_CASE("monogenicity verdicts")
{
    using K = MonogenicityVerdict::Kind;
    MonogenicityVerdict v = monogenicity(tri(3, -1, -1));
    CHECK(v.kind == K::Monogenic);

    v = monogenicity(tri(3, -4, -4));
    CHECK(v.kind == K::NotMonogenic);
    CHECK(v.witness_prime == 2);
    CHECK(v.condition == 1);

    // Delta = 81 = Delta(K) for the cyclic cubic field of conductor 9.
    v = monogenicity(tri(3, -3, -1));
    CHECK(v.kind == K::Monogenic);

    v = monogenicity(tri(3, -4, -3));
    CHECK(v.kind == K::NotIrreducible);

    // x^3 - 9x - 1: 3 | w with w = 0 mod 9 fails at q = 3.
    v = monogenicity(tri(3, -9, -1));
    CHECK(v.kind == K::NotMonogenic);
    CHECK(v.witness_prime == 3);
    CHECK(v.condition == 2);

    CHECK_THROWS_AS(monogenicity(tri(2, 1, -1)), usage_error);
    Trinomial const t = tri(3, -1, -1);
    CHECK_THROWS_AS(monogenicity(t, factorize(BigInt(-31)), irreducibility(t)), usage_error);
}

TEST_CASE("a failing prime decides even when irreducibility is unknown")
{
    Trinomial const t = tri(5, -4, -8);
    IrreducibilityVerdict unknown;
    unknown.kind = IrreducibilityVerdict::Kind::Unknown;
    MonogenicityVerdict const v = monogenicity(t, factorize(swan_discriminant(t)), unknown);
    CHECK(v.kind == MonogenicityVerdict::Kind::NotMonogenic);
    CHECK(v.witness_prime == 2);
}

TEST_CASE("squarefree discriminant and irreducible implies monogenic")
{
    int checked = 0;
    for (unsigned n = 3; n <= 6; ++n) {
        for (long a = -12; a <= 12; ++a) {
            for (long b = -12; b <= 12; ++b) {
                if (b == 0)
                    continue;
                Trinomial const t = tri(n, a, b);
                BigInt const disc = swan_discriminant(t);
                if (sgn(disc) == 0 || !squarefree_status(disc).is_squarefree())
                    continue;
                IrreducibilityVerdict const irr = irreducibility(t);
                if (!irr.irreducible())
                    continue;
                REQUIRE(monogenicity(t, factorize(disc), irr).kind == MonogenicityVerdict::Kind::Monogenic);
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("index_oracle_cubic examples")
{
    CHECK_FALSE(index_oracle_cubic(tri(3, -1, -1), 23, 23));
    CHECK_FALSE(index_oracle_cubic(tri(3, -3, -1), 3));
    CHECK(index_oracle_cubic(tri(3, -4, -4), 2));
    CHECK(index_oracle_cubic(tri(3, -9, -1), 3));
    CHECK_THROWS_AS(index_oracle_cubic(tri(3, -1, -1), 23), usage_error);
    CHECK_THROWS_AS(index_oracle_cubic(tri(3, -4, -3), 13), usage_error);
    CHECK_THROWS_AS(index_oracle_cubic(tri(4, -1, -1), 2), usage_error);
}

TEST_CASE("jks agrees with the index oracle on small cubics")
{
    for (long a = -8; a <= 8; ++a) {
        for (long b = -8; b <= 8; ++b) {
            if (b == 0)
                continue;
            Trinomial const t = tri(3, a, b);
            if (!rational_roots(t).empty())
                continue;
            BigInt const disc = swan_discriminant(t);
            for (auto const & pp : factorize(disc).factors()) {
                if (pp.prime > 13)
                    continue;
                bool const in_index = index_oracle_cubic(t, pp.prime.get_ui());
                REQUIRE(jks_prime_test(t, pp.prime).pass == !in_index);
            }
        }
    }
}

TEST_CASE("cubic_galois_group")
{
    CHECK(cubic_galois_group(tri(3, -1, -1)) == CubicGaloisGroup::S3);
    CHECK(cubic_galois_group(tri(3, -3, -1)) == CubicGaloisGroup::C3);
    CHECK(cubic_galois_group(tri(3, -4, -1)) == CubicGaloisGroup::S3);
    CHECK_THROWS_AS(cubic_galois_group(tri(3, -4, -3)), usage_error);
}
