#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mtlab/bigint.hpp"
#include "mtlab/factor.hpp"

namespace mtlab {

/// The monic trinomial x^N + A x + B with N >= 2 and B != 0.
class Trinomial
{
public:
    Trinomial(unsigned degree, BigInt A, BigInt B);

    unsigned degree() const { return degree_; }
    BigInt const & A() const { return A_; }
    BigInt const & B() const { return B_; }

    /// Dense coefficients, constant term first.
    std::vector<BigInt> coefficients() const;
    BigInt evaluate(BigInt const & x) const;
    std::string to_string() const;

    bool operator==(Trinomial const &) const = default;

private:
    unsigned degree_;
    BigInt A_;
    BigInt B_;
};

/// Closed-form discriminant of x^N + Ax + B.
BigInt swan_discriminant(Trinomial const & t);

/// Largest degree accepted by resultant_discriminant.
inline constexpr unsigned max_sylvester_degree = 12;

/// (-1)^{N(N-1)/2} Res(f, f') from the Sylvester determinant. N <= 12.
BigInt resultant_discriminant(Trinomial const & t);

/// Resultant of two integer polynomials (constant term first) by
/// fraction-free elimination of the Sylvester matrix.
BigInt sylvester_resultant(std::span<BigInt const> f, std::span<BigInt const> g);

/// All integer roots in increasing order.
std::vector<BigInt> rational_roots(Trinomial const & t);

/// Primes p with p | A, p | B and p^2 does not divide B. fB must be a
/// complete factorization of B.
std::vector<BigInt> eisenstein_primes(Trinomial const & t, FactoredInt const & fB);

/// Whether f mod p is irreducible over GF(p). p must be a prime below 2^32.
bool is_irreducible_mod_p(Trinomial const & t, std::uint64_t p);

struct IrreducibilityVerdict
{
    enum class Kind { Irreducible, Reducible, Unknown };
    enum class Certificate { None, RationalRootExhaustion, Eisenstein, ModP };

    Kind kind = Kind::Unknown;
    Certificate certificate = Certificate::None;
    BigInt prime;                 // Eisenstein / ModP certificate
    std::optional<BigInt> root;   // Reducible: an integer root, if that is the witness
    std::string reason;

    bool irreducible() const { return kind == Kind::Irreducible; }
    bool reducible() const { return kind == Kind::Reducible; }
    bool unknown() const { return kind == Kind::Unknown; }
};

char const * to_string(IrreducibilityVerdict::Kind k);
char const * to_string(IrreducibilityVerdict::Certificate c);

/// The first `count` primes that do not divide disc.
std::vector<std::uint64_t> default_trial_primes(BigInt const & disc, std::size_t count = 25);

/// Exact for N <= 3. For larger N: Reducible on an integer root, otherwise
/// Irreducible when an Eisenstein prime or an irreducible reduction mod one
/// of `trial_primes` is found, otherwise Unknown. An empty trial list means
/// default_trial_primes(discriminant).
IrreducibilityVerdict irreducibility(Trinomial const & t,
                                     std::span<std::uint64_t const> trial_primes = {},
                                     FactorBudget const & budget = {});

struct JksResult
{
    bool pass = false;
    int condition = 0;  // 1..4, the clause selected by (q | A, q | B)
};

/// Local index test at a prime q dividing the discriminant: pass iff q does
/// not divide [Z_K : Z[theta]]. Requires N >= 3 and q | disc(f).
JksResult jks_prime_test(Trinomial const & t, BigInt const & q);

/// Which of the four clauses applies to (q, A, B).
int jks_condition_for(Trinomial const & t, BigInt const & q);

struct MonogenicityVerdict
{
    enum class Kind { Monogenic, NotMonogenic, NotIrreducible, Unknown };

    Kind kind = Kind::Unknown;
    BigInt witness_prime;          // NotMonogenic
    int condition = 0;             // NotMonogenic
    std::optional<BigInt> root;    // NotIrreducible, when a root is the witness
    std::string reason;

    bool monogenic() const { return kind == Kind::Monogenic; }
    bool decided() const { return kind != Kind::Unknown; }
};

char const * to_string(MonogenicityVerdict::Kind k);

/// Combine JKS tests over the factored discriminant. A failing prime decides
/// NotMonogenic even when irreducibility or the factorization is unresolved.
MonogenicityVerdict monogenicity(Trinomial const & t, FactoredInt const & disc_factors,
                                 IrreducibilityVerdict const & irr);

/// Convenience: factor the discriminant and certify irreducibility first.
MonogenicityVerdict monogenicity(Trinomial const & t, FactorBudget const & budget = {});

/// Brute-force check whether q divides the index of Z[theta] for a cubic:
/// searches for an algebraic integer (c2 theta^2 + c1 theta + c0)/q.
bool index_oracle_cubic(Trinomial const & t, std::uint64_t q, std::uint64_t q_bound = 13);

enum class CubicGaloisGroup { S3, C3 };

char const * to_string(CubicGaloisGroup g);

CubicGaloisGroup cubic_galois_group(Trinomial const & t);

}  // namespace mtlab
