#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mtlab/bigint.hpp"

namespace mtlab {

/// Effort limits for factorization. Results depend only on the budget and
/// the input, except when a wall-clock limit is set and actually reached.
struct FactorBudget
{
    std::uint32_t trial_bound = 1'000'000;
    /// Total Pollard-Brent iterations spent on one input.
    std::uint64_t rho_iterations = 1ULL << 24;
    /// Zero disables the wall-clock limit.
    std::chrono::milliseconds time_limit{0};
    std::uint64_t seed = 0x6d746c6162ULL;
};

struct PrimePower
{
    BigInt prime;
    unsigned exponent = 0;

    bool operator==(PrimePower const &) const = default;
};

/// |value| = cofactor * prod(prime^exponent); primes strictly increasing.
/// The cofactor collects whatever the budget could not split (1 when complete).
class FactoredInt
{
public:
    FactoredInt() = default;
    FactoredInt(BigInt value, std::vector<PrimePower> factors, BigInt cofactor);

    BigInt const & value() const { return value_; }
    std::vector<PrimePower> const & factors() const & { return factors_; }
    std::vector<PrimePower> factors() && { return std::move(factors_); }
    BigInt const & cofactor() const & { return cofactor_; }
    BigInt cofactor() && { return std::move(cofactor_); }
    bool complete() const { return cofactor_ == 1; }

    /// cofactor * prod(p^e), i.e. |value|.
    BigInt product() const;

private:
    BigInt value_ = 1;
    std::vector<PrimePower> factors_;
    BigInt cofactor_ = 1;
};

FactoredInt factorize(BigInt const & n, FactorBudget const & budget = {});

struct SquarefreeStatus
{
    enum class Kind { Squarefree, NotSquarefree, Unknown };

    Kind kind = Kind::Unknown;
    BigInt witness;      // p with p^2 | n, for NotSquarefree
    std::string reason;  // for Unknown

    bool is_squarefree() const { return kind == Kind::Squarefree; }
    bool is_not_squarefree() const { return kind == Kind::NotSquarefree; }
    bool is_unknown() const { return kind == Kind::Unknown; }
};

SquarefreeStatus squarefree_status(BigInt const & n, FactorBudget const & budget = {});
SquarefreeStatus squarefree_status(FactoredInt const & f);

char const * to_string(SquarefreeStatus::Kind k);

/// Complete factorization of a machine word, ascending primes. n >= 1.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

}  // namespace mtlab
