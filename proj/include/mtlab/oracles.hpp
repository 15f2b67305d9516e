#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtlab/families.hpp"

namespace mtlab {

/// Outcome of an exhaustive or sampled cross-check between two independent
/// computations of the same quantity.
struct OracleReport
{
    std::string name;
    std::uint64_t checked = 0;     // cases where both sides produced a value
    std::uint64_t mismatches = 0;
    std::uint64_t undecided = 0;   // budget or rounding margin left a side open
    std::uint64_t undecided_other = 0;  // open for a reason other than a budget
    std::vector<std::string> examples;  // first few mismatches or notes

    bool passed() const { return mismatches == 0 && checked > 0; }
    void mismatch(std::string what);
};

/// Swan's closed form against the Sylvester determinant for every
/// x^N + Ax + B with N in [n_lo, n_hi], |A|, |B| <= box, B != 0.
OracleReport discriminant_oracle(unsigned n_lo = 3, unsigned n_hi = 9, long box = 30);

/// For every irreducible cubic with |A|, |B| <= box and prime q <= q_max
/// dividing the discriminant: the JKS test passes iff the index oracle
/// finds no integral element witnessing q | index.
OracleReport jks_index_oracle(long box = 20, std::uint64_t q_max = 13);

/// Cycle-count class number against the analytic formula for every
/// fundamental D in (1, dense_limit] and `random_count` random fundamental
/// D in (dense_limit, random_limit].
OracleReport real_class_number_oracle(std::int64_t dense_limit = 10'000, unsigned random_count = 100,
                                      std::int64_t random_limit = 1'000'000, std::uint64_t seed = 1);

/// The order of every reduced form divides h, for all fundamental D in (-limit, 0).
OracleReport form_order_oracle(std::int64_t limit = 100'000);

/// Generic JKS verdict against the family's closed-form monogenicity
/// criterion on `samples` parameter tuples. Main1 draws w at random from
/// [-w_bound, w_bound] among those meeting the Kishi-Miyake hypotheses;
/// the other families take the tuples with the smallest |delta| inside the
/// bit-size guard. Cases left open by factoring budgets count as undecided.
OracleReport monogenicity_criterion_oracle(Family family, unsigned samples, AnalysisOptions const & opts,
                                           std::int64_t w_bound = 100'000, std::uint64_t seed = 1);

}  // namespace mtlab
