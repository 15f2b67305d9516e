#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtlab/bigint.hpp"
#include "mtlab/factor.hpp"
#include "mtlab/quadfield.hpp"
#include "mtlab/trinomial.hpp"

namespace mtlab {

enum class Family { Main1, Main2, Main3, Main4 };

char const * to_string(Family f);
/// Accepts "main1".."main4" in any letter case.
std::optional<Family> family_from_string(std::string_view s);

// ---------------------------------------------------------------------------
// Applicability gates of the classical divisibility theorems.

enum class KMCondition { C1, C2, C3, None };

char const * to_string(KMCondition c);

/// Parameters of the cubic x^3 - u w x - u^2 with d = 4 u w^3 - 27 u^2.
struct KMParams
{
    BigInt u;
    BigInt w;
    BigInt d;
    KMCondition condition = KMCondition::None;
    bool d_nonsquare = false;

    /// Both the congruence clause and the non-square requirement hold.
    bool applicable() const { return condition != KMCondition::None && d_nonsquare; }
};

/// C1: 3 does not divide w. C2: 3 | w, uw != 3 (mod 9), u = w +- 1 (mod 9).
/// C3: 3 | w, uw = 3 (mod 9), u = w +- 1 (mod 27). Either sign is accepted.
/// Throws usage_error unless gcd(u, w) = 1.
KMParams km_conditions(BigInt const & u, BigInt const & w);

/// 2^(2k) < 3^n and (k, n) != (2, 3).
bool kishi_check(std::uint64_t k, std::uint64_t n);

/// M >= 5 and M^(2n) + 1 squarefree.
bool ankeny_chowla_check(std::uint64_t M, std::uint64_t n, SquarefreeStatus const & sf);

/// 1 - M^n squarefree, and either M >= 5 odd, or M = 3 with n odd.
bool murty_check(std::uint64_t M, std::uint64_t n, SquarefreeStatus const & sf);

// ---------------------------------------------------------------------------
// Per-family analysis.

enum class ClaimStatus { Holds, Fails, NotEvaluated };

char const * to_string(ClaimStatus c);

struct OrderWitness
{
    QuadForm form;
    std::uint64_t order = 0;
};

struct FamilyRecord
{
    Family family = Family::Main1;
    std::vector<std::pair<std::string, BigInt>> params;  // in display order
    Trinomial trinomial{3, BigInt(0), BigInt(1)};
    BigInt delta;  // d for Main1, delta otherwise
    IrreducibilityVerdict irreducible;
    MonogenicityVerdict monogenic;
    SquarefreeStatus delta_squarefree;

    /// Main1: the trinomial lies in F1 (irreducible, d squarefree).
    /// Main2: it lies in F2 (delta < 0 squarefree). Main3/Main4: monogenic.
    bool member = false;
    /// Hypotheses of the divisibility theorem behind the claim hold.
    bool applicable = false;
    std::string applicability_note;

    std::optional<KMParams> km;  // Main1, and the witness pair for Main2

    std::optional<BigInt> D;  // discriminant of Q(sqrt(delta)) when known
    std::optional<ClassNumberResult> h;
    bool slow_skipped = false;  // h needed a slow path that was not enabled
    std::string h_note;

    std::uint64_t n_claimed = 0;
    ClaimStatus claim = ClaimStatus::NotEvaluated;
    std::optional<OrderWitness> order_witness;  // Main4 probe
};

struct AnalysisOptions
{
    FactorBudget budget;
    /// Compute h for every record whose field is known, not only members.
    bool all_h = false;
    /// Skip class numbers entirely (verdict-only analysis).
    bool class_numbers = true;
    /// Allow class numbers beyond the fast limits below.
    bool slow = false;
    std::int64_t imaginary_fast_limit = 10'000'000'000;  // |D|
    std::int64_t real_fast_limit = 100'000'000;          // D
    /// Largest order tried by the Main4 element-order probe; 0 disables it.
    std::uint64_t probe_order_bound = 10'000;
    std::int64_t probe_disc_limit = 10'000'000;  // |D|
    unsigned max_delta_bits = 4096;
    /// Mod-p irreducibility trials per unit of degree (at least 25 in total).
    unsigned irreducibility_trials_per_degree = 10;
    EnumerationOptions enumeration;
};

FamilyRecord main1_analyze(BigInt const & w, AnalysisOptions const & opts = {});
/// a >= 1, b >= 2.
FamilyRecord main2_analyze(std::uint64_t a, std::uint64_t b, AnalysisOptions const & opts = {});
/// N >= 6, N = 2 (mod 4), b >= 1.
FamilyRecord main3_analyze(std::uint64_t N, std::uint64_t b, AnalysisOptions const & opts = {});
/// N >= 3, N = 3 (mod 4), b >= 1.
FamilyRecord main4_analyze(std::uint64_t N, std::uint64_t b, AnalysisOptions const & opts = {});

/// Closed-form discriminant of the family trinomial, independent of Swan's formula.
BigInt family_discriminant(FamilyRecord const & r);

/// The family's own monogenicity criterion (Main1: d squarefree and
/// irreducible; Main2: delta squarefree; Main3: N(N-1) and delta squarefree;
/// Main4: delta squarefree). nullopt when a squarefree status is Unknown.
std::optional<bool> closed_form_criterion(FamilyRecord const & r);

/// Structural facts every record must satisfy; each violated item is
/// described by one string.
std::vector<std::string> record_violations(FamilyRecord const & r);

struct ParamRange
{
    std::int64_t lo = 0;
    std::int64_t hi = -1;
};

/// One record per valid tuple, in lexicographic order. Main1 uses `first`
/// for w; the other families use `first` for a or N and `second` for b.
/// Tuples violating a family's parameter constraints are skipped.
std::vector<FamilyRecord> scan(Family family, ParamRange first, ParamRange second,
                               AnalysisOptions const & opts = {});

struct DistinctnessResult
{
    bool pass = true;
    std::optional<std::pair<std::size_t, std::size_t>> collision;  // indices
};

/// Field discriminants of monogenic records equal their polynomial
/// discriminants, so distinct fields show up as distinct discriminants.
DistinctnessResult distinctness(std::span<FamilyRecord const> records);

}  // namespace mtlab
