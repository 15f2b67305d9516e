#include "mtlab/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mtlab/arith.hpp"

namespace mtlab {

void OracleReport::mismatch(std::string what)
{
    ++mismatches;
    if (examples.size() < 5)
        examples.push_back(std::move(what));
}

OracleReport discriminant_oracle(unsigned n_lo, unsigned n_hi, long box)
{
    OracleReport rep;
    rep.name = "swan discriminant = Sylvester resultant";
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        for (long a = -box; a <= box; ++a) {
            for (long b = -box; b <= box; ++b) {
                if (b == 0)
                    continue;
                Trinomial const t(n, BigInt(a), BigInt(b));
                ++rep.checked;
                if (swan_discriminant(t) != resultant_discriminant(t))
                    rep.mismatch(t.to_string());
            }
        }
    }
    return rep;
}

OracleReport jks_index_oracle(long box, std::uint64_t q_max)
{
    OracleReport rep;
    rep.name = "JKS prime test vs cubic index oracle";
    for (long a = -box; a <= box; ++a) {
        for (long b = -box; b <= box; ++b) {
            if (b == 0)
                continue;
            Trinomial const t(3, BigInt(a), BigInt(b));
            if (!rational_roots(t).empty())
                continue;
            BigInt const disc = swan_discriminant(t);
            for (std::uint32_t q : small_primes()) {
                if (q > q_max)
                    break;
                if (!mpz_divisible_ui_p(disc.get_mpz_t(), q))
                    continue;
                ++rep.checked;
                bool const pass = jks_prime_test(t, BigInt(q)).pass;
                bool const divides_index = index_oracle_cubic(t, q, q_max);
                if (pass == divides_index)
                    rep.mismatch(t.to_string() + " at q=" + std::to_string(q));
            }
        }
    }
    return rep;
}

OracleReport real_class_number_oracle(std::int64_t dense_limit, unsigned random_count, std::int64_t random_limit,
                                      std::uint64_t seed)
{
    OracleReport rep;
    rep.name = "real class number: cycles vs analytic formula";
    AnalyticOptions aopts;
    aopts.cutoff = std::max<std::int64_t>(aopts.cutoff, random_limit);
    auto compare = [&](std::int64_t D) {
        auto const analytic = class_number_real_analytic(D, aopts);
        if (!analytic) {
            ++rep.undecided;
            if (rep.examples.size() < 5)
                rep.examples.push_back("D=" + std::to_string(D) + " analytic value too close to a half-integer");
            return;
        }
        ++rep.checked;
        ClassNumberResult const cyc = class_number_real(D);
        if (cyc.h != analytic->h || cyc.unit_norm != analytic->unit_norm)
            rep.mismatch("D=" + std::to_string(D) + " cycles " + std::to_string(cyc.h) + " analytic " +
                         std::to_string(analytic->h));
        std::uint64_t const factor = cyc.unit_norm == -1 ? 1 : 2;
        if (!cyc.narrow_h || *cyc.narrow_h != cyc.h * factor)
            rep.mismatch("D=" + std::to_string(D) + " narrow class number inconsistent with unit norm");
    };
    for (std::int64_t D = 2; D <= dense_limit; ++D) {
        if (is_fundamental_discriminant(D))
            compare(D);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(dense_limit + 1, random_limit);
    for (unsigned got = 0; got < random_count;) {
        std::int64_t const D = dist(rng);
        if (!is_fundamental_discriminant(D))
            continue;
        compare(D);
        ++got;
    }
    return rep;
}

OracleReport form_order_oracle(std::int64_t limit)
{
    OracleReport rep;
    rep.name = "form orders divide h";
    for (std::int64_t D = -3; D > -limit; --D) {
        if (!is_fundamental_discriminant(D))
            continue;
        auto const forms = reduced_forms_imaginary(D);
        std::uint64_t const h = forms.size();
        for (auto const & f : forms) {
            ++rep.checked;
            auto const ord = form_order(f, D, h);
            if (!ord || h % *ord != 0)
                rep.mismatch("D=" + std::to_string(D) + " form " + f.to_string());
        }
    }
    return rep;
}

namespace {

struct Tuple
{
    long double bits;
    std::uint64_t x, b;
};

/// Valid tuples of a two-parameter family ordered by the size of |delta|.
std::vector<Tuple> smallest_tuples(Family family, unsigned count, unsigned max_bits)
{
    std::vector<Tuple> all;
    auto add = [&](long double bits, std::uint64_t x, std::uint64_t b) {
        if (bits <= max_bits)
            all.push_back({bits, x, b});
    };
    long double const log3 = std::log2(3.0L);
    switch (family) {
        case Family::Main2:
            for (std::uint64_t a = 1; 6 * a + 2 <= max_bits; ++a)
                for (std::uint64_t b = 2; (2 * b + 1) * log3 <= max_bits; ++b)
                    if (!(a == 1 && b == 2))
                        add(std::max<long double>(6.0L * a + 2, (2.0L * b + 1) * log3), a, b);
            break;
        case Family::Main3:
            for (std::uint64_t N = 6; N * std::log2(static_cast<long double>(N - 1)) <= max_bits; N += 4)
                for (std::uint64_t b = 1; b * N * std::log2(static_cast<long double>(N - 1)) <= max_bits; ++b)
                    add(b * N * std::log2(static_cast<long double>(N - 1)), N, b);
            break;
        case Family::Main4:
            for (std::uint64_t N = 3; (N + 1) * std::log2(static_cast<long double>(N)) <= max_bits; N += 4)
                for (std::uint64_t b = 1; ((b + 1) * N - b) * std::log2(static_cast<long double>(N)) <= max_bits; ++b)
                    add(((b + 1) * N - b) * std::log2(static_cast<long double>(N)), N, b);
            break;
        default: break;
    }
    std::sort(all.begin(), all.end(), [](Tuple const & l, Tuple const & r) {
        return l.bits != r.bits ? l.bits < r.bits : (l.x != r.x ? l.x < r.x : l.b < r.b);
    });
    if (all.size() > count)
        all.resize(count);
    return all;
}

}  // namespace

OracleReport monogenicity_criterion_oracle(Family family, unsigned samples, AnalysisOptions const & opts,
                                           std::int64_t w_bound, std::uint64_t seed)
{
    OracleReport rep;
    rep.name = std::string(to_string(family)) + ": JKS pipeline vs closed-form criterion";
    AnalysisOptions local = opts;
    local.class_numbers = false;

    auto judge = [&](FamilyRecord const & r) {
        std::string label;
        for (auto const & [k, v] : r.params)
            label += k + "=" + to_string(v) + " ";
        if (r.irreducible.unknown()) {
            ++rep.undecided;
            ++rep.undecided_other;
            if (rep.examples.size() < 5)
                rep.examples.push_back(label + "irreducibility not certified");
            return;
        }
        auto const closed = closed_form_criterion(r);
        if (!closed || !r.monogenic.decided()) {
            ++rep.undecided;
            return;
        }
        ++rep.checked;
        if (*closed != r.monogenic.monogenic())
            rep.mismatch(label + "pipeline " + to_string(r.monogenic.kind) + ", criterion " +
                         (*closed ? "monogenic" : "not monogenic"));
    };

    if (family == Family::Main1) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::int64_t> dist(-w_bound, w_bound);
        for (unsigned got = 0; got < samples;) {
            BigInt const w = from_i64(dist(rng));
            if (!km_conditions(BigInt(1), w).applicable())
                continue;
            FamilyRecord const r = main1_analyze(w, local);
            if (!r.irreducible.irreducible())
                continue;
            judge(r);
            ++got;
        }
        return rep;
    }
    for (auto const & t : smallest_tuples(family, samples, local.max_delta_bits)) {
        switch (family) {
            case Family::Main2: judge(main2_analyze(t.x, t.b, local)); break;
            case Family::Main3: judge(main3_analyze(t.x, t.b, local)); break;
            case Family::Main4: judge(main4_analyze(t.x, t.b, local)); break;
            default: break;
        }
    }
    return rep;
}

}  // namespace mtlab
