#include "doctest.h"
#include "mtlab/families.hpp"

using namespace mtlab;

namespace {

SquarefreeStatus squarefree()
{
    SquarefreeStatus s;
    s.kind = SquarefreeStatus::Kind::Squarefree;
    return s;
}

SquarefreeStatus unknown()
{
    return {};
}

}  // namespace

TEST_CASE("km_conditions")
{
    KMParams p = km_conditions(BigInt(1), BigInt(1));
    CHECK(p.d == -23);
    CHECK(p.condition == KMCondition::C1);
    CHECK(p.d_nonsquare);

    p = km_conditions(BigInt(81), BigInt(4));
    CHECK(p.condition == KMCondition::C1);
    CHECK(p.d == 81 * BigInt(256 - 2187));

    p = km_conditions(BigInt(2), BigInt(3));
    CHECK(p.condition == KMCondition::C2);

    // u = 1, w = 3: d = 81 is a square.
    p = km_conditions(BigInt(1), BigInt(3));
    CHECK_FALSE(p.d_nonsquare);
    CHECK_FALSE(p.applicable());

    // C3: uw = 3 (mod 9) and u = w + 1 (mod 27), e.g. u = 4, w = 3.
    p = km_conditions(BigInt(4), BigInt(3));
    CHECK(p.condition == KMCondition::C3);

    // 3 | w with neither clause: u = 1, w = 6.
    CHECK(km_conditions(BigInt(1), BigInt(6)).condition == KMCondition::None);
    CHECK_THROWS_AS(km_conditions(BigInt(2), BigInt(4)), usage_error);
}

TEST_CASE("theorem gates")
{
    CHECK(kishi_check(4, 7));
    CHECK_FALSE(kishi_check(2, 3));
    CHECK_FALSE(kishi_check(5, 4));

    CHECK(ankeny_chowla_check(5, 3, squarefree()));
    CHECK_FALSE(ankeny_chowla_check(4, 2, squarefree()));
    CHECK(ankeny_chowla_check(5, 6, squarefree()));
    CHECK_FALSE(ankeny_chowla_check(5, 3, unknown()));

    CHECK(murty_check(3, 7, squarefree()));
    CHECK(murty_check(7, 13, squarefree()));
    CHECK(murty_check(9, 4, squarefree()));
    CHECK_FALSE(murty_check(4, 3, squarefree()));
    CHECK_FALSE(murty_check(3, 8, squarefree()));
    CHECK_FALSE(murty_check(7, 13, unknown()));
}

TEST_CASE("main1_analyze")
{
    FamilyRecord r = main1_analyze(BigInt(-1));
    CHECK(r.delta == -31);
    CHECK(r.monogenic.monogenic());
    CHECK(r.member);
    REQUIRE(r.h.has_value());
    CHECK(r.h->h == 3);
    CHECK(r.claim == ClaimStatus::Holds);

    r = main1_analyze(BigInt(3));
    CHECK(r.delta == 81);
    CHECK_FALSE(r.member);
    CHECK_FALSE(r.applicable);
    CHECK(r.claim == ClaimStatus::NotEvaluated);

    r = main1_analyze(BigInt(9));
    CHECK(r.monogenic.kind == MonogenicityVerdict::Kind::NotMonogenic);
    CHECK(r.monogenic.witness_prime == 3);

    r = main1_analyze(BigInt(2));
    CHECK(r.monogenic.kind == MonogenicityVerdict::Kind::NotIrreducible);
    CHECK(r.irreducible.reducible());
    r = main1_analyze(BigInt(0));
    CHECK(r.irreducible.reducible());

    r = main1_analyze(BigInt(-2));
    CHECK(r.delta == -59);
    CHECK(r.member);
    REQUIRE(r.h.has_value());
    CHECK(r.h->h == 3);

    r = main1_analyze(BigInt(4));
    REQUIRE(r.h.has_value());
    CHECK(r.h->h == 3);
    CHECK(r.h->method == ClassNumberMethod::CycleCount);
}

TEST_CASE("main2_analyze")
{
    FamilyRecord r = main2_analyze(1, 3);
    CHECK(r.delta == -1931);
    CHECK(r.monogenic.monogenic());
    CHECK(r.n_claimed == 21);
    REQUIRE(r.h.has_value());
    CHECK(r.h->h == 21);
    CHECK(r.claim == ClaimStatus::Holds);
    REQUIRE(r.km.has_value());
    CHECK(r.km->u == 81);
    CHECK(r.km->w == 4);
    CHECK(record_violations(r).empty());

    r = main2_analyze(1, 2);
    CHECK(r.irreducible.reducible());
    CHECK(r.monogenic.kind == MonogenicityVerdict::Kind::NotIrreducible);
    REQUIRE(r.irreducible.root.has_value());
    CHECK(*r.irreducible.root == -1);

    r = main2_analyze(2, 6);
    CHECK(r.delta == -1577939);
    CHECK(r.n_claimed == 39);
    REQUIRE(r.h.has_value());
    CHECK(r.h->h == 624);
    CHECK(r.claim == ClaimStatus::Holds);

    // delta > 0: outside F2, no claim.
    r = main2_analyze(2, 3);
    CHECK(sgn(r.delta) > 0);
    CHECK_FALSE(r.member);
    CHECK(r.claim == ClaimStatus::NotEvaluated);

    CHECK_THROWS_AS(main2_analyze(0, 3), usage_error);
    CHECK_THROWS_AS(main2_analyze(1, 1), usage_error);
}

TEST_CASE("main3_analyze")
{
    FamilyRecord r = main3_analyze(6, 1);
    CHECK(r.trinomial == Trinomial(6, BigInt(-30), BigInt(-5)));
    CHECK(r.delta == 15626);
    CHECK(r.monogenic.monogenic());
    CHECK(r.irreducible.certificate == IrreducibilityVerdict::Certificate::Eisenstein);
    CHECK(r.n_claimed == 3);
    REQUIRE(r.D.has_value());
    CHECK(*r.D == 62504);
    REQUIRE(r.h.has_value());
    CHECK(r.h->h == 24);
    CHECK(r.claim == ClaimStatus::Holds);
    CHECK(record_violations(r).empty());

    r = main3_analyze(10, 1);
    CHECK(r.monogenic.kind == MonogenicityVerdict::Kind::NotMonogenic);
    CHECK(r.monogenic.witness_prime == 3);

    AnalysisOptions fast;
    r = main3_analyze(6, 2, fast);
    CHECK(r.delta == 244140626);
    CHECK(r.slow_skipped);
    CHECK_FALSE(r.h.has_value());
    CHECK(r.claim == ClaimStatus::NotEvaluated);

    CHECK_THROWS_AS(main3_analyze(8, 1), usage_error);
    CHECK_THROWS_AS(main3_analyze(2, 1), usage_error);
    CHECK_THROWS_AS(main3_analyze(6, 10'000), usage_error);
}

TEST_CASE("main4_analyze")
{
    FamilyRecord r = main4_analyze(3, 2);
    CHECK(r.trinomial == Trinomial(3, BigInt(-1), BigInt(-18)));
    CHECK(r.delta == -2186);
    CHECK(r.n_claimed == 7);
    REQUIRE(r.h.has_value());
    CHECK(r.h->h == 42);
    CHECK(r.claim == ClaimStatus::Holds);
    REQUIRE(r.order_witness.has_value());
    CHECK(r.order_witness->order == 7);
    CHECK(form_order(r.order_witness->form, -8744, 100) == 7u);
    CHECK(record_violations(r).empty());

    r = main4_analyze(3, 4);
    CHECK(r.delta == -177146);
    REQUIRE(r.h.has_value());
    CHECK(r.h->h == 396);
    CHECK(r.n_claimed == 11);

    r = main4_analyze(7, 1);
    CHECK(r.delta == BigInt("-96889010406"));
    CHECK(r.n_claimed == 13);
    CHECK(r.slow_skipped);
    CHECK(r.irreducible.irreducible());
    CHECK(r.monogenic.monogenic());

    CHECK_THROWS_AS(main4_analyze(5, 1), usage_error);
}

TEST_CASE("record invariants over small scans")
{
    for (auto fam : {Family::Main1, Family::Main2, Family::Main3, Family::Main4}) {
        ParamRange first{-12, 12}, second{0, 0};
        if (fam == Family::Main2) {
            first = {1, 3};
            second = {2, 6};
        } else if (fam == Family::Main3) {
            first = {6, 14};
            second = {1, 1};
        } else if (fam == Family::Main4) {
            first = {3, 11};
            second = {1, 3};
        }
        AnalysisOptions opts;
        opts.probe_order_bound = 0;
        auto const recs = scan(fam, first, second, opts);
        CHECK_FALSE(recs.empty());
        for (auto const & r : recs) {
            auto const v = record_violations(r);
            INFO(to_string(fam));
            CHECK(v.empty());
            CHECK(r.claim != ClaimStatus::Fails);
        }
    }
}

TEST_CASE("scan counts and distinctness")
{
    auto const m1 = scan(Family::Main1, {-10, 10}, {});
    CHECK(m1.size() == 21);
    std::vector<FamilyRecord> members;
    for (auto const & r : m1) {
        if (r.member)
            members.push_back(r);
    }
    CHECK(members.size() == 12);
    CHECK(distinctness(members).pass);

    auto const m2 = scan(Family::Main2, {1, 3}, {2, 6});
    CHECK(m2.size() == 15);

    std::vector<FamilyRecord> twice{members[0], members[0]};
    DistinctnessResult const d = distinctness(twice);
    CHECK_FALSE(d.pass);
    REQUIRE(d.collision.has_value());
    CHECK(d.collision->second == 1);

    std::vector<FamilyRecord> mixed{members[0], main2_analyze(1, 3)};
    CHECK_THROWS_AS(distinctness(mixed), usage_error);
    CHECK(distinctness(std::span<FamilyRecord const>(members.data(), 1)).pass);
}

TEST_CASE("closed-form criterion agrees with the generic pipeline on small parameters")
{
    for (std::int64_t w = -60; w <= 60; ++w) {
        FamilyRecord const r = main1_analyze(from_i64(w));
        if (!r.irreducible.irreducible() || !r.km->applicable())
            continue;
        auto const c = closed_form_criterion(r);
        REQUIRE(c.has_value());
        CHECK(*c == r.monogenic.monogenic());
    }
    for (std::uint64_t a = 1; a <= 4; ++a) {
        for (std::uint64_t b = 2; b <= 8; ++b) {
            if (a == 1 && b == 2)
                continue;
            FamilyRecord const r = main2_analyze(a, b);
            auto const c = closed_form_criterion(r);
            REQUIRE(c.has_value());
            CHECK(*c == r.monogenic.monogenic());
        }
    }
}

TEST_CASE("all_h computes class numbers outside the family")
{
    AnalysisOptions opts;
    opts.all_h = true;
    // d = 4 * 216 - 27 = 837 = 27 * 31, field Q(sqrt(93)).
    FamilyRecord const r = main1_analyze(BigInt(6), opts);
    CHECK_FALSE(r.member);
    REQUIRE(r.D.has_value());
    CHECK(*r.D == 93);
    CHECK(r.h.has_value());
    CHECK(r.claim == ClaimStatus::NotEvaluated);
}
