#include <cmath>
#include <numeric>

#include "doctest.h"
#include "mtlab/quadfield.hpp"

using namespace mtlab;

namespace {

// Reduced-form count straight from the definition, without divisor lists.
std::uint64_t naive_class_number(std::int64_t D)
{
    std::uint64_t h = 0;
    for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t const num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t const c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            ++h;
        }
    }
    return h;
}

}  // namespace

TEST_CASE("fundamental_discriminant")
{
    CHECK(fundamental_discriminant(BigInt(-1)) == -4);
    CHECK(fundamental_discriminant(BigInt(5)) == 5);
    CHECK(fundamental_discriminant(BigInt(2)) == 8);
    CHECK(fundamental_discriminant(BigInt(-23)) == -23);
    CHECK(fundamental_discriminant(BigInt(-2186)) == -8744);
    CHECK_THROWS_AS(fundamental_discriminant(BigInt(12)), usage_error);
    CHECK_THROWS_AS(fundamental_discriminant(BigInt(0)), usage_error);
    CHECK_THROWS_AS(fundamental_discriminant(BigInt(1)), usage_error);

    QuadField const k(BigInt(-5));
    CHECK(k.imaginary());
    CHECK(k.discriminant() == -20);
}

TEST_CASE("is_fundamental_discriminant")
{
    CHECK(is_fundamental_discriminant(-3));
    CHECK(is_fundamental_discriminant(-4));
    CHECK(is_fundamental_discriminant(8));
    CHECK(is_fundamental_discriminant(12));
    CHECK_FALSE(is_fundamental_discriminant(-12));  // -3 * 4
    CHECK_FALSE(is_fundamental_discriminant(-16));
    CHECK_FALSE(is_fundamental_discriminant(1));
    CHECK_FALSE(is_fundamental_discriminant(5 * 9));
}

TEST_CASE("reduce_definite")
{
    CHECK(reduce_definite({6, 5, 2}) == QuadForm{2, -1, 3});
    CHECK(reduce_definite({1, 0, 1}) == QuadForm{1, 0, 1});
    CHECK(reduce_definite({2, -2, 3}) == QuadForm{2, 2, 3});
    CHECK(reduce_definite({3, 1, 3}) == QuadForm{3, 1, 3});
    CHECK(reduce_definite({3, -1, 3}) == QuadForm{3, 1, 3});
    CHECK_THROWS_AS(reduce_definite({1, 3, 1}), usage_error);
    CHECK_THROWS_AS(reduce_definite({-1, 0, -1}), usage_error);
}

TEST_CASE("imaginary class numbers")
{
    CHECK(class_number_imaginary(-3).h == 1);
    CHECK(class_number_imaginary(-4).h == 1);
    CHECK(class_number_imaginary(-23).h == 3);
    CHECK(class_number_imaginary(-59).h == 3);
    CHECK(class_number_imaginary(-1931).h == 21);
    CHECK(class_number_imaginary(-3299).h == 27);
    CHECK(class_number_imaginary(-4027).h == 9);
    CHECK(class_number_imaginary(-8744).h == 42);
    CHECK_THROWS_AS(class_number_imaginary(-12), usage_error);
    CHECK_THROWS_AS(class_number_imaginary(5), usage_error);

    auto const forms = reduced_forms_imaginary(-23);
    REQUIRE(forms.size() == 3);
    CHECK(forms[0] == QuadForm{1, 1, 6});
    CHECK(forms[1] == QuadForm{2, -1, 3});
    CHECK(forms[2] == QuadForm{2, 1, 3});
}

TEST_CASE("imaginary class numbers match a direct count")
{
    for (std::int64_t D = -3; D > -6000; --D) {
        if (!is_fundamental_discriminant(D))
            continue;
        REQUIRE(class_number_imaginary(D).h == naive_class_number(D));
    }
}

TEST_CASE("progress callback reaches the total")
{
    std::uint64_t last_done = 0, last_total = 0;
    EnumerationOptions opts;
    opts.progress = [&](std::uint64_t done, std::uint64_t total) {
        last_done = done;
        last_total = total;
    };
    class_number_imaginary(-4027, opts);
    CHECK(last_total > 0);
    CHECK(last_done == last_total);
}

TEST_CASE("composition is a group law on reduced classes")
{
    for (std::int64_t D : {-23L, -4027L, -8744L, -3299L}) {
        auto const forms = reduced_forms_imaginary(D);
        QuadForm const one = principal_form(D);
        for (auto const & f : forms) {
            CHECK(compose(f, one, D) == f);
            CHECK(compose(f, QuadForm{f.a, -f.b, f.c}, D) == one);
            for (auto const & g : forms)
                REQUIRE(compose(f, g, D) == compose(g, f, D));
        }
        for (std::size_t i = 0; i < forms.size(); i += 3) {
            for (std::size_t j = 0; j < forms.size(); j += 2) {
                for (std::size_t k = 0; k < forms.size(); k += 5) {
                    auto const &f = forms[i], &g = forms[j], &h = forms[k];
                    REQUIRE(compose(compose(f, g, D), h, D) == compose(f, compose(g, h, D), D));
                }
            }
        }
    }
}

TEST_CASE("form orders divide the class number")
{
    CHECK(form_order({2, 1, 3}, -23, 10) == 3u);
    CHECK(form_order({1, 1, 6}, -23, 10) == 1u);
    CHECK_FALSE(form_order({2, 1, 3}, -23, 2).has_value());
    for (std::int64_t D : {-1931L, -4027L, -8744L}) {
        auto const forms = reduced_forms_imaginary(D);
        std::uint64_t const h = forms.size();
        std::uint64_t lcm = 1;
        for (auto const & f : forms) {
            auto const ord = form_order(f, D, h);
            REQUIRE(ord.has_value());
            CHECK(h % *ord == 0);
            lcm = std::lcm(lcm, *ord);
        }
        CHECK(h % lcm == 0);
    }
    CHECK_THROWS_AS(form_order({2, 1, 3}, -31, 10), usage_error);
}

TEST_CASE("continued fractions and fundamental units")
{
    ContinuedFractionData cf = continued_fraction_sqrt(5);
    CHECK(cf.unit_norm == -1);
    CHECK(std::fabs(static_cast<double>(cf.regulator) - std::log((1 + std::sqrt(5.0)) / 2)) < 1e-12);

    cf = continued_fraction_sqrt(12);
    CHECK(cf.unit_norm == 1);
    CHECK(std::fabs(static_cast<double>(cf.regulator) - std::log(2 + std::sqrt(3.0))) < 1e-12);

    FundamentalUnit u = fundamental_unit(5);
    CHECK(u.x == 1);
    CHECK(u.y == 1);
    CHECK(u.norm == -1);

    u = fundamental_unit(12);
    CHECK(u.x == 4);
    CHECK(u.y == 1);
    CHECK(u.norm == 1);

    u = fundamental_unit(229);
    CHECK(u.x == 15);
    CHECK(u.y == 1);
    CHECK(u.norm == -1);

    CHECK_THROWS_AS(continued_fraction_sqrt(16), usage_error);
    CHECK_THROWS_AS(continued_fraction_sqrt(7), usage_error);
}

TEST_CASE("regulator matches the logarithm of the exact unit")
{
    for (std::int64_t D = 5; D < 4000; ++D) {
        if (!is_fundamental_discriminant(D))
            continue;
        FundamentalUnit const u = fundamental_unit(D);
        double const eps = (u.x.get_d() + u.y.get_d() * std::sqrt(static_cast<double>(D))) / 2;
        double const reg = static_cast<double>(continued_fraction_sqrt(D).regulator);
        REQUIRE(std::fabs(std::log(eps) - reg) < 1e-9 * std::max(1.0, reg));
        REQUIRE(u.norm == continued_fraction_sqrt(D).unit_norm);
    }
}

TEST_CASE("real class numbers")
{
    ClassNumberResult r = class_number_real(5);
    CHECK(r.h == 1);
    CHECK(r.narrow_h == 1u);
    CHECK(r.unit_norm == -1);

    r = class_number_real(12);
    CHECK(r.h == 1);
    CHECK(r.narrow_h == 2u);
    CHECK(r.unit_norm == 1);

    CHECK(class_number_real(229).h == 3);
    CHECK(class_number_real(1345).h == 6);
    CHECK(class_number_real(2021).h == 3);
    CHECK(class_number_real(62504).h == 24);
    CHECK_THROWS_AS(class_number_real(45), usage_error);
}

TEST_CASE("rho_step keeps forms reduced")
{
    for (std::int64_t D : {229L, 1345L, 62504L}) {
        auto const forms = reduced_forms_real(D);
        for (auto const & f : forms) {
            QuadForm const g = rho_step(f, D);
            REQUIRE(g.discriminant() == D);
            REQUIRE(std::binary_search(forms.begin(), forms.end(), g));
        }
    }
}

TEST_CASE("cycle count agrees with the analytic formula")
{
    int compared = 0;
    for (std::int64_t D = 5; D < 8000; ++D) {
        if (!is_fundamental_discriminant(D))
            continue;
        auto const analytic = class_number_real_analytic(D);
        if (!analytic)
            continue;
        REQUIRE(class_number_real(D).h == analytic->h);
        ++compared;
    }
    CHECK(compared > 2000);
    auto const big = class_number_real_analytic(62504);
    REQUIRE(big.has_value());
    CHECK(big->h == 24);
    CHECK_THROWS_AS(class_number_real_analytic(62504, {1000, 0.2L}), usage_error);
}
