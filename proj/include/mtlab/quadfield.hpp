#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mtlab/bigint.hpp"

namespace mtlab {

/// Binary quadratic form a x^2 + b xy + c y^2. Class-number routines work in
/// machine words; discriminants are limited to |D| < 2^62.
struct QuadForm
{
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    __int128 discriminant() const
    {
        return static_cast<__int128>(b) * b - static_cast<__int128>(4) * a * c;
    }

    std::string to_string() const;

    auto operator<=>(QuadForm const &) const = default;
};

/// D = delta when delta = 1 (mod 4), else 4 delta. Throws for delta in {0, 1}
/// and for delta with a detectable square factor.
BigInt fundamental_discriminant(BigInt const & delta);

/// Whether D is the discriminant of a quadratic field.
bool is_fundamental_discriminant(std::int64_t D);

/// Q(sqrt(delta)) for squarefree delta != 0, 1.
class QuadField
{
public:
    explicit QuadField(BigInt delta);

    BigInt const & delta() const { return delta_; }
    BigInt const & discriminant() const { return D_; }
    bool imaginary() const { return sgn(delta_) < 0; }

private:
    BigInt delta_;
    BigInt D_;
};

enum class ClassNumberMethod { FormEnumeration, CycleCount, Analytic };

char const * to_string(ClassNumberMethod m);

struct ClassNumberResult
{
    std::uint64_t h = 0;
    ClassNumberMethod method = ClassNumberMethod::FormEnumeration;
    std::optional<std::uint64_t> narrow_h;  // real fields only
    std::optional<int> unit_norm;           // real fields only
};

/// Identity of the class group: (1, D mod 2, (D mod 2 - D)/4).
QuadForm principal_form(std::int64_t D);

/// Unique reduced representative of a positive definite form.
QuadForm reduce_definite(QuadForm f);

struct EnumerationOptions
{
    /// Called with (values of b processed, total values of b).
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Primitive reduced forms of discriminant D < 0, sorted by (a, b).
std::vector<QuadForm> reduced_forms_imaginary(std::int64_t D, EnumerationOptions const & opts = {});

/// h(D) for a fundamental D < 0.
ClassNumberResult class_number_imaginary(std::int64_t D, EnumerationOptions const & opts = {});

/// Gauss composition followed by reduction, for primitive forms of D < 0.
QuadForm compose(QuadForm const & f1, QuadForm const & f2, std::int64_t D);

/// Least k <= bound with f^k principal, or nullopt when the bound is exceeded.
std::optional<std::uint64_t> form_order(QuadForm const & f, std::int64_t D, std::uint64_t bound);

struct ContinuedFractionData
{
    std::uint64_t period = 0;
    int unit_norm = 0;         // norm of the fundamental unit, -1 iff the period is odd
    long double regulator = 0; // ln(epsilon)
};

/// Expansion of omega_D = (D mod 2 + sqrt(D)) / 2 for D > 0 non-square.
ContinuedFractionData continued_fraction_sqrt(std::int64_t D);

/// epsilon = (x + y sqrt(D)) / 2 with x^2 - D y^2 = 4 * norm.
struct FundamentalUnit
{
    BigInt x;
    BigInt y;
    int norm = 0;
};

/// Exact fundamental unit; throws when the period exceeds max_period.
FundamentalUnit fundamental_unit(std::int64_t D, std::uint64_t max_period = 100'000);

/// Reduced primitive indefinite forms of discriminant D > 0 (non-square):
/// 0 < b < sqrt(D) and |sqrt(D) - 2|a|| < b. Sorted.
std::vector<QuadForm> reduced_forms_real(std::int64_t D, EnumerationOptions const & opts = {});

/// The neighbouring reduced form in the cycle of an indefinite reduced form.
QuadForm rho_step(QuadForm const & f, std::int64_t D);

/// Narrow class number by counting cycles of reduced forms, corrected by the
/// norm of the fundamental unit.
ClassNumberResult class_number_real(std::int64_t D, EnumerationOptions const & opts = {});

struct AnalyticOptions
{
    std::int64_t cutoff = 10'000'000;
    /// Required distance of the floating-point value from a half-integer.
    long double margin = 0.2L;
};

/// Floating-point value -(1/(2 ln eps)) sum chi_D(a) ln(2 sin(pi a / D)).
long double analytic_class_number_value(std::int64_t D);

/// Rounded analytic class number, or nullopt when the value sits closer than
/// `margin` to a rounding boundary. Throws when D exceeds the cutoff.
std::optional<ClassNumberResult> class_number_real_analytic(std::int64_t D, AnalyticOptions const & opts = {});

}  // namespace mtlab
