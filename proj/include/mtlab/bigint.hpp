#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mtlab {

using BigInt = mpz_class;

/// Raised when an operation is called outside its documented domain.
class usage_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

inline std::string to_string(BigInt const & n)
{
    return n.get_str(10);
}

inline BigInt pow_ui(BigInt const & base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline bool fits_i64(BigInt const & n)
{
    return mpz_fits_slong_p(n.get_mpz_t()) != 0 && sizeof(long) == 8;
}

inline std::int64_t to_i64(BigInt const & n)
{
    if (!fits_i64(n))
        throw usage_error("integer does not fit in 64 bits: " + to_string(n));
    return static_cast<std::int64_t>(n.get_si());
}

inline BigInt from_i64(std::int64_t v)
{
    return BigInt(static_cast<long>(v));
}

inline BigInt from_u64(std::uint64_t v)
{
    return BigInt(static_cast<unsigned long>(v));
}

inline bool fits_u64(BigInt const & n)
{
    return sgn(n) >= 0 && mpz_fits_ulong_p(n.get_mpz_t()) != 0;
}

inline std::uint64_t to_u64(BigInt const & n)
{
    if (!fits_u64(n))
        throw usage_error("integer does not fit in unsigned 64 bits: " + to_string(n));
    return n.get_ui();
}

inline std::size_t bit_length(BigInt const & n)
{
    return sgn(n) == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

}  // namespace mtlab
