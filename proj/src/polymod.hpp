#pragma once

// Dense polynomials over GF(p), p < 2^32, constant term first.

#include <cstdint>
#include <vector>

namespace mtlab::polymod {

using Poly = std::vector<std::uint64_t>;

void trim(Poly & a);
Poly sub(Poly const & a, Poly const & b, std::uint64_t p);
Poly rem(Poly a, Poly const & m, std::uint64_t p);
Poly mulrem(Poly const & a, Poly const & b, Poly const & m, std::uint64_t p);
Poly powrem(Poly base, std::uint64_t exp, Poly const & m, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);

/// Ben-Or irreducibility test for a monic m of degree >= 1.
bool is_irreducible(Poly const & m, std::uint64_t p);

}  // namespace mtlab::polymod
