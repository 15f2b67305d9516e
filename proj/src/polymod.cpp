#include "polymod.hpp"

#include <utility>

#include "mtlab/arith.hpp"

namespace mtlab::polymod {

namespace {

std::uint64_t inverse(std::uint64_t a, std::uint64_t p)
{
    return u64::powmod(a, p - 2, p);
}

}  // namespace

void trim(Poly & a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Poly sub(Poly const & a, Poly const & b, std::uint64_t p)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

Poly rem(Poly a, Poly const & m, std::uint64_t p)
{
    trim(a);
    std::size_t const dm = m.size() - 1;
    std::uint64_t const lead_inv = inverse(m.back(), p);
    while (a.size() > dm) {
        std::uint64_t const coef = u64::mulmod(a.back(), lead_inv, p);
        std::size_t const shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p - u64::mulmod(coef, m[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly mulrem(Poly const & a, Poly const & b, Poly const & m, std::uint64_t p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + u64::mulmod(a[i], b[j], p)) % p;
    }
    return rem(std::move(r), m, p);
}

Poly powrem(Poly base, std::uint64_t exp, Poly const & m, std::uint64_t p)
{
    Poly result = rem(Poly{1}, m, p);
    base = rem(std::move(base), m, p);
    while (exp > 0) {
        if (exp & 1)
            result = mulrem(result, base, m, p);
        exp >>= 1;
        if (exp > 0)
            base = mulrem(base, base, m, p);
    }
    return result;
}

Poly gcd(Poly a, Poly b, std::uint64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t const inv = inverse(a.back(), p);
        for (auto & c : a)
            c = u64::mulmod(c, inv, p);
    }
    return a;
}

bool is_irreducible(Poly const & m, std::uint64_t p)
{
    std::size_t const n = m.size() - 1;
    if (n == 0)
        return false;
    if (n == 1)
        return true;

    // Ben-Or: m is irreducible iff gcd(m, x^(p^i) - x) = 1 for i <= n/2.
    // Reducible inputs usually fail at a small i, which keeps the search cheap.
    Poly const x = rem(Poly{0, 1}, m, p);
    Poly frob = x;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        frob = powrem(frob, p, m, p);
        Poly const g = gcd(m, sub(frob, x, p), p);
        if (g.size() != 1)
            return false;
    }
    return true;
}

}  // namespace mtlab::polymod
