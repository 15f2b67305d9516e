#pragma once

#include <cstdint>
#include <vector>

#include "mtlab/factor.hpp"

namespace mtlab::detail {

/// All positive divisors of n >= 1, unsorted.
inline std::vector<std::uint64_t> divisors_u64(std::uint64_t n)
{
    std::vector<std::uint64_t> divs{1};
    for (auto [p, e] : factor_u64(n)) {
        std::size_t const count = divs.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace mtlab::detail
