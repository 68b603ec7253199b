#include "stci/srideal.hpp"

#include <stdexcept>

namespace stci {

std::vector<Monomial> cycle_ideal_gens(std::uint32_t n) {
    if (n < 3) throw std::invalid_argument("cycle_ideal_gens: need n >= 3");
    if (n == 3) return {Monomial{{1, 1}, {2, 1}, {3, 1}}};
    std::vector<Monomial> out;
    out.reserve(std::size_t(n) * (n - 3) / 2);
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 2; j <= n; ++j) {
            if (i == 1 && j == n) continue;  // the closing edge of the cycle
            out.push_back(Monomial{{i, 1}, {j, 1}});
        }
    return out;
}

std::uint32_t cycle_ideal_height(std::uint32_t n) {
    if (n < 3) throw std::invalid_argument("cycle_ideal_height: need n >= 3");
    return n - 2;
}

bool on_cycle_variety(const std::vector<std::uint32_t>& point) {
    const std::uint32_t n = static_cast<std::uint32_t>(point.size());
    if (n < 3) throw std::invalid_argument("on_cycle_variety: need n >= 3");
    std::uint32_t first = 0, second = 0, support = 0;
    for (std::uint32_t i = 1; i <= n; ++i) {
        if (point[i - 1] == 0) continue;
        ++support;
        if (support == 1)
            first = i;
        else if (support == 2)
            second = i;
        else
            return false;
    }
    if (support < 2) return true;
    if (n == 3) return true;  // every pair of triangle vertices is an edge
    return second - first == 1 || (first == 1 && second == n);
}

BigNat cycle_variety_count(std::uint32_t n, const BigNat& q) {
    if (n < 3) throw std::invalid_argument("cycle_variety_count: need n >= 3");
    BigNat u = q - 1;
    return 1 + n * u + n * u * u;
}

}  // namespace stci
