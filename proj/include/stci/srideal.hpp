#pragma once
/// @file srideal.hpp
/// @brief The edge ideal complement of the n-cycle: monomial generators,
///        height, and its variety over finite fields.
///
/// For the cycle on vertices 1..n the associated square-free monomial ideal
/// is generated by x_i x_j over all non-adjacent pairs (n >= 4); the
/// triangle has no such pair and its ideal is the single cubic x_1 x_2 x_3.
/// A point lies on the variety exactly when its support fits inside a face
/// of the cycle: the empty set, one vertex, or one edge.

#include "stci/bignat.hpp"
#include "stci/gf.hpp"
#include "stci/mpoly.hpp"

#include <cstdint>
#include <vector>

namespace stci {

/// Monomial generators of the cycle ideal, ordered (1,3), (1,4), ...,
/// lexicographically by pair. n >= 3.
std::vector<Monomial> cycle_ideal_gens(std::uint32_t n);

/// Height of the cycle ideal: n - 2.
std::uint32_t cycle_ideal_height(std::uint32_t n);

/// Support-based membership test for a point of F_q^n (packed field values,
/// n = point.size() >= 3).
bool on_cycle_variety(const std::vector<std::uint32_t>& point);

/// |V(I_n)(F_q)| = 1 + n(q-1) + n(q-1)^2.
BigNat cycle_variety_count(std::uint32_t n, const BigNat& q);

}  // namespace stci
