// Minimum-distance computation for linear codes over small fields: exact
// enumeration, Brouwer-Zimmermann with a work budget, randomized low-weight
// search, and an exact small-codimension route through the MacWilliams
// identity. Weight means Hamming weight over the code's own alphabet.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trc/matgf.hpp"

namespace trc {

inline constexpr std::uint64_t kDefaultDistanceBudget = 100'000'000;  // codeword evaluations

struct DistanceResult {
    std::uint64_t lb = 1;
    std::uint64_t ub = 0;
    bool exact = false;
    std::optional<std::vector<std::uint32_t>> witness;  // codeword of weight ub
    std::uint64_t work_spent = 0;                       // codewords examined
    std::string method;
};

// Enumerates every nonzero codeword (q^k of them, counted against the
// budget); refuses to start when q^rank(G) exceeds the budget. A
// zero-dimensional code yields the sentinel lb = ub = length + 1.
DistanceResult exact_distance_enum(const Matrix& g, std::uint64_t budget = kDefaultDistanceBudget);

// Iterative enumeration of low-weight messages across disjoint information
// sets, maintaining certified (lb, ub); exact when lb >= ub within budget,
// deterministic given G.
DistanceResult brouwer_zimmermann(const Matrix& g, std::uint64_t budget = kDefaultDistanceBudget);

// Randomized information-set sampling (systematic rows and row pairs count as
// one trial each). Returns a verified codeword of weight <= target_w if one
// is found; reproducible for a fixed seed (mt19937_64).
std::optional<std::vector<std::uint32_t>> low_weight_search(const Matrix& g, std::uint64_t target_w,
                                                            std::uint64_t trials, std::uint64_t seed);

// Exact minimum distance of the Euclidean dual of the given (small) code:
// enumerate the code's weight enumerator and apply the MacWilliams
// transform. Intended for dual codimension <= 8 or so; throws BudgetExceeded
// when the enumeration or the transform magnitudes are out of range.
std::uint64_t dual_distance_by_macwilliams(const Matrix& g,
                                           std::uint64_t budget = kDefaultDistanceBudget);

std::uint64_t hamming_weight(std::span<const std::uint32_t> v);

}  // namespace trc
