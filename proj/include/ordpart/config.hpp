#pragma once

#include <cstdint>

namespace ordpart {

// Enumeration budgets. Each can be raised through the environment:
// ORDPART_WEYL_BOUND, ORDPART_SUBSET_BOUND, ORDPART_CONJUGATOR_BOUND,
// ORDPART_CHECK_BOUND.
struct Budgets {
    std::int64_t weyl_bound = 1'000'000;        // max |W| enumerated
    std::int64_t subset_bound = 1 << 20;        // max 2^|R+| scanned for closed sets
    std::int64_t conjugator_bound = 2'000'000;  // max unipotent conjugators searched
    std::int64_t check_bound = 50'000'000;      // max |W| * dim work in exhaustive checks

    static Budgets from_env();
};

inline constexpr std::uint64_t kDefaultSeed = 20250811;

}  // namespace ordpart
