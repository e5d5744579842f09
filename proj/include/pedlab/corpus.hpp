#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pedlab/poset.hpp"
#include "pedlab/shapes.hpp"

namespace pedlab {

/// All partitions with total in [0..max_total], ordered by (total, parts).
std::vector<Partition> all_partitions(int max_total);

/// All partitions contained in lambda, including the empty one and lambda
/// itself, ordered by (total, parts).
std::vector<Partition> sub_partitions(const Partition& lambda);

/// Every skew shape lambda/mu with |lambda| <= max_outer and mu inside
/// lambda, in deterministic order.
std::vector<SkewShape> all_skew_shapes(int max_outer);

struct NamedPoset {
    std::string name;
    Poset poset;
};

/// Fixed hand-declared list: chains and antichains up to 5 elements, plus a
/// handful of small classics (diamond, vee, wedge, fence, grid, and friends).
std::vector<NamedPoset> named_posets();

/// Seed-determined random poset with 2..max_elements elements; edges only go
/// from lower to higher index, so the result is always acyclic.
Poset random_poset(std::mt19937_64& rng, int max_elements);

/// Seed-determined valid filter: floors weakly increase along a random linear
/// extension and hit every value 1..k.
Filter random_filter(std::mt19937_64& rng, const Poset& p);

/// The seeded random corpus: `count` posets named "random-<seed>-<index>".
std::vector<NamedPoset> random_posets(std::uint64_t seed, int count, int max_elements);

}  // namespace pedlab
