#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pedlab/intpoly.hpp"
#include "pedlab/poset.hpp"

namespace pedlab {

/// Positions where a reference extension P orders consecutive Q-elements
/// oppositely to Q.
struct AscentData {
    std::vector<int> ascent_cells;     // element indices, in content order
    std::vector<int> ascent_contents;  // the k values, ascending
};

/// X-partition counting, for each element, the ascents strictly below its
/// Q-rank. Equality compares the values only; source is a diagnostic tag for
/// the generating pair.
struct Pedestal {
    XPartition base;
    std::string source;

    bool operator==(const Pedestal& o) const { return base == o.base; }
};

/// k is an ascent when P ranks the element of Q-rank k+1 below the element of
/// Q-rank k.
AscentData ascent_data(const Poset& p, const LinearExtension& ext_p, const LinearExtension& ext_q);

Pedestal pedestal(const Poset& p, const LinearExtension& ext_p, const LinearExtension& ext_q);

/// Sum of q^{pedestal volume} over all linear extensions Q; independent of
/// the reference extension.
IntPoly pedestal_polynomial(const Poset& p, const LinearExtension& ext_p);

/// Adds y_k at the element of Q-rank k; Y weakly increasing, non-negative.
XPartition bst_forward(const Poset& p, const LinearExtension& ext_p, const LinearExtension& ext_q,
                       const std::vector<long long>& y);

/// Inverse of bst_forward: recovers (Q, Y) from an X-partition. Q ranks
/// elements ascending by (value, P-rank).
std::pair<LinearExtension, std::vector<long long>> bst_inverse(const Poset& p,
                                                               const LinearExtension& ext_p,
                                                               const XPartition& t);

/// Expansion to degree N of q^{minimal volume} * pedestal_polynomial over
/// prod_{k=1..n} (1 - q^k). Equals the semistandard count series exactly when
/// subtracting the minimal element is a bijection onto the X-partitions;
/// that holds for straight shapes with the row filter and for every trivial
/// filter, but not for every skew shape (2,2/1 is the smallest failure).
TruncatedSeries semistandard_polynomial_via_pedestals(const Poset& p, const Filter& f,
                                                      const LinearExtension& ext_p, int N);

}  // namespace pedlab
