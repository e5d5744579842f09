#pragma once

#include <utility>
#include <vector>

#include "pedlab/intpoly.hpp"
#include "pedlab/poset.hpp"
#include "pedlab/shapes.hpp"

namespace pedlab {

/// Bijective filling of a shape by 1..n, strictly increasing along rows and
/// down columns. Entries are stored in reading order of the cells.
struct StandardTableau {
    SkewShape shape;
    std::vector<int> entries;

    StandardTableau() = default;
    StandardTableau(SkewShape s, std::vector<int> e);  // validates

    int size() const { return static_cast<int>(entries.size()); }
    /// Reading-order position of the cell holding k.
    int position_of(int k) const;

    bool operator==(const StandardTableau&) const = default;
};

/// Non-negative filling, weakly increasing along rows and strictly increasing
/// down columns. Entries in reading order.
struct SemistandardTableau {
    SkewShape shape;
    std::vector<long long> entries;

    SemistandardTableau() = default;
    SemistandardTableau(SkewShape s, std::vector<long long> e);  // validates

    long long volume() const;

    bool operator==(const SemistandardTableau&) const = default;
};

/// Descent positions of a standard tableau: k is a descent when entry k+1
/// sits in a strictly lower row than entry k.
struct DescentData {
    std::vector<Cell> descent_cells;     // cells holding each descent k
    std::vector<int> descent_contents;   // the k values, ascending
    long long maj = 0;                   // sum of descent_contents
};

/// All standard tableaux of s, ordered lexicographically by reading-order
/// entry word.
std::vector<StandardTableau> enumerate_syt(const SkewShape& s);

DescentData descent_data(const StandardTableau& q);

/// Filling whose value at the cell holding k counts the descents below k.
SemistandardTableau plinth(const StandardTableau& q);

/// Sum of q^{plinth volume} over all standard tableaux of s.
IntPoly plinth_polynomial(const SkewShape& s);

/// Sum of q^{maj} over all standard tableaux of s.
IntPoly maj_polynomial(const SkewShape& s);

/// The standard tableau ranking cells by (value, column) ascending.
StandardTableau standardize(const SemistandardTableau& t);

/// Adds y_k at the cell holding k; Y must be weakly increasing, non-negative,
/// of length n.
SemistandardTableau bss_forward(const StandardTableau& q, const std::vector<long long>& y);

/// Inverse of bss_forward: recovers (Q, Y) from a semistandard tableau.
std::pair<StandardTableau, std::vector<long long>> bss_inverse(const SemistandardTableau& t);

/// Counts of semistandard tableaux of s by volume 0..N, by direct search over
/// the grid (no poset machinery).
std::vector<long long> ssyt_counts(const SkewShape& s, int N);

/// All semistandard tableaux of s with volume at most N, enumeration order
/// lexicographic in the reading-order entries.
std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& s, int N);

/// Standard tableau for a linear extension of the cell poset of s (ranks in
/// reading order), and back.
StandardTableau tableau_from_extension(const SkewShape& s, const LinearExtension& e);
LinearExtension extension_from_tableau(const StandardTableau& q);

}  // namespace pedlab
