#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pedlab/shapes.hpp"

namespace pedlab {

/// Finite poset over named elements. The order relation is stored as the full
/// reflexive-transitive closure; element indices follow the declaration order
/// (for shape posets: reading order of the cells), which is the canonical
/// order used by every enumeration and serialization.
class Poset {
public:
    Poset() = default;

    static Poset from_covers(const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::string, std::string>>& covers);
    static Poset from_skew_shape(const SkewShape& s);

    int size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(const std::string& label) const;  // throws UnknownLabel

    bool leq(int a, int b) const { return rel_[static_cast<size_t>(a) * n_ + b]; }
    bool less(int a, int b) const { return a != b && leq(a, b); }

    /// Indices ordered so that a strictly below b comes first; ties broken by
    /// canonical index.
    std::vector<int> topological_order() const;

    /// Covering pairs (transitive reduction), lexicographic by index pair.
    std::vector<std::pair<int, int>> cover_pairs() const;

    bool operator==(const Poset&) const = default;

private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<char> rel_;  // row-major n x n closure, rel_[a*n+b] = (a <= b)
};

/// Order-preserving bijective ranking of a poset's elements by 1..n.
struct LinearExtension {
    std::vector<int> rank;  // element index -> rank in [1..n]

    int size() const { return static_cast<int>(rank.size()); }
    int rank_of(int elem) const { return rank[static_cast<size_t>(elem)]; }
    /// Inverse table: entry r-1 is the element of rank r.
    std::vector<int> elements_by_rank() const;

    bool operator==(const LinearExtension&) const = default;
    bool operator<(const LinearExtension& o) const { return rank < o.rank; }
};

/// All linear extensions, sorted lexicographically by rank word over the
/// canonical element order. The empty poset has exactly one (empty) extension.
std::vector<LinearExtension> linear_extensions(const Poset& p);

bool is_linear_extension(const Poset& p, const LinearExtension& e);

/// Surjective order-respecting assignment of elements to floors 1..k.
struct Filter {
    std::vector<int> floor;  // element index -> floor in [1..k]
    int k = 0;

    bool operator==(const Filter&) const = default;
};

Filter trivial_filter(const Poset& p);
/// Floors by row index, renumbered consecutively over nonempty rows. The
/// element order must be the reading order of s (as from Poset::from_skew_shape).
Filter row_filter(const SkewShape& s);
bool filter_valid(const Poset& p, const Filter& f);

/// Order-preserving map from elements to non-negative integers.
struct XPartition {
    std::vector<long long> value;  // element index -> value

    long long volume() const;

    bool operator==(const XPartition&) const = default;
};

bool is_x_partition(const Poset& p, const XPartition& t);

/// True iff t is an X-partition and t(a) < t(b) whenever a < b in the poset
/// and floor(a) < floor(b).
bool is_semistandard(const Poset& p, const Filter& f, const XPartition& t);

/// Counts of semistandard X-partitions by volume 0..N, by exhaustive search.
std::vector<long long> semistandard_counts(const Poset& p, const Filter& f, int N);

/// Counts of all X-partitions by volume 0..N (the trivial-filter case).
std::vector<long long> x_partition_counts(const Poset& p, int N);

/// Enumerates the semistandard X-partitions with volume at most N.
std::vector<XPartition> enumerate_semistandard(const Poset& p, const Filter& f, int N);

/// The pointwise-least semistandard X-partition.
XPartition minimal_semistandard(const Poset& p, const Filter& f);

}  // namespace pedlab
