#pragma once

#include <string>
#include <vector>

namespace pedlab {

/// One box of a Young diagram. i is the column (1-based, growing right),
/// j is the row (1-based, growing downward).
struct Cell {
    int i = 0;
    int j = 0;
    bool operator==(const Cell&) const = default;
};

/// Weakly decreasing sequence of positive integers. Zero parts are never
/// stored; the empty partition is the default value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int rows() const { return static_cast<int>(parts_.size()); }
    /// j-th part, 1-based; 0 beyond the last row.
    int part(int j) const;
    int total() const;
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Pair of nested partitions mu within lambda; the shape consists of the
/// cells of lambda not in mu.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int num_cells() const { return outer_.total() - inner_.total(); }
    bool is_straight() const { return inner_.rows() == 0; }
    bool contains_cell(const Cell& c) const;

    /// Cells in reading order: row 1 left to right, then row 2, and so on.
    std::vector<Cell> cells() const;

    SkewShape conjugate() const;

    /// Grammar: "3,2" or "3,2/1". Trailing zero parts are accepted and
    /// dropped.
    static SkewShape parse(const std::string& text);
    std::string to_text() const;

    bool operator==(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

}  // namespace pedlab
