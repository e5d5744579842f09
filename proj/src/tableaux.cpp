#include "pedlab/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pedlab/errors.hpp"

namespace pedlab {

namespace {

/// Reading-order position of each cell's left and upper neighbor, or -1 when
/// the neighbor is outside the shape.
struct NeighborIndex {
    std::vector<Cell> cells;
    std::vector<int> left;
    std::vector<int> up;

    explicit NeighborIndex(const SkewShape& s) : cells(s.cells()) {
        left.assign(cells.size(), -1);
        up.assign(cells.size(), -1);
        for (size_t c = 0; c < cells.size(); ++c)
            for (size_t d = 0; d < cells.size(); ++d) {
                if (cells[d].j == cells[c].j && cells[d].i == cells[c].i - 1)
                    left[c] = static_cast<int>(d);
                if (cells[d].i == cells[c].i && cells[d].j == cells[c].j - 1)
                    up[c] = static_cast<int>(d);
            }
    }
};

}  // namespace

StandardTableau::StandardTableau(SkewShape s, std::vector<int> e)
    : shape(std::move(s)), entries(std::move(e)) {
    const int n = shape.num_cells();
    if (static_cast<int>(entries.size()) != n)
        throw std::invalid_argument("entry count does not match shape");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : entries) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("entries are not a bijection onto 1..n");
        seen[static_cast<size_t>(v)] = 1;
    }
    NeighborIndex nb(shape);
    for (size_t c = 0; c < entries.size(); ++c) {
        if (nb.left[c] >= 0 && entries[static_cast<size_t>(nb.left[c])] >= entries[c])
            throw std::invalid_argument("row not strictly increasing");
        if (nb.up[c] >= 0 && entries[static_cast<size_t>(nb.up[c])] >= entries[c])
            throw std::invalid_argument("column not strictly increasing");
    }
}

int StandardTableau::position_of(int k) const {
    for (size_t c = 0; c < entries.size(); ++c)
        if (entries[c] == k) return static_cast<int>(c);
    throw std::invalid_argument("entry out of range");
}

SemistandardTableau::SemistandardTableau(SkewShape s, std::vector<long long> e)
    : shape(std::move(s)), entries(std::move(e)) {
    if (static_cast<int>(entries.size()) != shape.num_cells())
        throw std::invalid_argument("entry count does not match shape");
    for (long long v : entries)
        if (v < 0) throw std::invalid_argument("negative entry");
    NeighborIndex nb(shape);
    for (size_t c = 0; c < entries.size(); ++c) {
        if (nb.left[c] >= 0 && entries[static_cast<size_t>(nb.left[c])] > entries[c])
            throw std::invalid_argument("row not weakly increasing");
        if (nb.up[c] >= 0 && entries[static_cast<size_t>(nb.up[c])] >= entries[c])
            throw std::invalid_argument("column not strictly increasing");
    }
}

long long SemistandardTableau::volume() const {
    return std::accumulate(entries.begin(), entries.end(), 0LL);
}

StandardTableau tableau_from_extension(const SkewShape& s, const LinearExtension& e) {
    return StandardTableau(s, e.rank);
}

LinearExtension extension_from_tableau(const StandardTableau& q) {
    return LinearExtension{q.entries};
}

std::vector<StandardTableau> enumerate_syt(const SkewShape& s) {
    const Poset p = Poset::from_skew_shape(s);
    std::vector<StandardTableau> out;
    for (const LinearExtension& e : linear_extensions(p)) out.push_back(tableau_from_extension(s, e));
    return out;
}

DescentData descent_data(const StandardTableau& q) {
    DescentData d;
    const std::vector<Cell> cells = q.shape.cells();
    const int n = q.size();
    std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
    for (int c = 0; c < n; ++c) pos[static_cast<size_t>(q.entries[static_cast<size_t>(c)])] = c;
    for (int k = 1; k + 1 <= n; ++k) {
        const Cell& at = cells[static_cast<size_t>(pos[static_cast<size_t>(k)])];
        const Cell& next = cells[static_cast<size_t>(pos[static_cast<size_t>(k + 1)])];
        if (next.j > at.j) {
            d.descent_cells.push_back(at);
            d.descent_contents.push_back(k);
            d.maj += k;
        }
    }
    return d;
}

SemistandardTableau plinth(const StandardTableau& q) {
    const DescentData d = descent_data(q);
    const int n = q.size();
    std::vector<long long> entries(static_cast<size_t>(n), 0);
    for (size_t c = 0; c < entries.size(); ++c) {
        const int k = q.entries[c];
        long long count = 0;
        for (int dc : d.descent_contents)
            if (dc < k) ++count;
        entries[c] = count;
    }
    return SemistandardTableau(q.shape, std::move(entries));
}

IntPoly plinth_polynomial(const SkewShape& s) {
    IntPoly g;
    for (const StandardTableau& q : enumerate_syt(s))
        g += IntPoly::monomial(1, static_cast<int>(plinth(q).volume()));
    return g;
}

IntPoly maj_polynomial(const SkewShape& s) {
    IntPoly g;
    for (const StandardTableau& q : enumerate_syt(s))
        g += IntPoly::monomial(1, static_cast<int>(descent_data(q).maj));
    return g;
}

StandardTableau standardize(const SemistandardTableau& t) {
    const std::vector<Cell> cells = t.shape.cells();
    const int n = static_cast<int>(cells.size());
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (t.entries[static_cast<size_t>(a)] != t.entries[static_cast<size_t>(b)])
            return t.entries[static_cast<size_t>(a)] < t.entries[static_cast<size_t>(b)];
        return cells[static_cast<size_t>(a)].i < cells[static_cast<size_t>(b)].i;
    });
    std::vector<int> entries(static_cast<size_t>(n), 0);
    for (int r = 0; r < n; ++r) entries[static_cast<size_t>(order[static_cast<size_t>(r)])] = r + 1;
    return StandardTableau(t.shape, std::move(entries));
}

SemistandardTableau bss_forward(const StandardTableau& q, const std::vector<long long>& y) {
    const int n = q.size();
    if (static_cast<int>(y.size()) != n)
        throw std::invalid_argument("sequence length does not match cell count");
    for (size_t k = 0; k < y.size(); ++k) {
        if (y[k] < 0) throw std::invalid_argument("sequence entries must be non-negative");
        if (k > 0 && y[k] < y[k - 1])
            throw std::invalid_argument("sequence must be weakly increasing");
    }
    SemistandardTableau base = plinth(q);
    std::vector<long long> entries = base.entries;
    for (size_t c = 0; c < entries.size(); ++c)
        entries[c] += y[static_cast<size_t>(q.entries[c] - 1)];
    return SemistandardTableau(q.shape, std::move(entries));
}

std::pair<StandardTableau, std::vector<long long>> bss_inverse(const SemistandardTableau& t) {
    StandardTableau q = standardize(t);
    const SemistandardTableau base = plinth(q);
    const int n = q.size();
    std::vector<long long> y(static_cast<size_t>(n), 0);
    for (size_t c = 0; c < t.entries.size(); ++c)
        y[static_cast<size_t>(q.entries[c] - 1)] = t.entries[c] - base.entries[c];
    for (size_t k = 0; k < y.size(); ++k)
        if (y[k] < 0 || (k > 0 && y[k] < y[k - 1]))
            throw InternalInvariantViolation("recovered sequence is not weakly increasing");
    if (!(bss_forward(q, y) == t))
        throw InternalInvariantViolation("forward map does not reproduce the input tableau");
    return {std::move(q), std::move(y)};
}

namespace {

void for_each_ssyt(const SkewShape& s, int N,
                   const std::function<void(const std::vector<long long>&, long long)>& sink) {
    const NeighborIndex nb(s);
    const int n = static_cast<int>(nb.cells.size());
    std::vector<long long> entries(static_cast<size_t>(n), 0);
    std::function<void(int, long long)> place = [&](int c, long long sum) {
        if (c == n) {
            sink(entries, sum);
            return;
        }
        long long lb = 0;
        if (nb.left[static_cast<size_t>(c)] >= 0)
            lb = std::max(lb, entries[static_cast<size_t>(nb.left[static_cast<size_t>(c)])]);
        if (nb.up[static_cast<size_t>(c)] >= 0)
            lb = std::max(lb, entries[static_cast<size_t>(nb.up[static_cast<size_t>(c)])] + 1);
        for (long long v = lb; sum + v <= N; ++v) {
            entries[static_cast<size_t>(c)] = v;
            place(c + 1, sum + v);
        }
        entries[static_cast<size_t>(c)] = 0;
    };
    place(0, 0);
}

}  // namespace

std::vector<long long> ssyt_counts(const SkewShape& s, int N) {
    if (N < 0) throw std::invalid_argument("volume bound must be >= 0");
    std::vector<long long> counts(static_cast<size_t>(N) + 1, 0);
    for_each_ssyt(s, N, [&](const std::vector<long long>&, long long sum) { counts[static_cast<size_t>(sum)] += 1; });
    return counts;
}

std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& s, int N) {
    if (N < 0) throw std::invalid_argument("volume bound must be >= 0");
    std::vector<SemistandardTableau> out;
    for_each_ssyt(s, N, [&](const std::vector<long long>& entries, long long) {
        out.push_back(SemistandardTableau(s, entries));
    });
    return out;
}

}  // namespace pedlab
