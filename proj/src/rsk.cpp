#include "pedlab/rsk.hpp"

#include <algorithm>

#include "pedlab/errors.hpp"

namespace pedlab {

namespace {

/// Row-list view of a straight-shape standard tableau.
std::vector<std::vector<int>> to_rows(const StandardTableau& t) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(t.shape.outer().rows()));
    const std::vector<Cell> cells = t.shape.cells();
    for (size_t c = 0; c < cells.size(); ++c)
        rows[static_cast<size_t>(cells[c].j - 1)].push_back(t.entries[c]);
    return rows;
}

StandardTableau from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    std::vector<int> entries;
    for (const auto& row : rows) {
        if (row.empty()) break;
        parts.push_back(static_cast<int>(row.size()));
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return StandardTableau(SkewShape(Partition(parts), Partition()), std::move(entries));
}

void require_straight(const StandardTableau& t, const char* what) {
    if (!t.shape.is_straight())
        throw SkewNotSupported(std::string(what) + " requires a straight shape");
}

}  // namespace

Permutation::Permutation(std::vector<int> w) : word(std::move(w)) {
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : word) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("word is not a permutation of 1..n");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::reversed() const {
    Permutation r;
    r.word.assign(word.rbegin(), word.rend());
    return r;
}

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& sigma) {
    std::vector<std::vector<int>> p_rows, q_rows;
    for (int step = 0; step < sigma.size(); ++step) {
        int x = sigma.word[static_cast<size_t>(step)];
        size_t r = 0;
        for (;; ++r) {
            if (r == p_rows.size()) {
                p_rows.push_back({x});
                q_rows.push_back({step + 1});
                break;
            }
            auto it = std::upper_bound(p_rows[r].begin(), p_rows[r].end(), x);
            if (it == p_rows[r].end()) {
                p_rows[r].push_back(x);
                q_rows[r].push_back(step + 1);
                break;
            }
            std::swap(x, *it);
        }
    }
    return {from_rows(p_rows), from_rows(q_rows)};
}

Permutation rsk_inverse(const StandardTableau& p, const StandardTableau& q) {
    require_straight(p, "inverse row insertion");
    require_straight(q, "inverse row insertion");
    if (!(p.shape == q.shape)) throw ShapeMismatch("tableau shapes differ");
    const int n = p.size();
    std::vector<std::vector<int>> p_rows = to_rows(p);
    const std::vector<Cell> cells = q.shape.cells();
    std::vector<int> word(static_cast<size_t>(n), 0);
    for (int k = n; k >= 1; --k) {
        const Cell at = cells[static_cast<size_t>(q.position_of(k))];
        size_t r = static_cast<size_t>(at.j - 1);
        int x = p_rows[r].back();
        p_rows[r].pop_back();
        while (r > 0) {
            --r;
            // Rightmost entry smaller than x takes its place; x carries on up.
            auto it = std::lower_bound(p_rows[r].begin(), p_rows[r].end(), x);
            --it;
            std::swap(x, *it);
        }
        word[static_cast<size_t>(k - 1)] = x;
    }
    return Permutation(std::move(word));
}

StandardTableau transpose(const StandardTableau& q) {
    const SkewShape shape_t = q.shape.conjugate();
    const std::vector<Cell> cells = q.shape.cells();
    const std::vector<Cell> cells_t = shape_t.cells();
    std::vector<int> entries(cells_t.size(), 0);
    for (size_t c = 0; c < cells.size(); ++c) {
        const Cell flipped{cells[c].j, cells[c].i};
        for (size_t d = 0; d < cells_t.size(); ++d)
            if (cells_t[d] == flipped) {
                entries[d] = q.entries[c];
                break;
            }
    }
    return StandardTableau(shape_t, std::move(entries));
}

StandardTableau schuetzenberger(const StandardTableau& q, const StandardTableau& aux) {
    require_straight(q, "this involution");
    if (!(aux.shape == q.shape)) throw ShapeMismatch("auxiliary tableau shape differs");
    const Permutation sigma = rsk_inverse(aux, q);
    auto [p2, q2] = rsk(sigma.reversed());
    return transpose(q2);
}

StandardTableau schuetzenberger(const StandardTableau& q) {
    require_straight(q, "this involution");
    if (q.size() == 0) return q;
    const std::vector<StandardTableau> all = enumerate_syt(q.shape);
    return schuetzenberger(q, all.front());
}

bool verify_mahonian_schuetzenberger(const SkewShape& s) {
    if (!s.is_straight()) throw SkewNotSupported("identity is defined for straight shapes");
    for (const StandardTableau& q : enumerate_syt(s)) {
        if (descent_data(q).maj != plinth(schuetzenberger(q)).volume()) return false;
    }
    return true;
}

}  // namespace pedlab
