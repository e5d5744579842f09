#include "pedlab/poset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pedlab/errors.hpp"

namespace pedlab {

int Poset::index_of(const std::string& label) const {
    for (int a = 0; a < n_; ++a)
        if (labels_[static_cast<size_t>(a)] == label) return a;
    throw UnknownLabel("unknown element '" + label + "'");
}

Poset Poset::from_covers(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    Poset p;
    p.n_ = static_cast<int>(labels.size());
    p.labels_ = labels;
    for (size_t a = 0; a < labels.size(); ++a)
        for (size_t b = a + 1; b < labels.size(); ++b)
            if (labels[a] == labels[b])
                throw std::invalid_argument("duplicate element label '" + labels[a] + "'");

    const int n = p.n_;
    p.rel_.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) p.rel_[static_cast<size_t>(a) * n + a] = 1;
    for (const auto& [lo, hi] : covers) {
        int a = p.index_of(lo);
        int b = p.index_of(hi);
        if (a == b) throw CycleDetected("self-cover on '" + lo + "'");
        p.rel_[static_cast<size_t>(a) * n + b] = 1;
    }
    // Warshall closure.
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a) {
            if (!p.rel_[static_cast<size_t>(a) * n + k]) continue;
            for (int b = 0; b < n; ++b)
                if (p.rel_[static_cast<size_t>(k) * n + b]) p.rel_[static_cast<size_t>(a) * n + b] = 1;
        }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (p.leq(a, b) && p.leq(b, a))
                throw CycleDetected("cycle through '" + labels[static_cast<size_t>(a)] + "' and '" +
                                    labels[static_cast<size_t>(b)] + "'");
    return p;
}

Poset Poset::from_skew_shape(const SkewShape& s) {
    Poset p;
    const std::vector<Cell> cells = s.cells();
    p.n_ = static_cast<int>(cells.size());
    const int n = p.n_;
    p.labels_.reserve(cells.size());
    for (const Cell& c : cells) {
        std::ostringstream os;
        os << c.i << "," << c.j;
        p.labels_.push_back(os.str());
    }
    p.rel_.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            p.rel_[static_cast<size_t>(a) * n + b] =
                cells[static_cast<size_t>(a)].i <= cells[static_cast<size_t>(b)].i &&
                cells[static_cast<size_t>(a)].j <= cells[static_cast<size_t>(b)].j;
    return p;
}

std::vector<int> Poset::topological_order() const {
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n_));
    std::vector<char> used(static_cast<size_t>(n_), 0);
    for (int step = 0; step < n_; ++step) {
        for (int a = 0; a < n_; ++a) {
            if (used[static_cast<size_t>(a)]) continue;
            bool minimal = true;
            for (int b = 0; b < n_ && minimal; ++b)
                if (!used[static_cast<size_t>(b)] && less(b, a)) minimal = false;
            if (minimal) {
                order.push_back(a);
                used[static_cast<size_t>(a)] = 1;
                break;
            }
        }
    }
    return order;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!less(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n_ && cover; ++c)
                if (less(a, c) && less(c, b)) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

std::vector<int> LinearExtension::elements_by_rank() const {
    std::vector<int> inv(rank.size(), 0);
    for (size_t e = 0; e < rank.size(); ++e) inv[static_cast<size_t>(rank[e] - 1)] = static_cast<int>(e);
    return inv;
}

bool is_linear_extension(const Poset& p, const LinearExtension& e) {
    const int n = p.size();
    if (static_cast<int>(e.rank.size()) != n) return false;
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int r : e.rank) {
        if (r < 1 || r > n || seen[static_cast<size_t>(r)]) return false;
        seen[static_cast<size_t>(r)] = 1;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.less(a, b) && e.rank[static_cast<size_t>(a)] > e.rank[static_cast<size_t>(b)])
                return false;
    return true;
}

std::vector<LinearExtension> linear_extensions(const Poset& p) {
    const int n = p.size();
    std::vector<LinearExtension> out;
    std::vector<int> rank(static_cast<size_t>(n), 0);
    std::function<void(int)> assign = [&](int next) {
        if (next > n) {
            out.push_back(LinearExtension{rank});
            return;
        }
        for (int a = 0; a < n; ++a) {
            if (rank[static_cast<size_t>(a)] != 0) continue;
            bool ready = true;
            for (int b = 0; b < n && ready; ++b)
                if (rank[static_cast<size_t>(b)] == 0 && b != a && p.less(b, a)) ready = false;
            if (!ready) continue;
            rank[static_cast<size_t>(a)] = next;
            assign(next + 1);
            rank[static_cast<size_t>(a)] = 0;
        }
    };
    assign(1);
    std::sort(out.begin(), out.end());
    return out;
}

Filter trivial_filter(const Poset& p) {
    Filter f;
    f.floor.assign(static_cast<size_t>(p.size()), 1);
    f.k = p.size() > 0 ? 1 : 0;
    return f;
}

Filter row_filter(const SkewShape& s) {
    const std::vector<Cell> cells = s.cells();
    if (cells.empty()) throw InvalidShape("row filter needs a nonempty shape");
    std::vector<int> rows_seen;
    for (const Cell& c : cells)
        if (rows_seen.empty() || rows_seen.back() != c.j) rows_seen.push_back(c.j);
    Filter f;
    f.k = static_cast<int>(rows_seen.size());
    f.floor.reserve(cells.size());
    for (const Cell& c : cells) {
        auto it = std::find(rows_seen.begin(), rows_seen.end(), c.j);
        f.floor.push_back(static_cast<int>(it - rows_seen.begin()) + 1);
    }
    return f;
}

bool filter_valid(const Poset& p, const Filter& f) {
    const int n = p.size();
    if (static_cast<int>(f.floor.size()) != n) return false;
    if (n == 0) return f.k == 0;
    std::vector<char> hit(static_cast<size_t>(f.k) + 1, 0);
    for (int v : f.floor) {
        if (v < 1 || v > f.k) return false;
        hit[static_cast<size_t>(v)] = 1;
    }
    for (int v = 1; v <= f.k; ++v)
        if (!hit[static_cast<size_t>(v)]) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.less(a, b) && f.floor[static_cast<size_t>(a)] > f.floor[static_cast<size_t>(b)])
                return false;
    return true;
}

long long XPartition::volume() const {
    long long s = 0;
    for (long long v : value) s += v;
    return s;
}

bool is_x_partition(const Poset& p, const XPartition& t) {
    const int n = p.size();
    if (static_cast<int>(t.value.size()) != n) return false;
    for (long long v : t.value)
        if (v < 0) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.less(a, b) && t.value[static_cast<size_t>(a)] > t.value[static_cast<size_t>(b)])
                return false;
    return true;
}

bool is_semistandard(const Poset& p, const Filter& f, const XPartition& t) {
    if (!is_x_partition(p, t)) return false;
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.less(a, b) && f.floor[static_cast<size_t>(a)] < f.floor[static_cast<size_t>(b)] &&
                t.value[static_cast<size_t>(a)] >= t.value[static_cast<size_t>(b)])
                return false;
    return true;
}

namespace {

/// Depth-first assignment in topological order; each element's value is at
/// least the largest predecessor value, bumped by one across a floor
/// increase. Calls sink(total) for each complete assignment with volume <= N.
void for_each_semistandard(const Poset& p, const Filter& f, int N,
                           const std::function<void(const std::vector<long long>&, long long)>& sink) {
    const int n = p.size();
    const std::vector<int> topo = p.topological_order();
    std::vector<long long> value(static_cast<size_t>(n), 0);
    std::function<void(int, long long)> place = [&](int pos, long long sum) {
        if (pos == n) {
            sink(value, sum);
            return;
        }
        const int a = topo[static_cast<size_t>(pos)];
        long long lb = 0;
        for (int q = 0; q < pos; ++q) {
            const int b = topo[static_cast<size_t>(q)];
            if (!p.less(b, a)) continue;
            long long need = value[static_cast<size_t>(b)] +
                             (f.floor[static_cast<size_t>(b)] < f.floor[static_cast<size_t>(a)] ? 1 : 0);
            lb = std::max(lb, need);
        }
        for (long long v = lb; sum + v <= N; ++v) {
            value[static_cast<size_t>(a)] = v;
            place(pos + 1, sum + v);
        }
        value[static_cast<size_t>(a)] = 0;
    };
    place(0, 0);
}

}  // namespace

std::vector<long long> semistandard_counts(const Poset& p, const Filter& f, int N) {
    if (N < 0) throw std::invalid_argument("volume bound must be >= 0");
    if (static_cast<int>(f.floor.size()) != p.size())
        throw std::invalid_argument("filter does not match poset size");
    std::vector<long long> counts(static_cast<size_t>(N) + 1, 0);
    for_each_semistandard(p, f, N,
                          [&](const std::vector<long long>&, long long sum) { counts[static_cast<size_t>(sum)] += 1; });
    return counts;
}

std::vector<long long> x_partition_counts(const Poset& p, int N) {
    return semistandard_counts(p, trivial_filter(p), N);
}

std::vector<XPartition> enumerate_semistandard(const Poset& p, const Filter& f, int N) {
    if (N < 0) throw std::invalid_argument("volume bound must be >= 0");
    std::vector<XPartition> out;
    for_each_semistandard(p, f, N, [&](const std::vector<long long>& value, long long) {
        out.push_back(XPartition{value});
    });
    std::sort(out.begin(), out.end(),
              [](const XPartition& a, const XPartition& b) { return a.value < b.value; });
    return out;
}

XPartition minimal_semistandard(const Poset& p, const Filter& f) {
    if (static_cast<int>(f.floor.size()) != p.size())
        throw std::invalid_argument("filter does not match poset size");
    const int n = p.size();
    XPartition t;
    t.value.assign(static_cast<size_t>(n), 0);
    for (int a : p.topological_order()) {
        long long v = 0;
        for (int b = 0; b < n; ++b) {
            if (!p.less(b, a)) continue;
            long long need = t.value[static_cast<size_t>(b)] +
                             (f.floor[static_cast<size_t>(b)] < f.floor[static_cast<size_t>(a)] ? 1 : 0);
            v = std::max(v, need);
        }
        t.value[static_cast<size_t>(a)] = v;
    }
    return t;
}

}  // namespace pedlab
