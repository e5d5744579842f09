#include "pedlab/pedestal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pedlab/errors.hpp"

namespace pedlab {

namespace {

void check_extension(const Poset& p, const LinearExtension& e, const char* which) {
    if (e.size() != p.size())
        throw MismatchedPoset(std::string(which) + " extension has wrong element count");
}

std::string rank_word(const LinearExtension& e) {
    std::ostringstream os;
    for (size_t i = 0; i < e.rank.size(); ++i) {
        if (i) os << ",";
        os << e.rank[i];
    }
    return os.str();
}

}  // namespace

AscentData ascent_data(const Poset& p, const LinearExtension& ext_p, const LinearExtension& ext_q) {
    check_extension(p, ext_p, "reference");
    check_extension(p, ext_q, "subject");
    AscentData a;
    const std::vector<int> by_rank = ext_q.elements_by_rank();
    for (int k = 1; k + 1 <= p.size(); ++k) {
        const int here = by_rank[static_cast<size_t>(k - 1)];
        const int next = by_rank[static_cast<size_t>(k)];
        if (ext_p.rank_of(next) < ext_p.rank_of(here)) {
            a.ascent_cells.push_back(here);
            a.ascent_contents.push_back(k);
        }
    }
    return a;
}

Pedestal pedestal(const Poset& p, const LinearExtension& ext_p, const LinearExtension& ext_q) {
    const AscentData a = ascent_data(p, ext_p, ext_q);
    Pedestal d;
    d.base.value.assign(static_cast<size_t>(p.size()), 0);
    for (int e = 0; e < p.size(); ++e) {
        const int k = ext_q.rank_of(e);
        long long count = 0;
        for (int ak : a.ascent_contents)
            if (ak < k) ++count;
        d.base.value[static_cast<size_t>(e)] = count;
    }
    d.source = "P=" + rank_word(ext_p) + ";Q=" + rank_word(ext_q);
    return d;
}

IntPoly pedestal_polynomial(const Poset& p, const LinearExtension& ext_p) {
    check_extension(p, ext_p, "reference");
    IntPoly g;
    for (const LinearExtension& q : linear_extensions(p))
        g += IntPoly::monomial(1, static_cast<int>(pedestal(p, ext_p, q).base.volume()));
    return g;
}

XPartition bst_forward(const Poset& p, const LinearExtension& ext_p, const LinearExtension& ext_q,
                       const std::vector<long long>& y) {
    check_extension(p, ext_p, "reference");
    check_extension(p, ext_q, "subject");
    if (static_cast<int>(y.size()) != p.size())
        throw std::invalid_argument("sequence length does not match poset size");
    for (size_t k = 0; k < y.size(); ++k) {
        if (y[k] < 0) throw std::invalid_argument("sequence entries must be non-negative");
        if (k > 0 && y[k] < y[k - 1])
            throw std::invalid_argument("sequence must be weakly increasing");
    }
    XPartition t = pedestal(p, ext_p, ext_q).base;
    for (int e = 0; e < p.size(); ++e)
        t.value[static_cast<size_t>(e)] += y[static_cast<size_t>(ext_q.rank_of(e) - 1)];
    return t;
}

std::pair<LinearExtension, std::vector<long long>> bst_inverse(const Poset& p,
                                                               const LinearExtension& ext_p,
                                                               const XPartition& t) {
    check_extension(p, ext_p, "reference");
    if (!is_x_partition(p, t))
        throw std::invalid_argument("input is not an X-partition of the poset");
    const int n = p.size();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (t.value[static_cast<size_t>(a)] != t.value[static_cast<size_t>(b)])
            return t.value[static_cast<size_t>(a)] < t.value[static_cast<size_t>(b)];
        return ext_p.rank_of(a) < ext_p.rank_of(b);
    });
    LinearExtension q;
    q.rank.assign(static_cast<size_t>(n), 0);
    for (int r = 0; r < n; ++r) q.rank[static_cast<size_t>(order[static_cast<size_t>(r)])] = r + 1;
    if (!is_linear_extension(p, q))
        throw InternalInvariantViolation("recovered ranking is not a linear extension");
    const XPartition base = pedestal(p, ext_p, q).base;
    std::vector<long long> y(static_cast<size_t>(n), 0);
    for (int e = 0; e < n; ++e)
        y[static_cast<size_t>(q.rank_of(e) - 1)] = t.value[static_cast<size_t>(e)] - base.value[static_cast<size_t>(e)];
    for (size_t k = 0; k < y.size(); ++k)
        if (y[k] < 0 || (k > 0 && y[k] < y[k - 1]))
            throw InternalInvariantViolation("recovered sequence is not weakly increasing");
    if (!(bst_forward(p, ext_p, q, y) == t))
        throw InternalInvariantViolation("forward map does not reproduce the input");
    return {std::move(q), std::move(y)};
}

TruncatedSeries semistandard_polynomial_via_pedestals(const Poset& p, const Filter& f,
                                                      const LinearExtension& ext_p, int N) {
    if (!filter_valid(p, f)) throw std::invalid_argument("filter is not valid for the poset");
    const long long shift = minimal_semistandard(p, f).volume();
    IntPoly numer = IntPoly::monomial(1, static_cast<int>(shift)) * pedestal_polynomial(p, ext_p);
    std::vector<int> exponents(static_cast<size_t>(p.size()));
    std::iota(exponents.begin(), exponents.end(), 1);
    return series_rational(numer, exponents, N);
}

}  // namespace pedlab
