#include "pedlab/specmat.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "pedlab/errors.hpp"

namespace pedlab {

namespace {

using PolyMatrix = std::vector<std::vector<IntPoly>>;

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const size_t m = a.size();
    PolyMatrix r(m, std::vector<IntPoly>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < m; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

IntPoly poly_div_exact_int(const IntPoly& p, long k) {
    std::vector<mpz_class> out(p.coeffs());
    for (auto& c : out) {
        mpz_class quot, rem;
        mpz_class divisor(k);
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        if (rem != 0)
            throw InternalInvariantViolation("trace recursion produced a non-exact division");
        c = quot;
    }
    return IntPoly(std::move(out));
}

/// Coefficients of p(q0 + t) truncated at t^K, ascending in t.
std::vector<mpz_class> shift_truncate(const IntPoly& p, const mpz_class& q0, int K) {
    std::vector<mpz_class> out(static_cast<size_t>(K), 0);
    for (int j = p.degree(); j >= 0; --j) {
        // out = out * (q0 + t) + coeff(j), truncated
        for (int i = K - 1; i >= 1; --i) out[static_cast<size_t>(i)] = out[static_cast<size_t>(i)] * q0 + out[static_cast<size_t>(i - 1)];
        out[0] = out[0] * q0 + p.coeff(j);
    }
    return out;
}

/// Series with fixed truncation length; plain helper for the lifting loop.
struct TSeries {
    std::vector<mpz_class> c;  // length K

    explicit TSeries(int K) : c(static_cast<size_t>(K), 0) {}
};

TSeries series_mul(const TSeries& a, const TSeries& b) {
    const size_t K = a.c.size();
    TSeries r(static_cast<int>(K));
    for (size_t i = 0; i < K; ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; i + j < K; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

struct EigenCandidate {
    IntPoly value;
    int multiplicity = 0;
};

/// One attempt at a base point; returns the certified eigenvalue list or
/// nothing when this base point fails (collisions, non-integer roots, failed
/// certification).
std::optional<std::vector<IntPoly>> try_base_point(const CharPoly& cp, long q0_long,
                                                   const mpz_class& root_bound, int K) {
    const int m = cp.dim();
    const mpz_class q0(q0_long);

    // Point values of the characteristic polynomial at q = q0.
    std::vector<mpz_class> point(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) point[static_cast<size_t>(j)] = cp.coeffs_in_lambda[static_cast<size_t>(j)].eval(q0);

    // Strip roots at zero first so the remaining roots divide the constant.
    std::vector<mpz_class> work = point;
    int zero_mult = 0;
    while (work.size() > 1 && work[0] == 0) {
        work.erase(work.begin());
        ++zero_mult;
    }

    std::vector<std::pair<mpz_class, int>> point_roots;
    if (zero_mult > 0) point_roots.emplace_back(0, zero_mult);

    if (root_bound.fits_slong_p()) {
        const long bound = mpz_get_si(root_bound.get_mpz_t());
        const mpz_class constant = work[0];
        for (long z = 1; z <= bound && work.size() > 1; ++z) {
            if (!mpz_divisible_ui_p(constant.get_mpz_t(), static_cast<unsigned long>(z))) continue;
            for (long signed_z : {z, -z}) {
                mpz_class zc(signed_z);
                int mult = 0;
                while (work.size() > 1) {
                    // Synthetic division by (lambda - z); remainder must be 0.
                    std::vector<mpz_class> quot(work.size() - 1);
                    mpz_class acc = 0;
                    for (size_t j = work.size(); j-- > 1;) {
                        acc = acc * zc + work[j];
                        quot[j - 1] = acc;
                    }
                    if (acc * zc + work[0] != 0) break;
                    work = std::move(quot);
                    ++mult;
                }
                if (mult > 0) point_roots.emplace_back(zc, mult);
            }
        }
    } else {
        return std::nullopt;  // base point too coarse to scan
    }
    if (work.size() > 1) return std::nullopt;  // non-integer point roots

    std::vector<EigenCandidate> candidates;
    for (const auto& [z, mult] : point_roots) {
        // D = (mult-1)-th lambda-derivative of the characteristic polynomial;
        // the target eigenvalue is a simple series root of D through (q0, z).
        std::vector<IntPoly> dcoeffs;
        for (int j = mult - 1; j <= m; ++j) {
            mpz_class factor = 1;
            for (int s = 0; s < mult - 1; ++s) factor *= (j - s);
            dcoeffs.push_back(IntPoly::constant(factor) * cp.coeffs_in_lambda[static_cast<size_t>(j)]);
        }
        const int dm = static_cast<int>(dcoeffs.size()) - 1;

        // D recentered: coefficient j becomes a series in t = q - q0.
        std::vector<TSeries> dshift;
        dshift.reserve(dcoeffs.size());
        for (const IntPoly& c : dcoeffs) {
            TSeries s(K);
            s.c = shift_truncate(c, q0, K);
            dshift.push_back(std::move(s));
        }

        // w0 = d/d_lambda D at (z, t=0); must be a unit for the lift.
        mpz_class w0 = 0;
        {
            mpz_class zpow = 1;
            for (int j = 1; j <= dm; ++j) {
                w0 += j * dshift[static_cast<size_t>(j)].c[0] * zpow;
                zpow *= z;
            }
        }
        if (w0 == 0) return std::nullopt;

        TSeries e(K);
        e.c[0] = z;
        for (int step = 1; step < K; ++step) {
            // val = D(e) truncated; its t^step coefficient drives the update.
            TSeries val(K);
            for (int j = dm; j >= 0; --j) {
                val = series_mul(val, e);
                for (int i = 0; i < K; ++i) val.c[static_cast<size_t>(i)] += dshift[static_cast<size_t>(j)].c[static_cast<size_t>(i)];
            }
            for (int i = 0; i < step; ++i)
                if (val.c[static_cast<size_t>(i)] != 0)
                    throw InternalInvariantViolation("series lift lost an established coefficient");
            mpz_class num = -val.c[static_cast<size_t>(step)];
            mpz_class quot, rem;
            mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), w0.get_mpz_t());
            if (rem != 0) return std::nullopt;
            e.c[static_cast<size_t>(step)] = quot;
        }

        // Recenter from t back to q.
        IntPoly shift_back = IntPoly{-q0_long, 1};
        IntPoly value;
        for (int i = K; i-- > 0;) value = value * shift_back + IntPoly::constant(e.c[static_cast<size_t>(i)]);
        candidates.push_back({value, mult});
    }

    // Certify: divide the characteristic polynomial by every (lambda - e).
    std::vector<IntPoly> g = cp.coeffs_in_lambda;
    std::vector<IntPoly> eigenvalues;
    for (const EigenCandidate& cand : candidates) {
        for (int rep = 0; rep < cand.multiplicity; ++rep) {
            std::vector<IntPoly> h(g.size() - 1);
            IntPoly acc;
            for (size_t j = g.size(); j-- > 1;) {
                acc = acc * cand.value + g[j];
                h[j - 1] = acc;
            }
            if (!(acc * cand.value + g[0]).is_zero()) return std::nullopt;
            g = std::move(h);
            eigenvalues.push_back(cand.value);
        }
    }
    if (g.size() != 1 || !(g[0] == IntPoly{1})) return std::nullopt;
    return eigenvalues;
}

}  // namespace

PedestalMatrix pedestal_matrix(const Poset& p) {
    if (p.size() == 0) throw std::invalid_argument("pedestal matrix needs a nonempty poset");
    PedestalMatrix m;
    m.extension_index = linear_extensions(p);
    m.dim = static_cast<int>(m.extension_index.size());
    m.entries.assign(static_cast<size_t>(m.dim), std::vector<IntPoly>(static_cast<size_t>(m.dim)));
    for (int r = 0; r < m.dim; ++r)
        for (int c = 0; c < m.dim; ++c)
            m.entries[static_cast<size_t>(r)][static_cast<size_t>(c)] = IntPoly::monomial(
                1, static_cast<int>(pedestal(p, m.extension_index[static_cast<size_t>(r)],
                                             m.extension_index[static_cast<size_t>(c)])
                                        .base.volume()));
    return m;
}

mpz_class int_determinant(std::vector<std::vector<mpz_class>> a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_class quot, rem;
                mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0)
                    throw InternalInvariantViolation("fraction-free elimination division failed");
                a[i][j] = quot;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

CharPoly char_poly(const PedestalMatrix& m) {
    const int dim = m.dim;
    if (dim <= 0) throw std::invalid_argument("characteristic polynomial needs a nonempty matrix");
    CharPoly cp;
    cp.coeffs_in_lambda.assign(static_cast<size_t>(dim) + 1, IntPoly{});
    cp.coeffs_in_lambda[static_cast<size_t>(dim)] = IntPoly{1};

    PolyMatrix mk = m.entries;
    IntPoly trace;
    for (int i = 0; i < dim; ++i) trace += mk[static_cast<size_t>(i)][static_cast<size_t>(i)];
    cp.coeffs_in_lambda[static_cast<size_t>(dim - 1)] = -trace;
    for (int k = 2; k <= dim; ++k) {
        const IntPoly& ck = cp.coeffs_in_lambda[static_cast<size_t>(dim - k + 1)];
        for (int i = 0; i < dim; ++i) mk[static_cast<size_t>(i)][static_cast<size_t>(i)] += ck;
        mk = poly_mat_mul(m.entries, mk);
        IntPoly tr;
        for (int i = 0; i < dim; ++i) tr += mk[static_cast<size_t>(i)][static_cast<size_t>(i)];
        cp.coeffs_in_lambda[static_cast<size_t>(dim - k)] = -poly_div_exact_int(tr, k);
    }

    // Sampling cross-check against an independent integer determinant.
    const long samples[3][2] = {{2, 2}, {3, 2}, {5, 3}};
    for (const auto& s : samples) {
        const mpz_class lambda0(s[0]), q0(s[1]);
        mpz_class via_coeffs = 0;
        for (int j = dim; j >= 0; --j)
            via_coeffs = via_coeffs * lambda0 + cp.coeffs_in_lambda[static_cast<size_t>(j)].eval(q0);
        std::vector<std::vector<mpz_class>> a(static_cast<size_t>(dim),
                                              std::vector<mpz_class>(static_cast<size_t>(dim)));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    -m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(q0);
                if (i == j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] += lambda0;
            }
        if (via_coeffs != int_determinant(std::move(a)))
            throw InternalInvariantViolation("characteristic polynomial failed determinant sampling");
    }
    return cp;
}

EigenResult eigen_polynomials(const PedestalMatrix& m) {
    const CharPoly cp = char_poly(m);

    IntPoly row_sum;
    for (const IntPoly& e : m.entries[0]) row_sum += e;
    const int K = row_sum.degree() + 1;  // eigenvalue degrees are bounded by the row-sum degree

    std::ostringstream attempts;
    for (long q0 = 2; q0 <= 41; ++q0) {
        const mpz_class bound = row_sum.eval(q0);
        if (bound > 50000000) break;  // divisor scan would be too wide at this base
        auto found = try_base_point(cp, q0, bound, K);
        if (found) {
            EigenResult r;
            r.eigenvalues = std::move(*found);
            std::sort(r.eigenvalues.begin(), r.eigenvalues.end(),
                      [](const IntPoly& a, const IntPoly& b) {
                          if (a.degree() != b.degree()) return a.degree() < b.degree();
                          return a.coeffs() < b.coeffs();
                      });
            r.certified = true;
            return r;
        }
        attempts << " " << q0;
    }
    throw EigenExtractionFailed("no base point certified (tried" + attempts.str() +
                                "); matrix dim " + std::to_string(m.dim));
}

bool verify_integer_eigenvalues(const Poset& p, std::string* diagnostics) {
    try {
        const EigenResult r = eigen_polynomials(pedestal_matrix(p));
        return r.certified;
    } catch (const EigenExtractionFailed& e) {
        if (diagnostics) *diagnostics = e.what();
        return false;
    }
}

std::string factored_display(const IntPoly& e) {
    if (e.is_zero()) return "0";
    struct Entry {
        IntPoly factor;
        const char* text;
    };
    const Entry dictionary[] = {
        {IntPoly{1, -1}, "(1-q)"},
        {IntPoly{1, 1}, "(1+q)"},
        {IntPoly{1, 1, 1}, "(1+q+q^2)"},
        {IntPoly{1, -1, 1}, "(1-q+q^2)"},
        {IntPoly{1, 0, 1}, "(1+q^2)"},
        {IntPoly{1, 1, 1, 1, 1}, "(1+q+q^2+q^3+q^4)"},
    };
    IntPoly rest = e;
    std::ostringstream os;
    bool any = false;
    for (const Entry& entry : dictionary) {
        int power = 0;
        for (;;) {
            try {
                IntPoly next = poly_exact_div(rest, entry.factor);
                rest = next;
                ++power;
            } catch (const NotDivisible&) {
                break;
            }
        }
        if (power > 0) {
            if (any) os << "*";
            os << entry.text;
            if (power > 1) os << "^" << power;
            any = true;
        }
    }
    if (rest.degree() > 0) return "";
    if (!any) return rest.to_text();
    if (!(rest == IntPoly{1})) return rest.to_text() + "*" + os.str();
    return os.str();
}

}  // namespace pedlab
