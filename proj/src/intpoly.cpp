#include "pedlab/intpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "pedlab/errors.hpp"

namespace pedlab {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& v) {
    IntPoly p;
    if (v != 0) p.coeffs_.push_back(v);
    return p;
}

IntPoly IntPoly::monomial(const mpz_class& coeff, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    IntPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<size_t>(degree) + 1, kZero);
        p.coeffs_.back() = coeff;
    }
    return p;
}

IntPoly IntPoly::variable() { return monomial(1, 1); }

const mpz_class& IntPoly::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    IntPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPoly::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

IntPoly poly_exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) throw NotDivisible("degree of dividend below divisor");
    std::vector<mpz_class> rem(a.coeffs());
    const auto& d = b.coeffs();
    const mpz_class& lead = d.back();
    int qdeg = a.degree() - b.degree();
    std::vector<mpz_class> quot(static_cast<size_t>(qdeg) + 1, 0);
    for (int k = qdeg; k >= 0; --k) {
        mpz_class& top = rem[static_cast<size_t>(k + b.degree())];
        if (top == 0) continue;
        mpz_class c, r;
        mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw NotDivisible("leading-coefficient division fails over the integers");
        quot[static_cast<size_t>(k)] = c;
        for (size_t i = 0; i < d.size(); ++i) rem[static_cast<size_t>(k) + i] -= c * d[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw NotDivisible("nonzero remainder");
    return IntPoly(std::move(quot));
}

IntPoly poly_interpolate(const std::vector<std::pair<mpz_class, mpz_class>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolation points must have distinct x");

    // Newton divided differences, kept as exact rationals until the end.
    std::vector<mpq_class> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = mpq_class(points[i].second);
    std::vector<mpq_class> newton(n);  // newton[j] = f[x_0..x_j]
    newton[0] = dd[0];
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = 0; i + level < n; ++i) {
            mpq_class num = dd[i + 1] - dd[i];
            mpq_class den(mpz_class(points[i + level].first - points[i].first));
            dd[i] = num / den;
        }
        newton[level] = dd[0];
    }

    // Expand sum_j newton[j] * prod_{i<j} (q - x_i) into the monomial basis.
    std::vector<mpq_class> acc(n, mpq_class(0));
    std::vector<mpq_class> basis(n, mpq_class(0));  // prod_{i<j} (q - x_i)
    basis[0] = 1;
    size_t basis_deg = 0;
    for (size_t j = 0; j < n; ++j) {
        for (size_t k = 0; k <= basis_deg; ++k) acc[k] += newton[j] * basis[k];
        if (j + 1 < n) {
            // basis *= (q - x_j)
            mpq_class x(points[j].first);
            for (size_t k = basis_deg + 1; k > 0; --k)
                basis[k] = basis[k - 1] - x * basis[k];
            basis[0] = -x * basis[0];
            ++basis_deg;
        }
    }

    std::vector<mpz_class> out(n);
    for (size_t k = 0; k < n; ++k) {
        acc[k].canonicalize();
        if (acc[k].get_den() != 1)
            throw NonIntegerCoefficients("interpolant has non-integer coefficient at degree " +
                                         std::to_string(k));
        out[k] = acc[k].get_num();
    }
    return IntPoly(std::move(out));
}

TruncatedSeries::TruncatedSeries(int truncation_degree) {
    if (truncation_degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
    coeffs_.assign(static_cast<size_t>(truncation_degree) + 1, kZero);
}

TruncatedSeries::TruncatedSeries(std::vector<mpz_class> coeffs, int truncation_degree)
    : coeffs_(std::move(coeffs)) {
    if (truncation_degree < 0 || coeffs_.size() != static_cast<size_t>(truncation_degree) + 1)
        throw std::invalid_argument("series must store exactly truncation_degree + 1 coefficients");
}

TruncatedSeries TruncatedSeries::truncation_of(const IntPoly& p, int truncation_degree) {
    TruncatedSeries s(truncation_degree);
    for (int k = 0; k <= truncation_degree; ++k) s.coeff(k) = p.coeff(k);
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation_degree() != b.truncation_degree())
        throw std::invalid_argument("series arithmetic requires equal truncation degree");
    TruncatedSeries r(a.truncation_degree());
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation_degree() != b.truncation_degree())
        throw std::invalid_argument("series arithmetic requires equal truncation degree");
    TruncatedSeries r(a.truncation_degree());
    const size_t len = r.coeffs_.size();
    for (size_t i = 0; i < len; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; i + j < len; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TruncatedSeries series_rational(const IntPoly& numer, const std::vector<int>& denom_exponents,
                                int N) {
    if (N < 0) throw std::invalid_argument("series degree must be >= 0");
    for (int k : denom_exponents)
        if (k < 1) throw std::invalid_argument("denominator exponents must be >= 1");
    TruncatedSeries s = TruncatedSeries::truncation_of(numer, N);
    for (int k : denom_exponents)
        for (int i = k; i <= N; ++i) s.coeff(i) += s.coeff(i - k);
    return s;
}

}  // namespace pedlab
