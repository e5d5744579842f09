#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace pedlab {

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. Canonical form: the last stored coefficient is nonzero, or
/// the coefficient vector is empty (the zero polynomial). All constructors
/// normalize, so equality is structural.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const mpz_class& v);
    static IntPoly monomial(const mpz_class& coeff, int degree);
    static IntPoly variable();  // the polynomial q

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 stands in for the -infinity degree of the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of q^k; zero outside the stored range.
    const mpz_class& coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    bool operator==(const IntPoly&) const = default;

    /// Horner evaluation at an integer point.
    mpz_class eval(const mpz_class& x) const;

    /// Ascending-power human form, e.g. "1 + q + 2*q^2"; "0" for zero.
    std::string to_text() const;

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

/// Quotient a / b when it is exact over the integers; throws NotDivisible
/// when the remainder is nonzero or a leading-coefficient division fails.
IntPoly poly_exact_div(const IntPoly& a, const IntPoly& b);

/// The unique polynomial of degree < #points through the given points, when
/// its coefficients are integers; throws NonIntegerCoefficients otherwise.
/// Newton divided differences with exact rational intermediates.
IntPoly poly_interpolate(const std::vector<std::pair<mpz_class, mpz_class>>& points);

/// Power series truncated at a fixed degree N (coefficients of q^0..q^N).
/// Arithmetic requires both operands to share the truncation degree.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int truncation_degree);
    TruncatedSeries(std::vector<mpz_class> coeffs, int truncation_degree);
    static TruncatedSeries truncation_of(const IntPoly& p, int truncation_degree);

    int truncation_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
    mpz_class& coeff(int k) { return coeffs_[static_cast<size_t>(k)]; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<mpz_class> coeffs_;  // always truncation_degree + 1 entries
};

/// Expansion of numer / prod_k (1 - q^k) to degree N, one factor per entry of
/// denom_exponents (each >= 1). Division by (1 - q^k) is a running prefix sum
/// with stride k.
TruncatedSeries series_rational(const IntPoly& numer, const std::vector<int>& denom_exponents,
                                int N);

}  // namespace pedlab
