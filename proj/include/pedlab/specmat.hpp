#pragma once

#include <string>
#include <vector>

#include "pedlab/intpoly.hpp"
#include "pedlab/pedestal.hpp"
#include "pedlab/poset.hpp"

namespace pedlab {

/// Square matrix over integer polynomials indexed by the linear extensions of
/// a poset in canonical order; entry (P,Q) is q to the pedestal volume.
struct PedestalMatrix {
    int dim = 0;
    std::vector<std::vector<IntPoly>> entries;
    std::vector<LinearExtension> extension_index;
};

/// det(lambda*I - M) as a polynomial in lambda with IntPoly coefficients,
/// ascending: coeffs_in_lambda[j] multiplies lambda^j; monic.
struct CharPoly {
    std::vector<IntPoly> coeffs_in_lambda;

    int dim() const { return static_cast<int>(coeffs_in_lambda.size()) - 1; }
};

/// Multiset of polynomial eigenvalues; certified means the product of
/// (lambda - e) over all of them reproduces the characteristic polynomial
/// exactly.
struct EigenResult {
    std::vector<IntPoly> eigenvalues;
    bool certified = false;
};

PedestalMatrix pedestal_matrix(const Poset& p);

/// Exact characteristic polynomial by the fraction-free trace recursion,
/// cross-checked by integer determinant sampling at three points.
CharPoly char_poly(const PedestalMatrix& m);

/// Exact integer determinant by fraction-free elimination.
mpz_class int_determinant(std::vector<std::vector<mpz_class>> a);

/// Extracts the polynomial eigenvalues: finds integer roots with
/// multiplicities at an integer base point, lifts each to a power series in
/// (q - base), recenters, and certifies by repeated exact division of the
/// characteristic polynomial. Throws EigenExtractionFailed when no base point
/// yields a certified set.
EigenResult eigen_polynomials(const PedestalMatrix& m);

/// True iff eigen_polynomials certifies on the pedestal matrix of p. On
/// failure, stores the failure message in diagnostics when given.
bool verify_integer_eigenvalues(const Poset& p, std::string* diagnostics = nullptr);

/// Product form over the small standard factors (powers of 1-q, 1+q,
/// 1+q+q^2, ...), e.g. "(1-q)^2*(1+q+q^2)"; empty string when the polynomial
/// does not factor over that dictionary.
std::string factored_display(const IntPoly& e);

}  // namespace pedlab
