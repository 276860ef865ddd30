#pragma once

// Exact spectra of the compressed-graph adjacency matrices.
//
// charpoly_exact computes det(lambda*I - M) with the division-free
// Berkowitz iteration; closed_form_charpoly builds the same polynomial
// from the coefficient rule b_k = C(floor((n-1+k)/2), k) with sign
// (-1)^floor((k+1)/2); schur_check evaluates det(M - lambda*I) through a
// block Schur complement in exact rational arithmetic and compares it
// against substitution into the Berkowitz polynomial.
//
// No floating point anywhere; all coefficients are arbitrary precision.

#include "zdg/zdgraph.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zdg {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial over Z. Coefficients ascending by degree;
// trailing zeros are trimmed, the zero polynomial stores a single 0.
class IntPolynomial {
public:
    IntPolynomial() : coeffs_{Int(0)} {}
    explicit IntPolynomial(std::vector<Int> coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    const Int& coeff(int k) const;  // zero beyond the degree
    bool is_zero() const;

    /// Exact evaluation at a rational point (Horner).
    Rat eval(const Rat& x) const;

    std::string to_string(std::string_view var = "x") const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<Int> coeffs_;
};

/// C(a, b), exact at any size; 0 when b > a.
Int binomial(std::uint64_t a, std::uint64_t b);

/// det(lambda*I - M), monic, exact integer coefficients. Order >= 1.
IntPolynomial charpoly_exact(const IntMatrix& m);

// Coefficient data for order n-1: p_k = floor((n-1+k)/2), b_k = C(p_k, k),
// s_k = (-1)^floor((k+1)/2) (the pattern -,-,+,+,-,-,...), k = 1..n-1.
struct ClosedFormCoefficients {
    int n = 0;
    std::vector<Int> b;
    std::vector<int> p;
    std::vector<int> s;
};

ClosedFormCoefficients closed_form_coefficients(int n);

/// Monic degree-(n-1) polynomial with coefficient s_k * b_k at
/// lambda^(n-1-k). Agrees with charpoly_exact on the loops-on matrix of
/// build_compressed_prime_power(n). Throws std::invalid_argument for n < 2.
IntPolynomial closed_form_charpoly(int n);

/// Coefficient-magnitude rows (1, b_1, ..., b_{n-1}) for n = 2..max_n.
std::vector<std::vector<Int>> coefficient_triangle(int max_n);

/// One row per n, magnitudes comma-separated, newline-terminated rows.
std::string triangle_csv(const std::vector<std::vector<Int>>& rows);

/// Evaluates det(M - lambda*I) two independent ways for the order-(n-1)
/// loops-on matrix: (a) (-1)^(n-1) times the Berkowitz polynomial at
/// lambda, (b) |A| * |D - C A^{-1} B| with the block split at
/// floor((n-1)/2), where A = -lambda*I. True iff the values agree exactly.
/// Requires n >= 4 and lambda != 0.
bool schur_check(int n, const Rat& lambda);

/// {"n": int, "degree": int, "coeffs": [ascending decimal strings]}
std::string polynomial_json(const IntPolynomial& p);

}  // namespace zdg
