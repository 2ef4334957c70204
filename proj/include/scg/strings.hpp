#pragma once

#include "scg/forms.hpp"

#include <vector>

namespace scg {

enum class StringKind { OrthPlus, OrthMinus, SymplecticOddRank, Sp4Rank4 };

// A generating string: the space it acts on, the involutions in order, and
// how they were chosen.
struct GeneratorString {
    QuadraticSpace space;
    std::vector<Mat> gens;
    std::vector<fel> scalars;  // tridiagonal family only
    StringKind kind = StringKind::OrthPlus;
    fel alpha = 0;  // Sp4Rank4 only
};

// The symmetry attached to a vector x with phi(x) != 0:
// v -> v + (bil(v, x)/phi(x)) x. Involution, preserves phi.
Mat symmetry(const QuadraticSpace& s, const Mat& x);

// One symmetry per projective point of the span with phi != 0.
std::vector<Mat> symmetries_of_span(const QuadraticSpace& s, const std::vector<Mat>& spanning);

// A0: nonzero b whose inverse has nonzero trace.
std::vector<fel> scalar_set_A0(const Field& f);

// H_b = [[1,b],[b,1+b^2]].
Mat scalar_H(const Field& f, fel b);

// A: members of A0 whose H matrix has order exactly q+1.
std::vector<fel> scalar_set_A(const Field& f);

// One symmetry per basis vector of a tridiagonal-family space whose scalars
// all lie in A.
GeneratorString build_string_generators(const QuadraticSpace& s);

// Lexicographically least (lambda, mu) with scalar pattern
// (lambda, mu, ..., mu, lambda) giving the requested type ('+' or '-').
// Even d >= 2, q >= 4.
std::vector<fel> choose_scalars_for_type(const Field& f, int d, char type);

// All entries min(A) except the last, which is the least member of A making
// the radical nonsingular. Odd d >= 3, q >= 4.
std::vector<fel> choose_scalars_symplectic(const Field& f, int d);

// Least b with [[0,1],[1,b^2]] of order q+1; the scalar behind the rank-4
// symplectic string.
fel sp4_alpha(const Field& f);

// The 4-dimensional space carrying the rank-4 symplectic string.
QuadraticSpace sp4_space(const Field& f);

// Fixed rank-4 string (sigma_u, rho, sigma_w, tau) over GF(q), q >= 4.
// tau preserves bil but not phi; the other three preserve both.
GeneratorString build_sp4_rank4(const Field& f);

}  // namespace scg
