#pragma once

#include "scg/linalg.hpp"

#include <vector>

namespace scg {

// A quadratic space in characteristic 2: phi upper triangular, the value of
// the form at v is v phi v^T, and bil = phi + phi^T is the (alternating)
// polarization. Spaces built from the standard tridiagonal family keep their
// defining scalars so closed-form paths apply.
struct QuadraticSpace {
    const Field* F = nullptr;
    int d = 0;
    Mat phi;
    Mat bil;
    std::vector<fel> scalars;  // empty unless built by build_phi
};

// Line classification by the number of singular projective points:
// 0, 1, 2, or q+1.
enum class LineClass { Asingular, Singular, Hyperbolic, TotallySingular };

// Diagonal 1, superdiagonal the given scalars (all nonzero), zero elsewhere.
QuadraticSpace build_phi(const Field& f, const std::vector<fel>& scalars);

// Wrap an arbitrary upper-triangular form matrix.
QuadraticSpace space_from_phi(const Field& f, const Mat& phi);

fel eval_phi(const QuadraticSpace& s, const Mat& v);
fel eval_bil(const QuadraticSpace& s, const Mat& u, const Mat& v);

// Basis of the nullspace of bil (row convention). Empty for even d in the
// tridiagonal family, one vector for odd d.
std::vector<Mat> radical(const QuadraticSpace& s);

// z = (1, 0, b_1, 0, ..., 0, b_m) with b_s the alternating partial products
// of the scalars; spans the radical for odd d.
Mat radical_closed_form(const Field& f, const std::vector<fel>& scalars);

// Whether the form vanishes on the (odd-d) radical.
bool radical_is_singular(const QuadraticSpace& s);

LineClass classify_line(const QuadraticSpace& s, const Mat& u, const Mat& w);

// One projective representative (leading coefficient 1) per point of the
// span of the given vectors. Deterministic order.
std::vector<Mat> projective_points_of_span(const Field& f, const std::vector<Mat>& spanning);
std::vector<Mat> projective_points(const Field& f, int d);

struct HyperbolicPair {
    Mat e, f;
};

// Pairs with (e_i, f_j) = delta_ij and (e_i, e_j) = (f_i, f_j) = 0.
// Tridiagonal-family spaces take the explicit symplectic sweep (e_1 = v_1,
// e_i = v_{2i-1} + (a_{2i-2}/a_{2i-3}) e_{i-1}, f_i = v_{2i}/a_{2i-1});
// other spaces use greedy hyperbolic-pair extraction. Requires even d and
// nondegenerate bil.
std::vector<HyperbolicPair> hyperbolic_basis(const QuadraticSpace& s);

// 0 if the sum of phi(e_i) phi(f_i) lands in N, else 1. Even d, nondegenerate.
int arf(const QuadraticSpace& s);

// '+' when arf is 0, '-' when arf is 1.
char witt_type(const QuadraticSpace& s);

// Exact isometry tests: g preserves phi iff g phi g^T + phi is alternating;
// g preserves bil iff g bil g^T = bil.
bool is_phi_isometry(const QuadraticSpace& s, const Mat& g);
bool is_bil_isometry(const QuadraticSpace& s, const Mat& g);

}  // namespace scg
