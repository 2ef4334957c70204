#include "scg/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace scg {

QuadraticSpace build_phi(const Field& f, const std::vector<fel>& scalars) {
    int d = static_cast<int>(scalars.size()) + 1;
    if (d < 2) throw std::invalid_argument("build_phi: need at least one scalar");
    for (fel a : scalars) {
        if (a == 0 || a >= f.q()) throw std::invalid_argument("build_phi: scalars must be nonzero field elements");
    }
    QuadraticSpace s;
    s.F = &f;
    s.d = d;
    s.phi = Mat(f, d, d);
    for (int i = 0; i < d; ++i) s.phi.at(i, i) = 1;
    for (int i = 0; i + 1 < d; ++i) s.phi.at(i, i + 1) = scalars[static_cast<std::size_t>(i)];
    s.bil = mat_add(s.phi, transpose(s.phi));
    s.scalars = scalars;
    return s;
}

QuadraticSpace space_from_phi(const Field& f, const Mat& phi) {
    if (phi.rows != phi.cols) throw std::invalid_argument("space_from_phi: form matrix must be square");
    for (int i = 0; i < phi.rows; ++i)
        for (int j = 0; j < i; ++j)
            if (phi.at(i, j) != 0) throw std::invalid_argument("space_from_phi: form matrix must be upper triangular");
    QuadraticSpace s;
    s.F = &f;
    s.d = phi.rows;
    s.phi = phi;
    s.bil = mat_add(phi, transpose(phi));
    return s;
}

fel eval_phi(const QuadraticSpace& s, const Mat& v) {
    if (v.rows != 1 || v.cols != s.d) throw std::invalid_argument("eval_phi: expected a row vector of matching dimension");
    const Field& F = *s.F;
    fel acc = 0;
    for (int i = 0; i < s.d; ++i) {
        if (v.at(0, i) == 0) continue;
        for (int j = i; j < s.d; ++j) {
            fel p = s.phi.at(i, j);
            if (p == 0) continue;
            acc = F.add(acc, F.mul(F.mul(v.at(0, i), p), v.at(0, j)));
        }
    }
    return acc;
}

fel eval_bil(const QuadraticSpace& s, const Mat& u, const Mat& v) {
    if (u.rows != 1 || v.rows != 1 || u.cols != s.d || v.cols != s.d)
        throw std::invalid_argument("eval_bil: expected row vectors of matching dimension");
    const Field& F = *s.F;
    fel acc = 0;
    for (int i = 0; i < s.d; ++i) {
        if (u.at(0, i) == 0) continue;
        for (int j = 0; j < s.d; ++j) {
            fel b = s.bil.at(i, j);
            if (b == 0 || v.at(0, j) == 0) continue;
            acc = F.add(acc, F.mul(F.mul(u.at(0, i), b), v.at(0, j)));
        }
    }
    return acc;
}

std::vector<Mat> radical(const QuadraticSpace& s) {
    return left_nullspace(s.bil);
}

Mat radical_closed_form(const Field& f, const std::vector<fel>& scalars) {
    int d = static_cast<int>(scalars.size()) + 1;
    if (d % 2 == 0) throw std::invalid_argument("radical_closed_form: dimension must be odd");
    Mat z(f, 1, d);
    z.at(0, 0) = 1;
    fel beta = 1;
    for (int srow = 1; 2 * srow < d; ++srow) {
        // beta_s = prod_{i<=s} a_{2i-1} / a_{2i}, 1-indexed scalars
        fel num = scalars[static_cast<std::size_t>(2 * srow - 2)];
        fel den = scalars[static_cast<std::size_t>(2 * srow - 1)];
        beta = f.mul(beta, f.div(num, den));
        z.at(0, 2 * srow) = beta;
    }
    return z;
}

bool radical_is_singular(const QuadraticSpace& s) {
    if (s.d % 2 == 0) throw std::invalid_argument("radical_is_singular: dimension must be odd");
    std::vector<Mat> rad = radical(s);
    if (rad.empty()) throw std::logic_error("radical_is_singular: odd-dimensional alternating form with trivial radical");
    for (const Mat& p : projective_points_of_span(*s.F, rad)) {
        if (eval_phi(s, p) == 0) return true;
    }
    return false;
}

std::vector<Mat> projective_points_of_span(const Field& f, const std::vector<Mat>& spanning) {
    if (spanning.empty()) return {};
    int d = spanning.front().cols;
    Mat stack(f, static_cast<int>(spanning.size()), d);
    for (int i = 0; i < stack.rows; ++i) {
        const Mat& v = spanning[static_cast<std::size_t>(i)];
        if (v.rows != 1 || v.cols != d) throw std::invalid_argument("projective_points_of_span: expected row vectors of equal dimension");
        for (int j = 0; j < d; ++j) stack.at(i, j) = v.at(0, j);
    }
    Mat rref = row_space_basis(stack);
    int m = rref.rows;
    std::vector<Mat> basis;
    basis.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Mat v(f, 1, d);
        for (int j = 0; j < d; ++j) v.at(0, j) = rref.at(i, j);
        basis.push_back(v);
    }
    std::vector<Mat> points;
    // one representative per point: first nonzero coordinate (in basis
    // order) equal to 1, remaining coordinates run through the field
    for (int lead = 0; lead < m; ++lead) {
        int free = m - lead - 1;
        std::vector<fel> c(static_cast<std::size_t>(free), 0);
        while (true) {
            Mat p = basis[static_cast<std::size_t>(lead)];
            for (int t = 0; t < free; ++t) {
                fel ct = c[static_cast<std::size_t>(t)];
                if (ct == 0) continue;
                const Mat& b = basis[static_cast<std::size_t>(lead + 1 + t)];
                for (int j = 0; j < d; ++j) p.at(0, j) = f.add(p.at(0, j), f.mul(ct, b.at(0, j)));
            }
            points.push_back(p);
            int t = free - 1;
            while (t >= 0) {
                fel& ct = c[static_cast<std::size_t>(t)];
                ++ct;
                if (ct < f.q()) break;
                ct = 0;
                --t;
            }
            if (t < 0) break;
        }
    }
    return points;
}

std::vector<Mat> projective_points(const Field& f, int d) {
    std::vector<Mat> basis;
    for (int i = 0; i < d; ++i) {
        Mat e(f, 1, d);
        e.at(0, i) = 1;
        basis.push_back(e);
    }
    return projective_points_of_span(f, basis);
}

LineClass classify_line(const QuadraticSpace& s, const Mat& u, const Mat& w) {
    Mat stack(*s.F, 2, s.d);
    for (int j = 0; j < s.d; ++j) {
        stack.at(0, j) = u.at(0, j);
        stack.at(1, j) = w.at(0, j);
    }
    if (rank(stack) != 2) throw std::invalid_argument("classify_line: vectors do not span a line");
    int singular = 0;
    std::vector<Mat> pts = projective_points_of_span(*s.F, {u, w});
    for (const Mat& p : pts) {
        if (eval_phi(s, p) == 0) ++singular;
    }
    if (singular == 0) return LineClass::Asingular;
    if (singular == 1) return LineClass::Singular;
    if (singular == 2) return LineClass::Hyperbolic;
    if (singular == static_cast<int>(pts.size())) return LineClass::TotallySingular;
    throw std::logic_error("classify_line: impossible singular point count");
}

namespace {

// Greedy extraction for spaces without the tridiagonal structure: peel off
// one pair at a time and project the working basis onto its perp.
std::vector<HyperbolicPair> hyperbolic_pairs_greedy(const QuadraticSpace& s) {
    const Field& F = *s.F;
    std::vector<Mat> work;
    for (int i = 0; i < s.d; ++i) {
        Mat e(F, 1, s.d);
        e.at(0, i) = 1;
        work.push_back(e);
    }
    std::vector<HyperbolicPair> pairs;
    while (!work.empty()) {
        Mat u = work.front();
        int j = -1;
        for (int t = 1; t < static_cast<int>(work.size()); ++t) {
            if (eval_bil(s, u, work[static_cast<std::size_t>(t)]) != 0) { j = t; break; }
        }
        if (j < 0) throw std::domain_error("hyperbolic_basis: form is degenerate");
        Mat w = work[static_cast<std::size_t>(j)];
        fel c = F.inv(eval_bil(s, u, w));
        for (int t = 0; t < s.d; ++t) w.at(0, t) = F.mul(w.at(0, t), c);
        pairs.push_back({u, w});
        std::vector<Mat> next;
        for (int t = 1; t < static_cast<int>(work.size()); ++t) {
            if (t == j) continue;
            Mat x = work[static_cast<std::size_t>(t)];
            fel cu = eval_bil(s, x, w);  // coefficient on u
            fel cw = eval_bil(s, x, u);  // coefficient on w
            for (int p = 0; p < s.d; ++p) {
                x.at(0, p) = F.add(x.at(0, p), F.add(F.mul(cu, u.at(0, p)), F.mul(cw, w.at(0, p))));
            }
            next.push_back(x);
        }
        work = std::move(next);
    }
    return pairs;
}

}  // namespace

std::vector<HyperbolicPair> hyperbolic_basis(const QuadraticSpace& s) {
    if (s.d % 2 != 0) throw std::invalid_argument("hyperbolic_basis: dimension must be even");
    if (!radical(s).empty()) throw std::domain_error("hyperbolic_basis: form is degenerate");
    const Field& F = *s.F;
    if (s.scalars.empty()) return hyperbolic_pairs_greedy(s);
    // tridiagonal sweep; the odd basis vectors stay mutually orthogonal so
    // each corrected e_i pairs only with its own f_i
    std::vector<HyperbolicPair> pairs;
    Mat prev_e(F, 1, s.d);
    for (int i = 1; 2 * i <= s.d; ++i) {
        Mat e(F, 1, s.d);
        e.at(0, 2 * i - 2) = 1;  // v_{2i-1}
        if (i > 1) {
            fel c = F.div(s.scalars[static_cast<std::size_t>(2 * i - 3)],
                          s.scalars[static_cast<std::size_t>(2 * i - 4)]);
            for (int j = 0; j < s.d; ++j) e.at(0, j) = F.add(e.at(0, j), F.mul(c, prev_e.at(0, j)));
        }
        Mat f(F, 1, s.d);
        f.at(0, 2 * i - 1) = F.inv(s.scalars[static_cast<std::size_t>(2 * i - 2)]);  // v_{2i}/a_{2i-1}
        pairs.push_back({e, f});
        prev_e = e;
    }
    return pairs;
}

int arf(const QuadraticSpace& s) {
    const Field& F = *s.F;
    fel acc = 0;
    for (const HyperbolicPair& p : hyperbolic_basis(s)) {
        acc = F.add(acc, F.mul(eval_phi(s, p.e), eval_phi(s, p.f)));
    }
    return F.in_artin_schreier_N(acc) ? 0 : 1;
}

char witt_type(const QuadraticSpace& s) {
    return arf(s) == 0 ? '+' : '-';
}

bool is_phi_isometry(const QuadraticSpace& s, const Mat& g) {
    if (g.rows != s.d || g.cols != s.d) throw std::invalid_argument("is_phi_isometry: dimension mismatch");
    // phi(vg) = phi(v) for all v iff g phi g^T + phi is alternating
    Mat m = mat_add(mat_mul(mat_mul(g, s.phi), transpose(g)), s.phi);
    for (int i = 0; i < s.d; ++i) {
        if (m.at(i, i) != 0) return false;
        for (int j = i + 1; j < s.d; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    }
    return true;
}

bool is_bil_isometry(const QuadraticSpace& s, const Mat& g) {
    if (g.rows != s.d || g.cols != s.d) throw std::invalid_argument("is_bil_isometry: dimension mismatch");
    return mat_mul(mat_mul(g, s.bil), transpose(g)) == s.bil;
}

}  // namespace scg
