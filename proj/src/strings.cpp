#include "scg/strings.hpp"

#include <algorithm>
#include <stdexcept>

namespace scg {

Mat symmetry(const QuadraticSpace& s, const Mat& x) {
    if (x.rows != 1 || x.cols != s.d) throw std::invalid_argument("symmetry: expected a row vector of matching dimension");
    const Field& F = *s.F;
    fel px = eval_phi(s, x);
    if (px == 0) throw std::domain_error("symmetry: vector is singular");
    fel c = F.inv(px);
    Mat m = identity(F, s.d);
    for (int i = 0; i < s.d; ++i) {
        Mat ei(F, 1, s.d);
        ei.at(0, i) = 1;
        fel coef = F.mul(c, eval_bil(s, ei, x));
        if (coef == 0) continue;
        for (int j = 0; j < s.d; ++j) {
            m.at(i, j) = F.add(m.at(i, j), F.mul(coef, x.at(0, j)));
        }
    }
    return m;
}

std::vector<Mat> symmetries_of_span(const QuadraticSpace& s, const std::vector<Mat>& spanning) {
    std::vector<Mat> out;
    for (const Mat& p : projective_points_of_span(*s.F, spanning)) {
        if (eval_phi(s, p) != 0) out.push_back(symmetry(s, p));
    }
    return out;
}

std::vector<fel> scalar_set_A0(const Field& f) {
    std::vector<fel> out;
    for (fel b = 1; b < f.q(); ++b) {
        if (!f.in_artin_schreier_N(f.inv(b))) out.push_back(b);
    }
    return out;
}

Mat scalar_H(const Field& f, fel b) {
    Mat h(f, 2, 2);
    h.at(0, 0) = 1;
    h.at(0, 1) = b;
    h.at(1, 0) = b;
    h.at(1, 1) = f.add(1, f.sq(b));
    return h;
}

std::vector<fel> scalar_set_A(const Field& f) {
    std::vector<fel> out;
    for (fel b : scalar_set_A0(f)) {
        bool ok = false;
        try {
            ok = element_order(scalar_H(f, b), 8u * (f.q() + 1)) == f.q() + 1;
        } catch (const std::domain_error&) {
            ok = false;
        }
        if (ok) out.push_back(b);
    }
    return out;
}

GeneratorString build_string_generators(const QuadraticSpace& s) {
    if (s.scalars.empty()) throw std::invalid_argument("build_string_generators: space must carry tridiagonal scalars");
    std::vector<fel> a = scalar_set_A(*s.F);
    for (fel c : s.scalars) {
        if (std::find(a.begin(), a.end(), c) == a.end())
            throw std::invalid_argument("build_string_generators: scalar outside the admissible set");
    }
    GeneratorString g;
    g.space = s;
    g.scalars = s.scalars;
    for (int i = 0; i < s.d; ++i) {
        Mat ei(*s.F, 1, s.d);
        ei.at(0, i) = 1;
        g.gens.push_back(symmetry(s, ei));
    }
    if (s.d % 2 == 1) {
        g.kind = StringKind::SymplecticOddRank;
    } else {
        g.kind = witt_type(s) == '+' ? StringKind::OrthPlus : StringKind::OrthMinus;
    }
    return g;
}

std::vector<fel> choose_scalars_for_type(const Field& f, int d, char type) {
    if (f.q() < 4) throw std::invalid_argument("choose_scalars_for_type: need q >= 4");
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("choose_scalars_for_type: dimension must be even and >= 2");
    if (type != '+' && type != '-') throw std::invalid_argument("choose_scalars_for_type: type must be '+' or '-'");
    std::vector<fel> a = scalar_set_A(f);
    if (d == 2) {
        for (fel lam : a) {
            std::vector<fel> sc{lam};
            if (witt_type(build_phi(f, sc)) == type) return sc;
        }
        throw std::invalid_argument("choose_scalars_for_type: no admissible scalar gives the requested type");
    }
    for (fel lam : a) {
        for (fel mu : a) {
            std::vector<fel> sc(static_cast<std::size_t>(d - 1), mu);
            sc.front() = lam;
            sc.back() = lam;
            if (witt_type(build_phi(f, sc)) == type) return sc;
        }
    }
    throw std::invalid_argument("choose_scalars_for_type: no admissible scalars give the requested type");
}

std::vector<fel> choose_scalars_symplectic(const Field& f, int d) {
    if (f.q() < 4) throw std::invalid_argument("choose_scalars_symplectic: need q >= 4");
    if (d < 3 || d % 2 != 1) throw std::invalid_argument("choose_scalars_symplectic: dimension must be odd and >= 3");
    std::vector<fel> a = scalar_set_A(f);
    std::vector<fel> sc(static_cast<std::size_t>(d - 1), a.front());
    for (fel last : a) {
        sc.back() = last;
        if (!radical_is_singular(build_phi(f, sc))) return sc;
    }
    throw std::invalid_argument("choose_scalars_symplectic: no admissible final scalar keeps the radical nonsingular");
}

fel sp4_alpha(const Field& f) {
    if (f.q() < 4) throw std::invalid_argument("sp4_alpha: need q >= 4");
    for (fel b = 1; b < f.q(); ++b) {
        Mat h(f, 2, 2);
        h.at(0, 1) = 1;
        h.at(1, 0) = 1;
        h.at(1, 1) = f.sq(b);
        try {
            if (element_order(h, 8u * (f.q() + 1)) == f.q() + 1) return b;
        } catch (const std::domain_error&) {
        }
    }
    throw std::invalid_argument("sp4_alpha: no scalar of the required order");
}

QuadraticSpace sp4_space(const Field& f) {
    fel a = sp4_alpha(f);
    fel ai = f.inv(a);
    Mat phi(f, 4, 4);
    phi.at(0, 0) = ai;
    phi.at(0, 1) = 1;
    phi.at(1, 3) = 1;
    phi.at(2, 2) = ai;
    phi.at(2, 3) = ai;
    phi.at(3, 3) = ai;
    return space_from_phi(f, phi);
}

GeneratorString build_sp4_rank4(const Field& f) {
    QuadraticSpace s = sp4_space(f);
    const Field& F = *s.F;
    fel a = sp4_alpha(f);
    GeneratorString g;
    g.space = s;
    g.kind = StringKind::Sp4Rank4;
    g.alpha = a;

    Mat su = identity(F, 4);
    su.at(1, 0) = a;

    Mat rho = identity(F, 4);
    rho.at(0, 1) = a;
    rho.at(0, 2) = a;
    rho.at(3, 1) = F.add(1, a);
    rho.at(3, 2) = a;

    Mat sw = identity(F, 4);
    sw.at(1, 3) = a;
    sw.at(2, 3) = 1;

    Mat tau = identity(F, 4);
    tau.at(3, 2) = a;

    g.gens = {su, rho, sw, tau};
    return g;
}

}  // namespace scg
