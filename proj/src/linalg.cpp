#include "scg/linalg.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace scg {
namespace {

void require_same_field(const Mat& x, const Mat& y) {
    if (!x.F || !y.F || x.F->k() != y.F->k())
        throw std::invalid_argument("matrix operands belong to different fields");
}

// Row-reduce rows of m in place; returns rank. When track != nullptr it
// receives the same row operations (used for nullspace bookkeeping).
int row_reduce(Mat& m, Mat* track) {
    const Field& f = *m.F;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        if (track)
            for (int j = 0; j < track->cols; ++j)
                std::swap(track->at(p, j), track->at(r, j));
        fel s = f.inv(m.at(r, c));
        if (s != 1) {
            for (int j = 0; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
            if (track)
                for (int j = 0; j < track->cols; ++j)
                    track->at(r, j) = f.mul(track->at(r, j), s);
        }
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            fel t = m.at(i, c);
            if (!t) continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = f.add(m.at(i, j), f.mul(t, m.at(r, j)));
            if (track)
                for (int j = 0; j < track->cols; ++j)
                    track->at(i, j) = f.add(track->at(i, j), f.mul(t, track->at(r, j)));
        }
        ++r;
    }
    return r;
}

}  // namespace

Mat identity(const Field& f, int d) {
    Mat m(f, d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

Mat row_vector(const Field& f, std::initializer_list<unsigned> entries) {
    Mat v(f, 1, (int)entries.size());
    int j = 0;
    for (unsigned e : entries) {
        if (e >= f.q()) throw std::invalid_argument("entry outside the field");
        v.at(0, j++) = (fel)e;
    }
    return v;
}

Mat row_vector(const Field& f, const std::vector<fel>& entries) {
    Mat v(f, 1, (int)entries.size());
    for (size_t j = 0; j < entries.size(); ++j) {
        if (entries[j] >= f.q()) throw std::invalid_argument("entry outside the field");
        v.at(0, (int)j) = entries[j];
    }
    return v;
}

Mat mat_add(const Mat& x, const Mat& y) {
    require_same_field(x, y);
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("matrix sum shape mismatch");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] ^= y.a[i];
    return r;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    require_same_field(x, y);
    if (x.cols != y.rows)
        throw std::invalid_argument("matrix product shape mismatch");
    const Field& f = *x.F;
    Mat r(f, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int t = 0; t < x.cols; ++t) {
            fel v = x.at(i, t);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) ^= f.mul(v, y.at(t, j));
        }
    return r;
}

Mat transpose(const Mat& x) {
    Mat r(*x.F, x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

bool is_identity(const Mat& x) {
    if (x.rows != x.cols) return false;
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            if (x.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool is_zero(const Mat& x) {
    for (fel v : x.a)
        if (v) return false;
    return true;
}

Mat inverse(const Mat& x) {
    if (x.rows != x.cols) throw std::invalid_argument("inverse of non-square matrix");
    Mat m = x;
    Mat inv = identity(*x.F, x.rows);
    if (row_reduce(m, &inv) != x.rows) throw std::domain_error("singular matrix");
    return inv;
}

int rank(const Mat& x) {
    Mat m = x;
    return row_reduce(m, nullptr);
}

Mat row_space_basis(const Mat& x) {
    Mat m = x;
    int r = row_reduce(m, nullptr);
    Mat b(*x.F, r, x.cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < x.cols; ++j) b.at(i, j) = m.at(i, j);
    return b;
}

std::vector<Mat> left_nullspace(const Mat& x) {
    const Field& f = *x.F;
    Mat m = x;
    Mat track = identity(f, x.rows);
    int r = row_reduce(m, &track);
    // Tracking rows past the rank are the dependencies among the rows of x,
    // i.e. exactly {v : v x = 0}. Re-reduce them so the basis is canonical
    // regardless of pivot choices.
    std::vector<Mat> basis;
    if (r < x.rows) {
        Mat stacked(f, x.rows - r, x.rows);
        for (int i = r; i < x.rows; ++i)
            for (int j = 0; j < x.rows; ++j) stacked.at(i - r, j) = track.at(i, j);
        Mat reduced = row_space_basis(stacked);
        for (int i = 0; i < reduced.rows; ++i) {
            Mat v(f, 1, x.rows);
            for (int j = 0; j < x.rows; ++j) v.at(0, j) = reduced.at(i, j);
            basis.push_back(v);
        }
    }
    return basis;
}

std::vector<Mat> nullspace(const Mat& x) {
    if (x.rows != x.cols) throw std::invalid_argument("nullspace expects a square matrix");
    return left_nullspace(x);
}

long element_order(const Mat& x, long cap) {
    if (x.rows != x.cols) throw std::invalid_argument("order of non-square matrix");
    if (rank(x) != x.rows) throw std::invalid_argument("order of singular matrix");
    Mat p = x;
    for (long n = 1; n <= cap; ++n) {
        if (is_identity(p)) return n;
        p = mat_mul(p, x);
    }
    throw std::domain_error("element order exceeds cap");
}

std::string format_matrix(const Mat& x) {
    std::ostringstream out;
    for (int i = 0; i < x.rows; ++i) {
        if (i) out << ';';
        for (int j = 0; j < x.cols; ++j) {
            if (j) out << ',';
            out << (unsigned)x.at(i, j);
        }
    }
    return out.str();
}

Mat parse_matrix(const Field& f, const std::string& text) {
    std::vector<std::vector<fel>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<fel> entries;
        std::stringstream rs(row);
        std::string cell;
        while (std::getline(rs, cell, ',')) {
            size_t pos = 0;
            unsigned long v;
            try {
                v = std::stoul(cell, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("matrix text: bad entry '" + cell + "'");
            }
            while (pos < cell.size() && std::isspace((unsigned char)cell[pos])) ++pos;
            if (pos != cell.size())
                throw std::invalid_argument("matrix text: bad entry '" + cell + "'");
            if (v >= f.q())
                throw std::invalid_argument("matrix text: entry outside the field");
            entries.push_back((fel)v);
        }
        if (entries.empty()) throw std::invalid_argument("matrix text: empty row");
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw std::invalid_argument("matrix text: empty");
    for (const auto& r : rows)
        if (r.size() != rows[0].size())
            throw std::invalid_argument("matrix text: ragged rows");
    Mat m(f, (int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

int key_bits_per_entry(const Field& f) {
    int k = f.k();
    if (k <= 2) return 2;
    if (k <= 4) return 4;
    if (k <= 8) return 8;
    return 16;
}

MatKey pack_key(const Mat& x) {
    if (x.rows != x.cols) throw std::invalid_argument("keys encode square matrices");
    int b = key_bits_per_entry(*x.F);
    size_t n = x.a.size();
    if (n * b > 256) throw std::domain_error("matrix too large for the canonical encoding");
    MatKey key;
    for (size_t t = 0; t < n; ++t) {
        size_t pos = t * b;
        key.w[pos >> 6] |= (std::uint64_t)x.a[t] << (pos & 63);
    }
    return key;
}

Mat unpack_key(const Field& f, int d, const MatKey& key) {
    int b = key_bits_per_entry(f);
    std::uint64_t mask = (b == 64) ? ~0ull : ((1ull << b) - 1);
    Mat m(f, d, d);
    for (size_t t = 0; t < m.a.size(); ++t) {
        size_t pos = t * b;
        m.a[t] = (fel)((key.w[pos >> 6] >> (pos & 63)) & mask);
    }
    return m;
}

bool key_less(const MatKey& x, const MatKey& y) {
    for (int i = 0; i < 32; ++i) {
        unsigned a = (unsigned)(x.w[i >> 3] >> ((i & 7) * 8)) & 0xff;
        unsigned b = (unsigned)(y.w[i >> 3] >> ((i & 7) * 8)) & 0xff;
        if (a != b) return a < b;
    }
    return false;
}

std::string key_hex(const MatKey& key, const Field& f, int d) {
    int b = key_bits_per_entry(f);
    int nbytes = (d * d * b + 7) / 8;
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(2 * nbytes);
    for (int i = 0; i < nbytes; ++i) {
        unsigned byte = (unsigned)(key.w[i >> 3] >> ((i & 7) * 8)) & 0xff;
        s.push_back(digits[byte >> 4]);
        s.push_back(digits[byte & 0xf]);
    }
    return s;
}

}  // namespace scg
