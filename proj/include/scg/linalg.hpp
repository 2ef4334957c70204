#pragma once

#include "scg/field.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace scg {

// Dense row-major matrix over one field. Vectors are 1 x d matrices and act
// on the right of square matrices (row convention). Values are immutable by
// convention once handed to another component.
struct Mat {
    const Field* F = nullptr;
    int rows = 0, cols = 0;
    std::vector<fel> a;

    Mat() = default;
    Mat(const Field& f, int r, int c)
        : F(&f), rows(r), cols(c), a((size_t)r * c, 0) {}

    fel& at(int r, int c) { return a[(size_t)r * cols + c]; }
    fel at(int r, int c) const { return a[(size_t)r * cols + c]; }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

Mat identity(const Field& f, int d);
Mat row_vector(const Field& f, std::initializer_list<unsigned> entries);
Mat row_vector(const Field& f, const std::vector<fel>& entries);

Mat mat_add(const Mat& x, const Mat& y);
Mat mat_mul(const Mat& x, const Mat& y);
Mat transpose(const Mat& x);
bool is_identity(const Mat& x);
bool is_zero(const Mat& x);

// Gauss-Jordan over the field; throws std::domain_error if singular.
Mat inverse(const Mat& x);

int rank(const Mat& x);

// Reduced row echelon form of the rows of x (canonical basis of the row space).
Mat row_space_basis(const Mat& x);

// Basis of {v : v x = 0} as 1 x rows vectors, in reduced echelon form.
// Empty when x has full row rank. Any shape accepted.
std::vector<Mat> left_nullspace(const Mat& x);

// Square-matrix wrapper matching the row-vector convention used throughout.
std::vector<Mat> nullspace(const Mat& x);

// Least n >= 1 with x^n = I; throws std::domain_error above cap.
long element_order(const Mat& x, long cap = 1000000);

// Text form: rows joined by ';', entries by ',', each entry the decimal bit
// pattern of the field element. Example over GF(4): "1,2;2,3".
std::string format_matrix(const Mat& x);
Mat parse_matrix(const Field& f, const std::string& text);

// Canonical fixed-width encoding for set semantics and face labels: entries
// row-major, each packed into 2, 4, 8, or 16 bits (smallest that holds the
// field), little-endian within the byte sequence. 256 bits total; encodable
// matrices must satisfy d*d*bits <= 256. Ordering is lexicographic on the
// byte sequence.
struct MatKey {
    std::array<std::uint64_t, 4> w{};
    bool operator==(const MatKey&) const = default;
};

int key_bits_per_entry(const Field& f);
MatKey pack_key(const Mat& x);
Mat unpack_key(const Field& f, int d, const MatKey& key);
bool key_less(const MatKey& x, const MatKey& y);
std::string key_hex(const MatKey& key, const Field& f, int d);

struct MatKeyHash {
    std::size_t operator()(const MatKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t v : k.w) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
            h ^= h >> 33;
        }
        return (std::size_t)h;
    }
};

}  // namespace scg
