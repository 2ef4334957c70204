#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scg/linalg.hpp"

#include <stdexcept>

using namespace scg;

namespace {

// Small deterministic generator for reproducible random-matrix cases.
struct Rng {
    unsigned long long s = 0x243f6a8885a308d3ull;
    unsigned next(unsigned bound) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return (unsigned)((s >> 33) % bound);
    }
};

Mat random_matrix(const Field& f, int d, Rng& rng) {
    Mat m(f, d, d);
    for (auto& e : m.a) e = (fel)rng.next(f.q());
    return m;
}

Mat random_invertible(const Field& f, int d, Rng& rng) {
    for (;;) {
        Mat m = random_matrix(f, d, rng);
        if (rank(m) == d) return m;
    }
}

}  // namespace

TEST_CASE("product basics and shape checks") {
    Field f(2);
    Rng rng;
    Mat m = random_matrix(f, 3, rng);
    CHECK(mat_mul(identity(f, 3), m) == m);
    CHECK(mat_mul(m, identity(f, 3)) == m);

    // (1, w) * [[1,w],[0,1]] = (1, w+w) = (1, 0)
    Mat v = row_vector(f, {1, 2});
    Mat u = parse_matrix(f, "1,2;0,1");
    CHECK(mat_mul(v, u) == row_vector(f, {1, 0}));

    Mat a(f, 2, 3), b(f, 2, 2);
    CHECK_THROWS_AS(mat_mul(a, b), std::invalid_argument);

    Field f8(3);
    Mat c(f8, 2, 2);
    CHECK_THROWS_AS(mat_mul(b, c), std::invalid_argument);
}

TEST_CASE("product associativity on random triples") {
    Field f(2);
    Rng rng;
    for (int t = 0; t < 25; ++t) {
        Mat a = random_matrix(f, 4, rng);
        Mat b = random_matrix(f, 4, rng);
        Mat c = random_matrix(f, 4, rng);
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    }
}

TEST_CASE("inverse") {
    Field f(2);
    CHECK(inverse(identity(f, 3)) == identity(f, 3));

    // Unipotent in characteristic 2: self-inverse.
    Mat u = parse_matrix(f, "1,2;0,1");
    CHECK(inverse(u) == u);

    CHECK_THROWS_AS(inverse(Mat(f, 2, 2)), std::domain_error);
    CHECK_THROWS_AS(inverse(Mat(f, 2, 3)), std::invalid_argument);

    Field f8(3);
    Rng rng;
    for (int t = 0; t < 10; ++t) {
        Mat m = random_invertible(f8, 4, rng);
        CHECK(mat_mul(m, inverse(m)) == identity(f8, 4));
        CHECK(mat_mul(inverse(m), m) == identity(f8, 4));
    }
}

TEST_CASE("left nullspace") {
    Field f(2);
    CHECK(nullspace(identity(f, 3)).empty());

    auto z = nullspace(Mat(f, 2, 2));
    CHECK(z.size() == 2);

    // B = Phi(w,w) + Phi(w,w)^T in dimension 3: alternating tridiagonal.
    Mat b = parse_matrix(f, "0,2,0;2,0,2;0,2,0");
    auto ns = nullspace(b);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == row_vector(f, {1, 0, 1}));
    CHECK(is_zero(mat_mul(ns[0], b)));
    CHECK(rank(b) + (int)ns.size() == 3);

    Rng rng;
    for (int t = 0; t < 20; ++t) {
        Mat m = random_matrix(f, 4, rng);
        auto basis = left_nullspace(m);
        CHECK(rank(m) + (int)basis.size() == 4);
        for (const auto& v : basis) CHECK(is_zero(mat_mul(v, m)));
    }
}

TEST_CASE("element order") {
    Field f(2);
    CHECK(element_order(identity(f, 2)) == 1);

    // H_w = [[1,w],[w,1+w^2]] = [[1,2],[2,2]] over GF(4); order q+1 = 5.
    Mat h = parse_matrix(f, "1,2;2,2");
    CHECK(element_order(h) == 5);
    CHECK_THROWS_AS(element_order(h, 3), std::domain_error);

    Field f2(1);
    CHECK(element_order(parse_matrix(f2, "1,1;0,1")) == 2);
    CHECK_THROWS_AS(element_order(Mat(f, 2, 2)), std::invalid_argument);
}

TEST_CASE("text format round trip") {
    Field f(2);
    Mat m = parse_matrix(f, "1,2;2,3");
    CHECK(m.rows == 2);
    CHECK(m.at(1, 1) == 3);
    CHECK(format_matrix(m) == "1,2;2,3");
    CHECK(parse_matrix(f, format_matrix(m)) == m);

    CHECK_THROWS_AS(parse_matrix(f, "1,4;0,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix(f, "1,2;3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix(f, "1,x;0,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix(f, ""), std::invalid_argument);
}

TEST_CASE("canonical key encoding") {
    Field f4(2);
    // Entries 1,2,2,3 at two bits each: 1 | 2<<2 | 2<<4 | 3<<6 = 0xe9.
    Mat m = parse_matrix(f4, "1,2;2,3");
    MatKey key = pack_key(m);
    CHECK(key.w[0] == 0xe9u);
    CHECK(key_hex(key, f4, 2) == "e9");
    CHECK(unpack_key(f4, 2, key) == m);

    Field f8(3);
    // Four bits per entry: 1,5,3,7 -> bytes 0x51, 0x73.
    Mat n = parse_matrix(f8, "1,5;3,7");
    CHECK(key_hex(pack_key(n), f8, 2) == "5173");

    // Byte-lexicographic comparison, low byte first.
    Mat swp = parse_matrix(f4, "0,1;1,0");
    CHECK(key_less(pack_key(swp), pack_key(identity(f4, 2))));
    CHECK(!key_less(pack_key(m), pack_key(m)));

    Rng rng;
    for (int t = 0; t < 10; ++t) {
        Mat r = random_matrix(f4, 5, rng);
        CHECK(unpack_key(f4, 5, pack_key(r)) == r);
    }
    Field f256(8);
    for (int t = 0; t < 10; ++t) {
        Mat r = random_matrix(f256, 3, rng);
        CHECK(unpack_key(f256, 3, pack_key(r)) == r);
    }
    Field f64k(16);
    for (int t = 0; t < 10; ++t) {
        Mat r = random_matrix(f64k, 2, rng);
        CHECK(unpack_key(f64k, 2, pack_key(r)) == r);
    }

    CHECK_THROWS_AS(pack_key(Mat(f64k, 5, 5)), std::domain_error);
}
