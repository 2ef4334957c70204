#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scg/field.hpp"
#include "scg/groups.hpp"
#include "scg/stabchain.hpp"
#include "scg/strings.hpp"

#include <vector>

using namespace scg;

TEST_CASE("stabilizer chain matches brute-force enumeration") {
    Field f(2);
    std::vector<Mat> d10 = build_string_generators(build_phi(f, {2})).gens;
    CHECK(order_via_stabilizer_chain(f, d10) == 10);

    std::vector<Mat> sp3 = build_string_generators(build_phi(f, {2, 3})).gens;
    CHECK(order_via_stabilizer_chain(f, sp3) == 60);

    std::vector<Mat> minus4 = build_string_generators(build_phi(f, {2, 2, 2})).gens;
    CHECK(order_via_stabilizer_chain(f, minus4) == 8160);

    Field f2(1);
    std::vector<Mat> ones = build_string_generators(build_phi(f2, {1, 1})).gens;
    CHECK(order_via_stabilizer_chain(f2, ones) == enumerate_group(f2, 3, ones).order());
}

TEST_CASE("stabilizer chain on cyclic groups") {
    Field f(2);
    for (const char* text : {"2,0;0,3", "1,1;0,1", "2,1;1,1"}) {
        Mat g = parse_matrix(f, text);
        std::uint64_t expected = element_order(g, 100000);
        CHECK(order_via_stabilizer_chain(f, {g}) == expected);
    }
}

TEST_CASE("stabilizer chain on the full linear group") {
    Field f(2);
    // GL(2,4): diagonal, transvection, swap
    std::vector<Mat> gens{parse_matrix(f, "2,0;0,1"), parse_matrix(f, "1,1;0,1"),
                          parse_matrix(f, "0,1;1,0")};
    CHECK(order_via_stabilizer_chain(f, gens) == 180);
    CHECK(enumerate_group(f, 2, gens).order() == 180);
}

TEST_CASE("stabilizer chain edge cases") {
    Field f(2);
    CHECK(order_via_stabilizer_chain(f, {}) == 1);
    CHECK(order_via_stabilizer_chain(f, {identity(f, 3)}) == 1);
    Field f256(8);
    CHECK_THROWS_AS(order_via_stabilizer_chain(f256, {identity(f256, 4)}), std::domain_error);
    CHECK_THROWS_AS(order_via_stabilizer_chain(f, {parse_matrix(f, "1,1;2,2")}), std::invalid_argument);
}

TEST_CASE("stabilizer chain handles the rank-4 symplectic string") {
    Field f(2);
    GeneratorString g = build_sp4_rank4(f);
    CHECK(order_via_stabilizer_chain(f, g.gens) == 979200);
}
