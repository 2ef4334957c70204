#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scg/field.hpp"
#include "scg/groups.hpp"
#include "scg/strings.hpp"

#include <vector>

using namespace scg;

namespace {

std::vector<Mat> dihedral_gens(const Field& f) {
    return build_string_generators(build_phi(f, {2})).gens;
}

}  // namespace

TEST_CASE("enumeration basics") {
    Field f(2);
    EnumeratedGroup trivial = enumerate_group(f, 3, {});
    CHECK(trivial.order() == 1);
    CHECK(trivial.contains(identity(f, 3)));

    EnumeratedGroup d10 = enumerate_group(f, 2, dihedral_gens(f));
    CHECK(d10.order() == 10);
    CHECK(d10.elements().front() == pack_key(identity(f, 2)));
    CHECK(d10.contains(mat_mul(d10.generators()[0], d10.generators()[1])));
    CHECK(d10.element(0) == identity(f, 2));
    CHECK(d10.index_of(pack_key(identity(f, 2))) == 0);
    CHECK(d10.index_of(pack_key(parse_matrix(f, "2,0;0,2"))) == -1);

    CHECK_THROWS_AS(enumerate_group(f, 2, dihedral_gens(f), 5), CapExceeded);
    CHECK_THROWS_AS(enumerate_group(f, 2, {parse_matrix(f, "1,1;2,2")}, 100), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_group(f, 3, dihedral_gens(f)), std::invalid_argument);
}

TEST_CASE("enumeration order is deterministic and thread independent") {
    Field f(2);
    std::vector<Mat> gens = build_string_generators(build_phi(f, {2, 3})).gens;
    EnumeratedGroup a = enumerate_group(f, 3, gens, kDefaultEnumerationCap, 1);
    EnumeratedGroup b = enumerate_group(f, 3, gens, kDefaultEnumerationCap, 1);
    EnumeratedGroup c = enumerate_group(f, 3, gens, kDefaultEnumerationCap, 3);
    CHECK(a.order() == 60);
    CHECK(a.elements() == b.elements());
    CHECK(a.elements() == c.elements());
}

TEST_CASE("intersection of enumerated groups") {
    Field f(2);
    EnumeratedGroup d10 = enumerate_group(f, 2, dihedral_gens(f));
    EnumeratedGroup self = intersect(d10, d10);
    CHECK(same_elements(self, d10));

    Mat r = mat_mul(d10.generators()[0], d10.generators()[1]);
    EnumeratedGroup c5 = enumerate_group(f, 2, {r});
    CHECK(c5.order() == 5);
    EnumeratedGroup meet = intersect(d10, c5);
    CHECK(same_elements(meet, c5));

    EnumeratedGroup trivial = enumerate_group(f, 2, {});
    CHECK(intersect(d10, trivial).order() == 1);
    CHECK_FALSE(same_elements(d10, c5));

    CHECK_THROWS_AS(intersect(d10, enumerate_group(f, 3, {})), std::invalid_argument);
}

TEST_CASE("string condition") {
    Field f(2);
    std::vector<Mat> gens = build_string_generators(build_phi(f, {2, 3})).gens;
    CHECK(check_string_condition(gens));
    CHECK(check_string_condition(dihedral_gens(f)));

    // moving a commuting pair next to each other breaks the condition
    std::vector<Mat> bad{gens[0], gens[2], gens[1]};
    CHECK_FALSE(check_string_condition(bad));

    CHECK_THROWS_AS(check_string_condition({identity(f, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(check_string_condition({parse_matrix(f, "2,0;0,3")}), std::invalid_argument);
    CHECK(check_string_condition({gens[0]}));
}

TEST_CASE("intersection property checks agree") {
    Field f(2);
    std::vector<Mat> sp3 = build_string_generators(build_phi(f, {2, 3})).gens;
    CHECK(check_intersection_property_full(f, sp3));
    CHECK(check_intersection_property_recursive(f, sp3));

    std::vector<Mat> minus4 = build_string_generators(build_phi(f, {2, 2, 2})).gens;
    CHECK(check_intersection_property_full(f, minus4));
    CHECK(check_intersection_property_recursive(f, minus4));

    // a repeated generator fails: <a> meets <a> in <a>, not in the trivial
    // group
    std::vector<Mat> rep{sp3[0], sp3[0]};
    CHECK_FALSE(check_intersection_property_full(f, rep));
    CHECK_FALSE(check_intersection_property_recursive(f, rep));

    CHECK(check_intersection_property_full(f, {}));
    CHECK(check_intersection_property_recursive(f, {sp3[0]}));
    CHECK_THROWS_AS(check_intersection_property_full(f, std::vector<Mat>(6, sp3[0])),
                    std::invalid_argument);
}

TEST_CASE("maximality check") {
    Field f(2);
    EnumeratedGroup d10 = enumerate_group(f, 2, dihedral_gens(f));
    Mat r = mat_mul(d10.generators()[0], d10.generators()[1]);
    EnumeratedGroup c5 = enumerate_group(f, 2, {r});
    CHECK(check_maximal(c5, d10));

    EnumeratedGroup trivial = enumerate_group(f, 2, {});
    CHECK_FALSE(check_maximal(trivial, d10));
    CHECK_FALSE(check_maximal(d10, d10));

    EnumeratedGroup c3 = enumerate_group(f, 2, {parse_matrix(f, "2,0;0,2")});
    CHECK(c3.order() == 3);
    CHECK_THROWS_AS(check_maximal(c3, d10), std::invalid_argument);
}

TEST_CASE("schlafli symbols") {
    Field f(2);
    CHECK(schlafli_symbol(dihedral_gens(f)) == std::vector<int>{5});
    std::vector<Mat> sp3 = build_string_generators(build_phi(f, {2, 3})).gens;
    CHECK(schlafli_symbol(sp3) == std::vector<int>{5, 5});
    CHECK(schlafli_symbol({sp3[0]}).empty());
}

TEST_CASE("classical group orders") {
    CHECK(classical_order(ClassicalFamily::OrthogonalMinus, 1, 4) == 10);
    CHECK(classical_order(ClassicalFamily::OrthogonalPlus, 1, 4) == 6);
    CHECK(classical_order(ClassicalFamily::Symplectic, 1, 4) == 60);
    CHECK(classical_order(ClassicalFamily::Symplectic, 2, 4) == 979200);
    CHECK(classical_order(ClassicalFamily::OrthogonalMinus, 2, 4) == 8160);
    CHECK(classical_order(ClassicalFamily::OrthogonalPlus, 2, 4) == 7200);
    CHECK(classical_order(ClassicalFamily::OrthogonalPlus, 3, 4) == 1974067200);
    CHECK(classical_order(ClassicalFamily::OrthogonalMinus, 3, 4) == 2036736000);

    CHECK_THROWS_AS(classical_order(ClassicalFamily::Symplectic, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(classical_order(ClassicalFamily::Symplectic, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(classical_order(ClassicalFamily::Symplectic, 4, 65536), std::overflow_error);
}

TEST_CASE("verification report") {
    Field f(2);
    std::vector<Mat> sp3 = build_string_generators(build_phi(f, {2, 3})).gens;
    VerificationReport r = verify_string_group(f, sp3);
    CHECK(r.string_condition);
    CHECK(r.intersection_property);
    CHECK(r.group_order == 60);
    CHECK(r.schlafli == std::vector<int>{5, 5});

    VerificationReport rf = verify_string_group(f, sp3, true);
    CHECK(rf.intersection_property);

    CHECK_THROWS_AS(verify_string_group(f, {}), std::invalid_argument);
}

TEST_CASE("subgroup orders divide the group order") {
    Field f(2);
    std::vector<Mat> gens = build_string_generators(build_phi(f, {2, 2, 2})).gens;
    EnumeratedGroup g = enumerate_group(f, 4, gens);
    CHECK(g.order() == 8160);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Mat> sub;
        for (std::size_t t = 0; t < gens.size(); ++t) {
            if (t != i) sub.push_back(gens[t]);
        }
        EnumeratedGroup h = enumerate_group(f, 4, sub);
        CHECK(g.order() % h.order() == 0);
        for (const MatKey& k : h.elements()) CHECK(g.contains(k));
    }
}
