#pragma once

#include "scg/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace scg {

// Thrown when an enumeration would exceed its element cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(std::uint64_t cap)
        : std::runtime_error("group enumeration exceeded the element cap"), cap_value(cap) {}
    std::uint64_t cap_value;
};

// A fully enumerated matrix group: elements in deterministic insertion order
// (BFS from the identity, right multiplication), membership via a packed-key
// hash table.
class EnumeratedGroup {
  public:
    EnumeratedGroup() = default;

    std::uint64_t order() const { return elems_.size(); }
    const std::vector<MatKey>& elements() const { return elems_; }
    const std::vector<Mat>& generators() const { return gens_; }
    const Field& field() const { return *F_; }
    int dim() const { return d_; }

    bool contains(const MatKey& k) const { return index_of(k) >= 0; }
    bool contains(const Mat& m) const { return contains(pack_key(m)); }
    // insertion index, or -1 when absent
    long long index_of(const MatKey& k) const;
    Mat element(std::size_t i) const { return unpack_key(*F_, d_, elems_.at(i)); }

    static EnumeratedGroup from_elements(const Field& f, int d, std::vector<MatKey> elems,
                                         std::vector<Mat> gens);

  private:
    friend EnumeratedGroup enumerate_group(const Field&, int, const std::vector<Mat>&,
                                           std::uint64_t, int);
    const Field* F_ = nullptr;
    int d_ = 0;
    std::vector<MatKey> elems_;
    std::vector<std::uint32_t> table_;  // open addressing; entry = index + 1, 0 empty
    std::vector<Mat> gens_;

    void rehash(std::size_t buckets);
    bool insert(const MatKey& k);  // true when new
};

constexpr std::uint64_t kDefaultEnumerationCap = 20000000;

// BFS closure of the generators. The element order is independent of the
// thread count: products are computed in parallel per frontier chunk but
// inserted serially in chunk order.
EnumeratedGroup enumerate_group(const Field& f, int d, const std::vector<Mat>& gens,
                                std::uint64_t cap = kDefaultEnumerationCap, int threads = 1);

// Elements of both groups, in the insertion order of the smaller one.
EnumeratedGroup intersect(const EnumeratedGroup& a, const EnumeratedGroup& b);

bool same_elements(const EnumeratedGroup& a, const EnumeratedGroup& b);

// Adjacent generators must not commute, non-adjacent ones must. All
// generators must be involutions (order exactly 2).
bool check_string_condition(const std::vector<Mat>& gens);

// Every pair of subset subgroups intersects in the subgroup of the common
// subset. Exponential in the number of generators; capped at 5.
bool check_intersection_property_full(const Field& f, const std::vector<Mat>& gens,
                                      std::uint64_t cap = kDefaultEnumerationCap, int threads = 1);

// Window recursion: both maximal windows satisfy the property and their
// intersection is the shared inner window. Agrees with the full check.
bool check_intersection_property_recursive(const Field& f, const std::vector<Mat>& gens,
                                           std::uint64_t cap = kDefaultEnumerationCap,
                                           int threads = 1);

// Whether sub is maximal in g: every strictly larger subgroup generated by
// sub plus one more element of g is g itself. Demands sub <= g.
bool check_maximal(const EnumeratedGroup& sub, const EnumeratedGroup& g);

// Orders of the products of adjacent generators.
std::vector<int> schlafli_symbol(const std::vector<Mat>& gens, std::uint64_t cap = 1000000);

enum class ClassicalFamily { Symplectic, OrthogonalPlus, OrthogonalMinus };

// |Sp(2m,q)|, |O^+(2m,q)|, |O^-(2m,q)| for even characteristic q.
std::uint64_t classical_order(ClassicalFamily fam, int m, std::uint64_t q);

struct VerificationReport {
    bool string_condition = false;
    bool intersection_property = false;
    std::uint64_t group_order = 0;
    std::vector<int> schlafli;
};

// Runs the string condition, the intersection property (full when
// full_intersection is set, else recursive), the group enumeration, and the
// schlafli computation.
VerificationReport verify_string_group(const Field& f, const std::vector<Mat>& gens,
                                       bool full_intersection = false,
                                       std::uint64_t cap = kDefaultEnumerationCap,
                                       int threads = 1);

}  // namespace scg
