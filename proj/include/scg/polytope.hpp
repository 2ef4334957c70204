#pragma once

#include "scg/groups.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace scg {

// A rank-n coset incidence structure. faces[i] holds the sorted hex labels
// of the rank-i faces (right cosets of the i-th parabolic, labeled by the
// byte-lexicographically least member key); incidences[i] holds index pairs
// into faces[i] x faces[i+1], sorted.
struct PolytopeData {
    int rank = 0;
    int d = 0;
    std::uint64_t q = 0;
    std::uint64_t flag_count = 0;
    std::vector<int> schlafli;
    std::vector<std::uint64_t> f_vector;
    std::vector<std::vector<std::string>> faces;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> incidences;

    bool operator==(const PolytopeData&) const = default;
};

constexpr std::uint64_t kDefaultPolytopeCap = 1000000;

// Enumerates the group and its parabolics, assigns faces to cosets, and
// collects rank-adjacent incidences. Verifies the string condition and the
// intersection property first (domain_error on failure). Small rank-3
// structures additionally get an exact diamond check: every (bottom, top)
// incident pair has exactly two middle faces.
PolytopeData build_polytope(const Field& f, const std::vector<Mat>& gens,
                            std::uint64_t cap = kDefaultPolytopeCap, int threads = 1);

// Text form: one header line "rank d q order s_1 ... s_{rank-1}", then one
// "F <rank> <label>" line per face, then one "I <label> <label>" line per
// incidence. Deterministic and round-trip stable.
std::string export_incidence(const PolytopeData& p);

PolytopeData import_incidence(const std::string& text);

}  // namespace scg
