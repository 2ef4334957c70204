#include "scg/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace scg {

namespace {

// exact diamond check for small rank-3 structures: every incident
// (bottom, top) pair must have exactly two middle faces
void check_diamonds(const std::vector<std::vector<std::vector<std::uint32_t>>>& members) {
    const auto& bottoms = members[0];
    const auto& middles = members[1];
    const auto& tops = members[2];
    auto share = [](const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
        std::size_t i = 0, j = 0;
        while (i < x.size() && j < y.size()) {
            if (x[i] == y[j]) return true;
            if (x[i] < y[j]) ++i; else ++j;
        }
        return false;
    };
    for (std::size_t a = 0; a < bottoms.size(); ++a) {
        for (std::size_t c = 0; c < tops.size(); ++c) {
            if (!share(bottoms[a], tops[c])) continue;
            int between = 0;
            for (const auto& mid : middles) {
                if (share(bottoms[a], mid) && share(mid, tops[c])) ++between;
            }
            if (between != 2) throw std::logic_error("build_polytope: diamond condition violated");
        }
    }
}

}  // namespace

PolytopeData build_polytope(const Field& f, const std::vector<Mat>& gens, std::uint64_t cap,
                            int threads) {
    int n = static_cast<int>(gens.size());
    if (n < 1) throw std::invalid_argument("build_polytope: need at least one generator");
    int d = gens.front().rows;

    if (!check_string_condition(gens) || !check_intersection_property_recursive(f, gens, cap, threads))
        throw std::domain_error("build_polytope: generators do not form a string C-group");

    EnumeratedGroup g = enumerate_group(f, d, gens, cap, threads);
    std::uint64_t order = g.order();

    PolytopeData p;
    p.rank = n;
    p.d = d;
    p.q = f.q();
    p.flag_count = order;
    p.schlafli = schlafli_symbol(gens);
    p.faces.resize(static_cast<std::size_t>(n));
    p.f_vector.resize(static_cast<std::size_t>(n));
    p.incidences.resize(static_cast<std::size_t>(n > 0 ? n - 1 : 0));

    // cid[i][e] = face index (after label sort) of element e at rank i
    std::vector<std::vector<std::uint32_t>> cid(static_cast<std::size_t>(n));
    std::vector<std::vector<std::vector<std::uint32_t>>> members;
    std::uint64_t total_faces = 0;

    for (int i = 0; i < n; ++i) {
        std::vector<Mat> sub;
        for (int t = 0; t < n; ++t) {
            if (t != i) sub.push_back(gens[static_cast<std::size_t>(t)]);
        }
        EnumeratedGroup gi = enumerate_group(f, d, sub, cap, threads);
        if (order % gi.order() != 0) throw std::logic_error("build_polytope: parabolic order does not divide the group order");

        auto& ci = cid[static_cast<std::size_t>(i)];
        ci.assign(order, UINT32_MAX);
        std::vector<MatKey> minkey;
        for (std::uint64_t e = 0; e < order; ++e) {
            if (ci[e] != UINT32_MAX) continue;
            std::uint32_t c = static_cast<std::uint32_t>(minkey.size());
            Mat ge = g.element(e);
            MatKey best = g.elements()[e];
            for (std::uint64_t hidx = 0; hidx < gi.order(); ++hidx) {
                Mat m = mat_mul(gi.element(hidx), ge);
                MatKey k = pack_key(m);
                long long at = g.index_of(k);
                if (at < 0) throw std::logic_error("build_polytope: coset member missing from the group");
                ci[static_cast<std::uint64_t>(at)] = c;
                if (key_less(k, best)) best = k;
            }
            minkey.push_back(best);
        }
        if (minkey.size() != order / gi.order()) throw std::logic_error("build_polytope: coset count mismatch");

        // sort faces by label and remap element -> face indices
        std::vector<std::uint32_t> perm(minkey.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(),
                  [&](std::uint32_t x, std::uint32_t y) { return key_less(minkey[x], minkey[y]); });
        std::vector<std::uint32_t> inv(perm.size());
        for (std::uint32_t t = 0; t < perm.size(); ++t) inv[perm[t]] = t;
        for (std::uint64_t e = 0; e < order; ++e) ci[e] = inv[ci[e]];
        auto& labels = p.faces[static_cast<std::size_t>(i)];
        labels.reserve(perm.size());
        for (std::uint32_t t = 0; t < perm.size(); ++t) labels.push_back(key_hex(minkey[perm[t]], f, d));
        p.f_vector[static_cast<std::size_t>(i)] = minkey.size();
        total_faces += minkey.size();
    }

    for (int i = 0; i + 1 < n; ++i) {
        std::vector<std::uint64_t> packed;
        packed.reserve(order);
        for (std::uint64_t e = 0; e < order; ++e) {
            packed.push_back((static_cast<std::uint64_t>(cid[static_cast<std::size_t>(i)][e]) << 32) |
                             cid[static_cast<std::size_t>(i + 1)][e]);
        }
        std::sort(packed.begin(), packed.end());
        packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
        auto& inc = p.incidences[static_cast<std::size_t>(i)];
        inc.reserve(packed.size());
        for (std::uint64_t v : packed) {
            inc.emplace_back(static_cast<std::uint32_t>(v >> 32), static_cast<std::uint32_t>(v & 0xffffffffu));
        }
    }

    if (n == 3 && total_faces <= 10000) {
        members.assign(3, {});
        for (int i = 0; i < 3; ++i) {
            members[static_cast<std::size_t>(i)].assign(p.f_vector[static_cast<std::size_t>(i)], {});
            for (std::uint64_t e = 0; e < order; ++e) {
                members[static_cast<std::size_t>(i)][cid[static_cast<std::size_t>(i)][e]].push_back(
                    static_cast<std::uint32_t>(e));
            }
        }
        check_diamonds(members);
    }

    return p;
}

std::string export_incidence(const PolytopeData& p) {
    std::ostringstream os;
    os << p.rank << ' ' << p.d << ' ' << p.q << ' ' << p.flag_count;
    for (int s : p.schlafli) os << ' ' << s;
    os << '\n';
    for (int r = 0; r < p.rank; ++r) {
        for (const std::string& label : p.faces[static_cast<std::size_t>(r)]) {
            os << "F " << r << ' ' << label << '\n';
        }
    }
    // the layer index disambiguates: distinct ranks can share a label
    // whenever one group element is the minimal member of both cosets
    for (std::size_t b = 0; b < p.incidences.size(); ++b) {
        for (const auto& [i, j] : p.incidences[b]) {
            os << "I " << b << ' ' << p.faces[b][i] << ' ' << p.faces[b + 1][j] << '\n';
        }
    }
    return os.str();
}

PolytopeData import_incidence(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("import_incidence: empty input");
    std::istringstream head(line);
    PolytopeData p;
    if (!(head >> p.rank >> p.d >> p.q >> p.flag_count) || p.rank < 1)
        throw std::invalid_argument("import_incidence: malformed header");
    for (int i = 0; i + 1 < p.rank; ++i) {
        int s;
        if (!(head >> s)) throw std::invalid_argument("import_incidence: header is missing symbol entries");
        p.schlafli.push_back(s);
    }
    p.faces.resize(static_cast<std::size_t>(p.rank));
    p.incidences.resize(static_cast<std::size_t>(p.rank - 1));

    std::vector<std::unordered_map<std::string, std::uint32_t>> where(static_cast<std::size_t>(p.rank));
    std::vector<std::unordered_set<std::uint64_t>> seen(static_cast<std::size_t>(p.rank - 1));

    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "F") {
            int r;
            std::string label;
            if (!(ls >> r >> label) || r < 0 || r >= p.rank)
                throw std::invalid_argument("import_incidence: malformed face line");
            auto& fs = p.faces[static_cast<std::size_t>(r)];
            if (!fs.empty() && !(fs.back() < label))
                throw std::invalid_argument("import_incidence: face labels out of order");
            where[static_cast<std::size_t>(r)].emplace(label, static_cast<std::uint32_t>(fs.size()));
            fs.push_back(label);
        } else if (tag == "I") {
            int b;
            std::string l1, l2;
            if (!(ls >> b >> l1 >> l2) || b < 0 || b + 1 >= p.rank)
                throw std::invalid_argument("import_incidence: malformed incidence line");
            auto i1 = where[static_cast<std::size_t>(b)].find(l1);
            auto i2 = where[static_cast<std::size_t>(b) + 1].find(l2);
            if (i1 == where[static_cast<std::size_t>(b)].end() ||
                i2 == where[static_cast<std::size_t>(b) + 1].end())
                throw std::invalid_argument("import_incidence: incidence label not found at its rank");
            std::uint64_t packed = (static_cast<std::uint64_t>(i1->second) << 32) | i2->second;
            if (!seen[static_cast<std::size_t>(b)].insert(packed).second)
                throw std::invalid_argument("import_incidence: duplicate incidence");
            p.incidences[static_cast<std::size_t>(b)].emplace_back(i1->second, i2->second);
        } else {
            throw std::invalid_argument("import_incidence: unrecognized line");
        }
    }
    for (auto& inc : p.incidences) std::sort(inc.begin(), inc.end());
    for (std::size_t r = 0; r < p.faces.size(); ++r) p.f_vector.push_back(p.faces[r].size());
    return p;
}

}  // namespace scg
