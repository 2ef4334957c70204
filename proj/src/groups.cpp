#include "scg/groups.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <utility>

namespace scg {

namespace {

std::size_t probe_start(const MatKey& k, std::size_t buckets) {
    return MatKeyHash{}(k) & (buckets - 1);
}

}  // namespace

long long EnumeratedGroup::index_of(const MatKey& k) const {
    if (table_.empty()) return -1;
    std::size_t buckets = table_.size();
    std::size_t p = probe_start(k, buckets);
    while (true) {
        std::uint32_t slot = table_[p];
        if (slot == 0) return -1;
        if (elems_[slot - 1] == k) return static_cast<long long>(slot) - 1;
        p = (p + 1) & (buckets - 1);
    }
}

void EnumeratedGroup::rehash(std::size_t buckets) {
    table_.assign(buckets, 0);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        std::size_t p = probe_start(elems_[i], buckets);
        while (table_[p] != 0) p = (p + 1) & (buckets - 1);
        table_[p] = static_cast<std::uint32_t>(i + 1);
    }
}

bool EnumeratedGroup::insert(const MatKey& k) {
    if (table_.empty()) rehash(1024);
    // keep load factor under 0.7
    if ((elems_.size() + 1) * 10 >= table_.size() * 7) rehash(table_.size() * 2);
    std::size_t buckets = table_.size();
    std::size_t p = probe_start(k, buckets);
    while (true) {
        std::uint32_t slot = table_[p];
        if (slot == 0) {
            elems_.push_back(k);
            table_[p] = static_cast<std::uint32_t>(elems_.size());
            return true;
        }
        if (elems_[slot - 1] == k) return false;
        p = (p + 1) & (buckets - 1);
    }
}

EnumeratedGroup EnumeratedGroup::from_elements(const Field& f, int d, std::vector<MatKey> elems,
                                               std::vector<Mat> gens) {
    EnumeratedGroup g;
    g.F_ = &f;
    g.d_ = d;
    g.gens_ = std::move(gens);
    for (const MatKey& k : elems) {
        if (!g.insert(k)) throw std::logic_error("from_elements: duplicate element key");
    }
    return g;
}

EnumeratedGroup enumerate_group(const Field& f, int d, const std::vector<Mat>& gens,
                                std::uint64_t cap, int threads) {
    if (d < 1) throw std::invalid_argument("enumerate_group: dimension must be positive");
    for (const Mat& g : gens) {
        if (g.rows != d || g.cols != d) throw std::invalid_argument("enumerate_group: generator dimension mismatch");
        if (g.F->k() != f.k()) throw std::invalid_argument("enumerate_group: generator field mismatch");
        if (rank(g) != d) throw std::invalid_argument("enumerate_group: singular generator");
    }
    if (threads < 1) threads = 1;
    if (threads > 64) threads = 64;

    EnumeratedGroup out;
    out.F_ = &f;
    out.d_ = d;
    out.gens_ = gens;

    Mat id = identity(f, d);
    out.insert(pack_key(id));
    if (out.order() > cap) throw CapExceeded(cap);
    if (gens.empty()) return out;

    std::vector<Mat> frontier{id};
    const std::size_t block = 4096;
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (std::size_t start = 0; start < frontier.size(); start += block) {
            std::size_t end = std::min(start + block, frontier.size());
            if (threads == 1 || end - start < 64) {
                for (std::size_t i = start; i < end; ++i) {
                    for (const Mat& g : gens) {
                        Mat p = mat_mul(frontier[i], g);
                        if (out.insert(pack_key(p))) {
                            if (out.order() > cap) throw CapExceeded(cap);
                            next.push_back(std::move(p));
                        }
                    }
                }
                continue;
            }
            // parallel product computation, serial ordered insertion: the
            // element order stays identical for every thread count
            std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), end - start);
            std::vector<std::vector<std::pair<MatKey, Mat>>> prods(nt);
            std::vector<std::thread> pool;
            std::size_t chunk = (end - start + nt - 1) / nt;
            for (std::size_t t = 0; t < nt; ++t) {
                std::size_t lo = start + t * chunk;
                std::size_t hi = std::min(lo + chunk, end);
                pool.emplace_back([&, t, lo, hi]() {
                    for (std::size_t i = lo; i < hi; ++i) {
                        for (const Mat& g : gens) {
                            Mat p = mat_mul(frontier[i], g);
                            MatKey k = pack_key(p);
                            prods[t].emplace_back(k, std::move(p));
                        }
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (auto& chunk_prods : prods) {
                for (auto& [k, p] : chunk_prods) {
                    if (out.insert(k)) {
                        if (out.order() > cap) throw CapExceeded(cap);
                        next.push_back(std::move(p));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

EnumeratedGroup intersect(const EnumeratedGroup& a, const EnumeratedGroup& b) {
    if (a.field().k() != b.field().k() || a.dim() != b.dim())
        throw std::invalid_argument("intersect: groups live in different spaces");
    const EnumeratedGroup& small = a.order() <= b.order() ? a : b;
    const EnumeratedGroup& large = a.order() <= b.order() ? b : a;
    std::vector<MatKey> keep;
    for (const MatKey& k : small.elements()) {
        if (large.contains(k)) keep.push_back(k);
    }
    return EnumeratedGroup::from_elements(a.field(), a.dim(), std::move(keep), {});
}

bool same_elements(const EnumeratedGroup& a, const EnumeratedGroup& b) {
    if (a.order() != b.order()) return false;
    for (const MatKey& k : a.elements()) {
        if (!b.contains(k)) return false;
    }
    return true;
}

bool check_string_condition(const std::vector<Mat>& gens) {
    int n = static_cast<int>(gens.size());
    for (const Mat& g : gens) {
        if (g.rows != g.cols) throw std::invalid_argument("check_string_condition: generators must be square");
        if (is_identity(g) || !is_identity(mat_mul(g, g)))
            throw std::invalid_argument("check_string_condition: generator is not an involution");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool commute = mat_mul(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)]) ==
                           mat_mul(gens[static_cast<std::size_t>(j)], gens[static_cast<std::size_t>(i)]);
            if (j == i + 1 ? commute : !commute) return false;
        }
    }
    return true;
}

bool check_intersection_property_full(const Field& f, const std::vector<Mat>& gens,
                                      std::uint64_t cap, int threads) {
    int n = static_cast<int>(gens.size());
    if (n == 0) return true;
    if (n > 5) throw std::invalid_argument("check_intersection_property_full: too many generators (max 5)");
    int d = gens.front().rows;
    std::vector<EnumeratedGroup> sub(static_cast<std::size_t>(1) << n);
    for (unsigned mask = 0; mask < sub.size(); ++mask) {
        std::vector<Mat> pick;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) pick.push_back(gens[static_cast<std::size_t>(i)]);
        }
        sub[mask] = enumerate_group(f, d, pick, cap, threads);
    }
    for (unsigned i = 0; i < sub.size(); ++i) {
        for (unsigned j = i + 1; j < sub.size(); ++j) {
            unsigned meet = i & j;
            if (meet == i || meet == j) continue;  // nested subsets intersect trivially correctly
            EnumeratedGroup c = intersect(sub[i], sub[j]);
            if (!same_elements(c, sub[meet])) return false;
        }
    }
    return true;
}

namespace {

class WindowTable {
  public:
    WindowTable(const Field& f, int d, const std::vector<Mat>& gens, std::uint64_t cap, int threads)
        : f_(f), d_(d), gens_(gens), cap_(cap), threads_(threads) {}

    const EnumeratedGroup& get(int i, int j) {
        auto key = std::make_pair(i, j);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        EnumeratedGroup g;
        if (i > j) {
            g = EnumeratedGroup::from_elements(f_, d_, {pack_key(identity(f_, d_))}, {});
        } else {
            std::vector<Mat> pick(gens_.begin() + i, gens_.begin() + j + 1);
            g = enumerate_group(f_, d_, pick, cap_, threads_);
        }
        return memo_.emplace(key, std::move(g)).first->second;
    }

    bool verified(int i, int j) {
        auto key = std::make_pair(i, j);
        auto it = verdict_.find(key);
        if (it != verdict_.end()) return it->second;
        bool ok;
        if (j - i + 1 <= 1) {
            ok = true;
        } else {
            ok = verified(i, j - 1) && verified(i + 1, j);
            if (ok) {
                EnumeratedGroup c = intersect(get(i, j - 1), get(i + 1, j));
                ok = same_elements(c, get(i + 1, j - 1));
            }
        }
        verdict_[key] = ok;
        return ok;
    }

  private:
    const Field& f_;
    int d_;
    const std::vector<Mat>& gens_;
    std::uint64_t cap_;
    int threads_;
    std::map<std::pair<int, int>, EnumeratedGroup> memo_;
    std::map<std::pair<int, int>, bool> verdict_;
};

}  // namespace

bool check_intersection_property_recursive(const Field& f, const std::vector<Mat>& gens,
                                           std::uint64_t cap, int threads) {
    int n = static_cast<int>(gens.size());
    if (n <= 1) return true;
    WindowTable wt(f, gens.front().rows, gens, cap, threads);
    return wt.verified(0, n - 1);
}

bool check_maximal(const EnumeratedGroup& sub, const EnumeratedGroup& g) {
    if (sub.field().k() != g.field().k() || sub.dim() != g.dim())
        throw std::invalid_argument("check_maximal: groups live in different spaces");
    if (g.order() > 100000) throw std::invalid_argument("check_maximal: ambient group too large");
    for (const MatKey& k : sub.elements()) {
        if (!g.contains(k)) throw std::invalid_argument("check_maximal: sub is not contained in the group");
    }
    if (sub.order() == g.order()) return false;
    std::vector<Mat> base = sub.generators();
    if (base.empty() && sub.order() > 1) {
        for (const MatKey& k : sub.elements()) base.push_back(unpack_key(sub.field(), sub.dim(), k));
    }
    for (const MatKey& k : g.elements()) {
        if (sub.contains(k)) continue;
        std::vector<Mat> ext = base;
        ext.push_back(unpack_key(g.field(), g.dim(), k));
        EnumeratedGroup h = enumerate_group(g.field(), g.dim(), ext, g.order());
        if (h.order() != g.order()) return false;
    }
    return true;
}

std::vector<int> schlafli_symbol(const std::vector<Mat>& gens, std::uint64_t cap) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
        out.push_back(static_cast<int>(element_order(mat_mul(gens[i], gens[i + 1]), cap)));
    }
    return out;
}

std::uint64_t classical_order(ClassicalFamily fam, int m, std::uint64_t q) {
    if (m < 1) throw std::invalid_argument("classical_order: m must be positive");
    if (q < 2 || (q & (q - 1)) != 0) throw std::invalid_argument("classical_order: q must be a power of 2");
    // detect overflow at each step: large q can wrap even 128-bit products
    auto mul_or_throw = [](unsigned __int128 a, unsigned __int128 b) -> unsigned __int128 {
        if (a != 0 && b > ~static_cast<unsigned __int128>(0) / a)
            throw std::overflow_error("classical_order: result exceeds 64 bits");
        return a * b;
    };
    auto qpow = [&](int e) {
        unsigned __int128 r = 1;
        for (int i = 0; i < e; ++i) r = mul_or_throw(r, q);
        return r;
    };
    unsigned __int128 acc;
    if (fam == ClassicalFamily::Symplectic) {
        acc = qpow(m * m);
        for (int i = 1; i <= m; ++i) acc = mul_or_throw(acc, qpow(2 * i) - 1);
    } else {
        acc = mul_or_throw(2, qpow(m * (m - 1)));
        acc = mul_or_throw(acc, fam == ClassicalFamily::OrthogonalPlus ? qpow(m) - 1 : qpow(m) + 1);
        for (int i = 1; i < m; ++i) acc = mul_or_throw(acc, qpow(2 * i) - 1);
    }
    if (acc > static_cast<unsigned __int128>(UINT64_MAX)) throw std::overflow_error("classical_order: result exceeds 64 bits");
    return static_cast<std::uint64_t>(acc);
}

VerificationReport verify_string_group(const Field& f, const std::vector<Mat>& gens,
                                       bool full_intersection, std::uint64_t cap, int threads) {
    if (gens.empty()) throw std::invalid_argument("verify_string_group: no generators");
    VerificationReport r;
    r.string_condition = check_string_condition(gens);
    r.intersection_property = full_intersection
                                  ? check_intersection_property_full(f, gens, cap, threads)
                                  : check_intersection_property_recursive(f, gens, cap, threads);
    EnumeratedGroup g = enumerate_group(f, gens.front().rows, gens, cap, threads);
    r.group_order = g.order();
    r.schlafli = schlafli_symbol(gens);
    return r;
}

}  // namespace scg
