#include "scg/stabchain.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace scg {

namespace {

// points are row vectors packed k bits per coordinate
std::uint32_t act(const Field& f, int d, std::uint32_t point, const Mat& g) {
    int k = f.k();
    std::uint32_t mask = (1u << k) - 1;
    std::uint32_t out = 0;
    for (int j = 0; j < d; ++j) {
        fel acc = 0;
        for (int i = 0; i < d; ++i) {
            fel vi = static_cast<fel>((point >> (i * k)) & mask);
            if (vi == 0) continue;
            acc = f.add(acc, f.mul(vi, g.at(i, j)));
        }
        out |= static_cast<std::uint32_t>(acc) << (j * k);
    }
    return out;
}

struct Level {
    std::uint32_t base = 0;
    std::vector<Mat> gens;
    std::unordered_map<std::uint32_t, std::uint32_t> orbit;  // point -> transversal index
    std::vector<std::pair<Mat, Mat>> trans;                  // (u, u^-1) with base*u = point
    std::vector<std::uint32_t> orbit_points;                 // BFS order
};

class Chain {
  public:
    Chain(const Field& f, int d) : f_(f), d_(d) {}

    void recompute_orbit(Level& lv) {
        lv.orbit.clear();
        lv.trans.clear();
        lv.orbit_points.clear();
        Mat id = identity(f_, d_);
        lv.orbit.emplace(lv.base, 0);
        lv.trans.emplace_back(id, id);
        lv.orbit_points.push_back(lv.base);
        for (std::size_t head = 0; head < lv.orbit_points.size(); ++head) {
            std::uint32_t p = lv.orbit_points[head];
            std::uint32_t tidx = lv.orbit.at(p);
            for (const Mat& g : lv.gens) {
                std::uint32_t p2 = act(f_, d_, p, g);
                if (lv.orbit.count(p2)) continue;
                Mat u = mat_mul(lv.trans[tidx].first, g);
                Mat ui = inverse(u);
                lv.orbit.emplace(p2, static_cast<std::uint32_t>(lv.trans.size()));
                lv.trans.emplace_back(std::move(u), std::move(ui));
                lv.orbit_points.push_back(p2);
            }
        }
    }

    // multiply away transversal parts from level `from` down; returns the
    // level the residue is stuck at (levels.size() when it fell through)
    std::pair<std::size_t, Mat> sift(std::size_t from, Mat g) const {
        for (std::size_t l = from; l < levels_.size(); ++l) {
            const Level& lv = levels_[l];
            std::uint32_t p = act(f_, d_, lv.base, g);
            auto it = lv.orbit.find(p);
            if (it == lv.orbit.end()) return {l, std::move(g)};
            g = mat_mul(g, lv.trans[it->second].second);
        }
        return {levels_.size(), std::move(g)};
    }

    void add_generator_at(std::size_t l, const Mat& g) {
        if (l == levels_.size()) {
            Level lv;
            lv.base = first_moved_basis_point(g);
            lv.gens.push_back(g);
            levels_.push_back(std::move(lv));
            recompute_orbit(levels_.back());
        } else {
            levels_[l].gens.push_back(g);
            recompute_orbit(levels_[l]);
        }
    }

    std::uint32_t first_moved_basis_point(const Mat& g) const {
        int k = f_.k();
        for (int i = 0; i < d_; ++i) {
            std::uint32_t p = 1u << (i * k);  // basis vector e_i
            if (act(f_, d_, p, g) != p) return p;
        }
        throw std::logic_error("stabilizer chain: non-identity element fixes the whole basis");
    }

    // process levels deepest-first; a failed sift restarts at the level it
    // landed on, which is always deeper than the one being processed
    std::uint64_t run(const std::vector<Mat>& gens) {
        for (const Mat& g : gens) {
            if (is_identity(g)) continue;
            if (levels_.empty()) add_generator_at(0, g);
            else {
                levels_[0].gens.push_back(g);
            }
        }
        if (levels_.empty()) return 1;
        recompute_orbit(levels_[0]);

        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
        while (i >= 0) {
            Level& lv = levels_[static_cast<std::size_t>(i)];
            bool restarted = false;
            for (std::size_t tp = 0; tp < lv.orbit_points.size() && !restarted; ++tp) {
                std::uint32_t p = lv.orbit_points[tp];
                std::uint32_t tidx = lv.orbit.at(p);
                for (const Mat& s : lv.gens) {
                    std::uint32_t ps = act(f_, d_, p, s);
                    std::uint32_t sidx = lv.orbit.at(ps);
                    Mat schreier = mat_mul(mat_mul(lv.trans[tidx].first, s), lv.trans[sidx].second);
                    auto [l, res] = sift(static_cast<std::size_t>(i) + 1, std::move(schreier));
                    if (is_identity(res)) continue;
                    add_generator_at(l, res);
                    i = static_cast<std::ptrdiff_t>(l);
                    restarted = true;
                    break;
                }
            }
            if (!restarted) --i;
        }

        std::uint64_t order = 1;
        for (const Level& lv : levels_) order *= lv.orbit_points.size();
        return order;
    }

  private:
    const Field& f_;
    int d_;
    std::vector<Level> levels_;
};

}  // namespace

std::uint64_t order_via_stabilizer_chain(const Field& f, const std::vector<Mat>& gens) {
    if (gens.empty()) return 1;
    int d = gens.front().rows;
    for (const Mat& g : gens) {
        if (g.rows != d || g.cols != d) throw std::invalid_argument("order_via_stabilizer_chain: generator dimension mismatch");
        if (g.F->k() != f.k()) throw std::invalid_argument("order_via_stabilizer_chain: generator field mismatch");
        if (rank(g) != d) throw std::invalid_argument("order_via_stabilizer_chain: singular generator");
    }
    if (f.k() * d > 24) throw std::domain_error("order_via_stabilizer_chain: point set too large (need k*d <= 24)");
    Chain chain(f, d);
    return chain.run(gens);
}

}  // namespace scg
