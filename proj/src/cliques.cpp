#include "jaco/cliques.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "jaco/checked.hpp"
#include "jaco/errors.hpp"

namespace jaco {
namespace {

// Shared walk over all cliques, in increasing-index order. After picking
// i_1 < ... < i_p, every common neighbour above i_p lies in the interval
// (i_p, min over chosen of out_hi], because each chosen vertex dominates a
// contiguous range. visit(v, depth) is called once per (clique, last vertex).
template <typename Visit>
void walk_cliques(const JacoTypeGraph& g, std::uint64_t max_size, Visit&& visit) {
    const std::uint64_t n = g.order();
    std::function<void(Vertex, Vertex, std::uint64_t)> extend =
        [&](Vertex start, Vertex hi, std::uint64_t depth) {
            for (Vertex j = start; j <= hi; ++j) {
                visit(j, depth);
                if (depth < max_size) {
                    const Vertex nhi = std::min(hi, g.out_hi(j));
                    if (j + 1 <= nhi) extend(j + 1, nhi, depth + 1);
                }
            }
        };
    if (max_size >= 1) extend(1, n, 1);
}

std::vector<Vertex> sorted_intersection(const std::vector<Vertex>& a,
                                        const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<std::vector<Vertex>> maximal_cliques(const JacoTypeGraph& g) {
    const auto adj = g.underlying_adjacency();
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> R;

    std::function<void(std::vector<Vertex>, std::vector<Vertex>)> bk =
        [&](std::vector<Vertex> P, std::vector<Vertex> X) {
            if (P.empty() && X.empty()) {
                auto clique = R;  // R grows in pivot order, not by index
                std::sort(clique.begin(), clique.end());
                out.push_back(std::move(clique));
                return;
            }
            // Pivot: candidate with the most neighbours among the candidates;
            // ties go to the smallest index (P is ascending, comparison strict).
            Vertex pivot = 0;
            std::size_t best = 0;
            bool have = false;
            for (Vertex u : P) {
                const std::size_t c = sorted_intersection(P, adj[u]).size();
                if (!have || c > best) {
                    pivot = u;
                    best = c;
                    have = true;
                }
            }
            std::vector<Vertex> iterate;
            if (have)
                std::set_difference(P.begin(), P.end(), adj[pivot].begin(),
                                    adj[pivot].end(), std::back_inserter(iterate));
            for (Vertex v : iterate) {
                R.push_back(v);
                bk(sorted_intersection(P, adj[v]), sorted_intersection(X, adj[v]));
                R.pop_back();
                P.erase(std::find(P.begin(), P.end(), v));
                X.insert(std::lower_bound(X.begin(), X.end(), v), v);
            }
        };

    std::vector<Vertex> P(g.order());
    for (Vertex v = 1; v <= g.order(); ++v) P[v - 1] = v;
    bk(std::move(P), {});
    std::sort(out.begin(), out.end());
    return out;
}

CliqueCensus clique_census(const JacoTypeGraph& g,
                           std::optional<std::uint64_t> max_size) {
    if (max_size && *max_size == 0)
        throw std::invalid_argument("census size cap must be positive");
    std::vector<std::uint64_t> counts;
    walk_cliques(g, max_size.value_or(kU64Max), [&](Vertex, std::uint64_t depth) {
        if (counts.size() < depth) counts.resize(depth, 0);
        ++counts[depth - 1];
    });
    return CliqueCensus(g.order(), std::move(counts));
}

CliqueDegreeTable vertex_clique_degrees(const JacoTypeGraph& g) {
    const std::uint64_t omega = clique_number(g);
    CliqueDegreeTable table(g.order(), omega);
    std::vector<Vertex> stack;
    walk_cliques(g, kU64Max, [&](Vertex v, std::uint64_t depth) {
        stack.resize(depth - 1);
        stack.push_back(v);
        for (Vertex member : stack) ++table.cell(member, depth);
    });
    return table;
}

std::uint64_t clique_number(const JacoTypeGraph& g) {
    // Deepest node of the clique walk, pruning branches whose candidate
    // interval is too short to beat the best already seen.
    std::uint64_t best = 0;
    std::function<void(Vertex, Vertex, std::uint64_t)> extend =
        [&](Vertex start, Vertex hi, std::uint64_t depth) {
            best = std::max(best, depth);
            for (Vertex j = start; j <= hi; ++j) {
                const Vertex nhi = std::min(hi, g.out_hi(j));
                // at most depth + (nhi - j) vertices below this branch
                if (j + 1 <= nhi && depth + (nhi - j) > best)
                    extend(j + 1, nhi, depth + 1);
            }
        };
    extend(1, g.order(), 1);
    return best;
}

CoverResult canonical_cover(const JacoTypeGraph& g) {
    const std::uint64_t n = g.order();
    for (Vertex i = 2; i <= n; ++i)
        if (g.term(i) < g.term(i - 1))
            throw precondition_violation(
                "canonical cover requires non-decreasing terms (a_" +
                std::to_string(i) + " < a_" + std::to_string(i - 1) + ")");

    Vertex first = 1;
    while (sat_add_u64(first, g.term(first)) < n) ++first;

    CoverResult r;
    r.method = CoverMethod::Canonical;
    for (Vertex j = first;; --j) {
        std::vector<Vertex> clique;
        for (Vertex v = j; v <= g.out_hi(j); ++v) clique.push_back(v);
        r.cliques.push_back(std::move(clique));
        if (j == 1) break;
    }
    return r;
}

CoverResult min_clique_cover(const JacoTypeGraph& g, std::uint64_t budget, bool force) {
    const std::uint64_t n = g.order();
    if (n > 64)
        throw std::invalid_argument("exhaustive cover search supports order <= 64");
    if (n > budget && !force)
        throw budget_exceeded("minimum clique cover is exhaustive; order " +
                              std::to_string(n) + " exceeds budget " +
                              std::to_string(budget));

    const auto cliques = maximal_cliques(g);
    std::vector<std::uint64_t> masks;
    masks.reserve(cliques.size());
    for (const auto& c : cliques) {
        std::uint64_t m = 0;
        for (Vertex v : c) m |= 1ULL << (v - 1);
        masks.push_back(m);
    }
    const std::uint64_t full = (n == 64) ? kU64Max : (1ULL << n) - 1;

    // Greedy bound first: repeatedly take the clique covering the most
    // uncovered vertices (ties to the earlier clique).
    std::vector<std::size_t> greedy;
    for (std::uint64_t covered = 0; covered != full;) {
        std::size_t pick = 0;
        int best = -1;
        for (std::size_t c = 0; c < masks.size(); ++c) {
            const int gain = std::popcount(masks[c] & ~covered);
            if (gain > best) {
                best = gain;
                pick = c;
            }
        }
        greedy.push_back(pick);
        covered |= masks[pick];
    }

    std::vector<std::size_t> best_set = greedy;
    std::vector<std::size_t> chosen;
    // Branch on the lowest uncovered vertex: some clique in the cover must
    // contain it, and trying them in index order keeps the result canonical.
    std::function<void(std::uint64_t)> search = [&](std::uint64_t covered) {
        if (covered == full) {
            if (chosen.size() < best_set.size()) best_set = chosen;
            return;
        }
        if (chosen.size() + 1 > best_set.size()) return;
        const std::uint64_t v_mask = (~covered) & (covered + 1);  // lowest zero bit
        for (std::size_t c = 0; c < masks.size(); ++c) {
            if (!(masks[c] & v_mask)) continue;
            chosen.push_back(c);
            search(covered | masks[c]);
            chosen.pop_back();
        }
    };
    search(0);

    CoverResult r;
    r.method = CoverMethod::BruteForceMinimum;
    for (std::size_t c : best_set) r.cliques.push_back(cliques[c]);
    std::sort(r.cliques.begin(), r.cliques.end());
    return r;
}

std::vector<std::uint64_t> s1_maximal_clique_sizes(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("graph order must be positive");
    if (n == 1) return {1};
    std::vector<std::uint64_t> sizes;
    if (n % 2 == 0) {
        for (std::uint64_t s = 2; s <= n / 2 + 1; ++s) sizes.push_back(s);
    } else {
        for (std::uint64_t s = 2; s <= (n + 1) / 2; ++s) sizes.push_back(s);
        sizes.push_back((n + 1) / 2);
    }
    return sizes;
}

}  // namespace jaco
