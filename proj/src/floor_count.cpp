#include "tropdesc/floor_count.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>

#include "tropdesc/combinatorics.hpp"
#include "tropdesc/errors.hpp"

namespace tropdesc::floors {

namespace {

void check_degree(int d) {
    if (d < 1) throw DomainError("d must be >= 1 (got " + std::to_string(d) + ")");
}

void check_profile(int d, const TangencyProfile& profile) {
    check_degree(d);
    if (profile.alpha.size() > 1) throw ProfileError("at most one fixed end is supported");
    for (int w : profile.alpha)
        if (w < 1) throw ProfileError("end weights must be positive");
    for (int w : profile.beta)
        if (w < 1) throw ProfileError("end weights must be positive");
    if (profile.total_weight() != d)
        throw ProfileError("profile weights sum to " + std::to_string(profile.total_weight()) + ", expected d = " +
                           std::to_string(d));
}

// Labeled trees on vertices 1..d, decoded from Prüfer sequences in lexicographic order.
std::vector<std::vector<std::pair<int, int>>> labeled_trees(int d) {
    std::vector<std::vector<std::pair<int, int>>> trees;
    if (d == 1) {
        trees.emplace_back();
        return trees;
    }
    if (d == 2) {
        trees.push_back({{1, 2}});
        return trees;
    }
    std::vector<int> seq(d - 2, 1);
    while (true) {
        std::vector<int> degree(d + 1, 1);
        for (int v : seq) ++degree[v];
        std::vector<std::pair<int, int>> edges;
        for (int v : seq) {
            int leaf = 1;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
            --degree[leaf];
            --degree[v];
        }
        int u = 0, w = 0;
        for (int x = 1; x <= d; ++x) {
            if (degree[x] == 1) (u == 0 ? u : w) = x;
        }
        edges.emplace_back(std::min(u, w), std::max(u, w));
        std::sort(edges.begin(), edges.end());
        trees.push_back(std::move(edges));

        int i = d - 3;
        while (i >= 0 && seq[i] == d) seq[i--] = 1;
        if (i < 0) break;
        ++seq[i];
    }
    return trees;
}

// Floors (as a bitmask over 1..d) on the upper side of each edge.
std::vector<unsigned> upper_sides(int d, const std::vector<std::pair<int, int>>& edges) {
    std::vector<unsigned> sides;
    sides.reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        unsigned seen = 1u << edges[e].second;
        std::vector<int> stack{edges[e].second};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (std::size_t f = 0; f < edges.size(); ++f) {
                if (f == e) continue;
                int other = edges[f].first == v ? edges[f].second : edges[f].second == v ? edges[f].first : 0;
                if (other && !(seen & (1u << other))) {
                    seen |= 1u << other;
                    stack.push_back(other);
                }
            }
        }
        (void)d;
        sides.push_back(seen);
    }
    return sides;
}

struct EndType {
    int weight;
    bool fixed;
    int count;
};

std::vector<EndType> end_types(const TangencyProfile& profile) {
    std::map<std::pair<int, bool>, int, std::greater<>> counts;
    for (int w : profile.alpha) ++counts[{w, true}];
    for (int w : profile.beta) ++counts[{w, false}];
    std::vector<EndType> types;
    for (const auto& [k, c] : counts) types.push_back({k.first, k.second, c});
    return types;
}

// Calls f(distribution) for every way to put `count` identical items on floors 1..d.
template <typename F>
void for_each_distribution(int d, int count, F&& f) {
    std::vector<int> dist(d + 1, 0);
    auto rec = [&](auto&& self, int floor, int left) -> void {
        if (floor == d) {
            dist[floor] = left;
            f(dist);
            return;
        }
        for (int take = left; take >= 0; --take) {
            dist[floor] = take;
            self(self, floor + 1, left - take);
        }
        dist[floor] = 0;
    };
    rec(rec, 1, count);
}

}  // namespace

std::vector<FloorDiagram> enumerate_floor_diagrams(int d, const TangencyProfile& raw_profile) {
    const TangencyProfile profile = raw_profile.canonical();
    check_profile(d, profile);
    const auto types = end_types(profile);

    std::vector<FloorDiagram> out;
    for (const auto& tree : labeled_trees(d)) {
        const auto sides = upper_sides(d, tree);

        std::vector<EndPlacement> ends;
        std::vector<int> end_weight_at(d + 1, 0);
        auto place = [&](auto&& self, std::size_t t) -> void {
            if (t == types.size()) {
                FloorDiagram diagram{d, {}, ends};
                for (std::size_t e = 0; e < tree.size(); ++e) {
                    int floors_up = 0, weight_up = 0;
                    for (int v = 1; v <= d; ++v) {
                        if (sides[e] & (1u << v)) {
                            ++floors_up;
                            weight_up += end_weight_at[v];
                        }
                    }
                    const int w = floors_up - weight_up;
                    if (w < 1) return;
                    diagram.edges.push_back({tree[e].first, tree[e].second, w});
                }
                assert(marking_poset_size(diagram) == 2 * d - 1 + static_cast<int>(profile.beta.size()));
                out.push_back(std::move(diagram));
                return;
            }
            const auto& type = types[t];
            for_each_distribution(d, type.count, [&](const std::vector<int>& dist) {
                const auto mark = ends.size();
                for (int v = 1; v <= d; ++v) {
                    for (int c = 0; c < dist[v]; ++c) ends.push_back({v, type.weight, type.fixed});
                    end_weight_at[v] += dist[v] * type.weight;
                }
                self(self, t + 1);
                for (int v = 1; v <= d; ++v) end_weight_at[v] -= dist[v] * type.weight;
                ends.resize(mark);
            });
        };
        place(place, 0);
    }
    return out;
}

BigInt diagram_multiplicity(const FloorDiagram& diagram) {
    BigInt mu = 1;
    for (const auto& e : diagram.edges) mu *= BigInt(e.weight) * e.weight;
    for (const auto& end : diagram.ends) mu *= end.weight;
    return mu;
}

int marking_poset_size(const FloorDiagram& diagram) {
    int free_ends = 0;
    for (const auto& end : diagram.ends)
        if (!end.fixed) ++free_ends;
    return diagram.d + static_cast<int>(diagram.edges.size()) + free_ends;
}

BigInt count_markings(const FloorDiagram& diagram) {
    // Non-floor elements are pairwise incomparable and each may sit in a window of
    // consecutive gaps of the floor chain; gap g lies between floor g and floor g+1.
    // Group elements by window and sweep the gaps, choosing how many of each group
    // to drop into the current gap.
    std::map<std::pair<int, int>, int> windows;
    for (const auto& e : diagram.edges) ++windows[{e.lower, e.upper - 1}];
    for (const auto& end : diagram.ends)
        if (!end.fixed) ++windows[{0, end.floor - 1}];

    struct Group {
        int lo, hi, count;
    };
    std::vector<Group> groups;
    for (const auto& [w, c] : windows) groups.push_back({w.first, w.second, c});

    std::map<std::pair<int, std::vector<int>>, BigInt> memo;
    auto rec = [&](auto&& self, int gap, std::vector<int> remaining) -> BigInt {
        if (gap == diagram.d) {
            for (int r : remaining)
                if (r) return 0;
            return 1;
        }
        auto key = std::make_pair(gap, remaining);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        BigInt total = 0;
        std::vector<int> take(groups.size(), 0);
        auto choose = [&](auto&& chooser, std::size_t gi, BigInt ways, int placed) -> void {
            if (gi == groups.size()) {
                std::vector<int> next = remaining;
                for (std::size_t i = 0; i < groups.size(); ++i) next[i] -= take[i];
                total += ways * factorial(placed) * self(self, gap + 1, next);
                return;
            }
            const auto& g = groups[gi];
            if (gap < g.lo || gap > g.hi || remaining[gi] == 0) {
                take[gi] = 0;
                chooser(chooser, gi + 1, ways, placed);
                return;
            }
            const int min_take = gap == g.hi ? remaining[gi] : 0;
            for (int t = min_take; t <= remaining[gi]; ++t) {
                take[gi] = t;
                chooser(chooser, gi + 1, ways * binomial(remaining[gi], t), placed + t);
            }
            take[gi] = 0;
        };
        choose(choose, 0, BigInt(1), 0);
        memo.emplace(std::move(key), total);
        return total;
    };

    std::vector<int> counts;
    for (const auto& g : groups) counts.push_back(g.count);
    return rec(rec, 0, counts);
}

BigInt automorphism_order(const FloorDiagram& diagram) {
    std::map<std::pair<int, int>, int> classes;
    for (const auto& end : diagram.ends)
        if (!end.fixed) ++classes[{end.floor, end.weight}];
    BigInt aut = 1;
    for (const auto& [k, c] : classes) aut *= factorial(c);
    return aut;
}

Rational relative_invariant(Context& ctx, int d, const TangencyProfile& raw_profile) {
    const TangencyProfile profile = raw_profile.canonical();
    check_profile(d, profile);
    return ctx.cache().get_or_compute(InvariantKey::rel(d, profile), [&] {
        Rational total = 0;
        for (const auto& diagram : enumerate_floor_diagrams(d, profile)) {
            total += Rational(diagram_multiplicity(diagram) * count_markings(diagram), automorphism_order(diagram));
        }
        return total;
    });
}

Rational N(Context& ctx, int d) {
    check_degree(d);
    return relative_invariant(ctx, d, TangencyProfile::free_ends(std::vector<int>(d, 1)));
}

Rational kontsevich_N(int d) {
    check_degree(d);
    static std::mutex mutex;
    static std::vector<BigInt> table{0, 1};
    std::lock_guard lock(mutex);
    for (int n = static_cast<int>(table.size()); n <= d; ++n) {
        BigInt value = 0;
        for (int d1 = 1; d1 < n; ++d1) {
            const int d2 = n - d1;
            const BigInt a = BigInt(d1 * d1) * (d2 * d2) * binomial(3 * n - 4, 3 * d1 - 2);
            const BigInt b = BigInt(d1 * d1 * d1) * d2 * binomial(3 * n - 4, 3 * d1 - 1);
            value += table[d1] * table[d2] * (a - b);
        }
        table.push_back(value);
    }
    return Rational(table[d]);
}

Rational N_w(Context& ctx, int d, int w) {
    check_degree(d);
    if (w < 1) throw DomainError("w must be >= 1");
    if (w > d) return 0;
    if (w == 1) return Rational(d) * N(ctx, d);
    std::vector<int> beta(d - w, 1);
    beta.insert(beta.begin(), w);
    return relative_invariant(ctx, d, TangencyProfile{{}, beta});
}

Rational N_tilde(Context& ctx, int d, int w) {
    check_degree(d);
    if (w < 1) throw DomainError("w must be >= 1");
    if (w > d) return 0;
    return relative_invariant(ctx, d, TangencyProfile{{w}, std::vector<int>(d - w, 1)});
}

Rational N_two_twos(Context& ctx, int d) {
    check_degree(d);
    if (d < 4) return 0;
    std::vector<int> beta(d - 4, 1);
    beta.insert(beta.begin(), {2, 2});
    return relative_invariant(ctx, d, TangencyProfile{{}, beta});
}

}  // namespace tropdesc::floors
