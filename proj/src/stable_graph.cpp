#include "cyfeyn/stable_graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "cyfeyn/errors.hpp"

namespace cyfeyn {

int StableGraph::total_genus() const {
    int s = num_edges() - num_vertices() + 1;
    for (int gv : genus) s += gv;
    return s;
}

int StableGraph::valence(int v) const {
    int n = 0;
    for (const auto& [a, b] : edges) {
        if (a == v) ++n;
        if (b == v) ++n;
    }
    for (int lv : legs)
        if (lv == v) ++n;
    return n;
}

bool operator==(const StableGraph& a, const StableGraph& b) {
    return a.genus == b.genus && a.edges == b.edges && a.legs == b.legs;
}

bool operator<(const StableGraph& a, const StableGraph& b) {
    if (a.genus != b.genus) return a.genus < b.genus;
    if (a.edges != b.edges) return a.edges < b.edges;
    return a.legs < b.legs;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool connected(const StableGraph& G) {
    const int v = G.num_vertices();
    if (v == 0) return false;
    UnionFind uf(v);
    for (const auto& [a, b] : G.edges) uf.unite(a, b);
    const int root = uf.find(0);
    for (int i = 1; i < v; ++i)
        if (uf.find(i) != root) return false;
    return true;
}

} // namespace

bool graph_valid(const StableGraph& G, std::string* why) {
    auto fail = [why](const char* reason) {
        if (why != nullptr) *why = reason;
        return false;
    };
    const int v = G.num_vertices();
    if (v == 0) return fail("no vertices");
    for (int gv : G.genus)
        if (gv < 0) return fail("negative vertex genus");
    for (const auto& [a, b] : G.edges) {
        if (a < 0 || b < 0 || a >= v || b >= v) return fail("edge endpoint out of range");
        if (a > b) return fail("edge not stored as (min, max)");
    }
    if (!std::is_sorted(G.edges.begin(), G.edges.end()))
        return fail("edge list not sorted");
    for (int lv : G.legs)
        if (lv < 0 || lv >= v) return fail("leg target out of range");
    if (!connected(G)) return fail("graph not connected");
    for (int i = 0; i < v; ++i)
        if (2 * G.genus[i] - 2 + G.valence(i) <= 0) return fail("unstable vertex");
    return true;
}

StableGraph canonical_form(const StableGraph& G) {
    const int v = G.num_vertices();
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    StableGraph best;
    bool haveBest = false;
    do {
        StableGraph cand;
        cand.genus.resize(v);
        for (int i = 0; i < v; ++i) cand.genus[perm[i]] = G.genus[i];
        cand.edges.reserve(G.edges.size());
        for (const auto& [a, b] : G.edges) {
            const int pa = perm[a], pb = perm[b];
            cand.edges.emplace_back(std::min(pa, pb), std::max(pa, pb));
        }
        std::sort(cand.edges.begin(), cand.edges.end());
        cand.legs.reserve(G.legs.size());
        for (int lv : G.legs) cand.legs.push_back(perm[lv]);
        if (!haveBest || cand < best) {
            best = std::move(cand);
            haveBest = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

// Generates every isomorphism class for fixed (g, n) by brute force over
// vertex counts, edge multisets, genus distributions, and leg maps, reduced
// through canonical_form.
std::vector<StableGraph> enumerate_impl(int g, int n) {
    std::set<StableGraph> classes;
    const int maxV = 2 * g - 2 + n;
    for (int v = 1; v <= maxV; ++v) {
        // Unordered vertex pairs, loops included.
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < v; ++i)
            for (int j = i; j < v; ++j) pairs.emplace_back(i, j);
        const int maxE = std::min(3 * g - 3 + n, g + v - 1);

        for (int e = std::max(0, v - 1); e <= maxE; ++e) {
            const int betti = e - v + 1;
            const int genusBudget = g - betti;
            if (genusBudget < 0) continue;

            // Multisets of e edges = non-decreasing index sequences.
            std::vector<int> pick(e, 0);
            std::vector<std::pair<int, int>> edges(e);
            auto emit = [&]() {
                for (int i = 0; i < e; ++i) edges[i] = pairs[pick[i]];
                StableGraph base;
                base.genus.assign(v, 0);
                base.edges = edges;
                if (!connected(base)) return;

                // Distribute genusBudget over v vertices.
                std::vector<int> dist(v, 0);
                auto genusRec = [&](auto&& self, int idx, int left) -> void {
                    if (idx == v - 1) {
                        dist[idx] = left;
                        base.genus = dist;
                        // All leg maps [n] -> [v].
                        std::vector<int> legMap(n, 0);
                        auto legRec = [&](auto&& inner, int li) -> void {
                            if (li == n) {
                                base.legs = legMap;
                                bool stable = true;
                                for (int i = 0; i < v && stable; ++i)
                                    stable = 2 * base.genus[i] - 2 + base.valence(i) > 0;
                                if (stable) classes.insert(canonical_form(base));
                                return;
                            }
                            for (int t = 0; t < v; ++t) {
                                legMap[li] = t;
                                inner(inner, li + 1);
                            }
                        };
                        legRec(legRec, 0);
                        return;
                    }
                    for (int take = 0; take <= left; ++take) {
                        dist[idx] = take;
                        self(self, idx + 1, left - take);
                    }
                };
                genusRec(genusRec, 0, genusBudget);
            };
            // Iterate non-decreasing sequences over pair indices.
            auto seqRec = [&](auto&& self, int idx, int minPair) -> void {
                if (idx == e) {
                    emit();
                    return;
                }
                for (int p = minPair; p < static_cast<int>(pairs.size()); ++p) {
                    pick[idx] = p;
                    self(self, idx + 1, p);
                }
            };
            seqRec(seqRec, 0, 0);
        }
    }
    return std::vector<StableGraph>(classes.begin(), classes.end());
}

} // namespace

const std::vector<StableGraph>& enumerate(int g, int n) {
    if (g < 0 || n < 0) throw ConfigError("enumerate: negative genus or leg count");
    if (2 * g - 2 + n <= 0)
        throw UnstablePair("enumerate: (g, n) = (" + std::to_string(g) + ", " +
                           std::to_string(n) + ") is unstable");
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::unique_ptr<std::vector<StableGraph>>> cache;
    const auto key = std::make_pair(g, n);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto fresh = std::make_unique<std::vector<StableGraph>>(enumerate_impl(g, n));
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(key, std::move(fresh));
    (void)inserted;
    return *it->second;
}

long aut_order(const StableGraph& G) {
    const int v = G.num_vertices();
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    long vertexSym = 0;
    do {
        bool genusOk = true;
        for (int i = 0; i < v && genusOk; ++i) genusOk = G.genus[perm[i]] == G.genus[i];
        if (!genusOk) continue;
        bool legsOk = true;
        for (int lv : G.legs)
            if (perm[lv] != lv) {
                legsOk = false;
                break;
            }
        if (!legsOk) continue;
        std::vector<std::pair<int, int>> mapped;
        mapped.reserve(G.edges.size());
        for (const auto& [a, b] : G.edges) {
            const int pa = perm[a], pb = perm[b];
            mapped.emplace_back(std::min(pa, pb), std::max(pa, pb));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == G.edges) ++vertexSym;
    } while (std::next_permutation(perm.begin(), perm.end()));

    long total = vertexSym;
    // Parallel edges and loop half-edge swaps.
    std::map<std::pair<int, int>, long> mult;
    for (const auto& pr : G.edges) ++mult[pr];
    for (const auto& [pr, m] : mult) {
        for (long i = 2; i <= m; ++i) total *= i; // m!
        if (pr.first == pr.second)
            for (long i = 0; i < m; ++i) total *= 2; // half-edge swap per loop
    }
    return total;
}

std::string graph_str(const StableGraph& G) {
    std::string out = "V:[";
    for (int i = 0; i < G.num_vertices(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(G.genus[i]);
    }
    out += "] E:[";
    for (int i = 0; i < G.num_edges(); ++i) {
        if (i > 0) out += ",";
        out += "(" + std::to_string(G.edges[i].first) + "," +
               std::to_string(G.edges[i].second) + ")";
    }
    out += "] L:[";
    for (int i = 0; i < G.num_legs(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(G.legs[i]);
    }
    out += "]";
    return out;
}

} // namespace cyfeyn
