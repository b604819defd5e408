#include "tiltfan/brauer.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace tiltfan {

BrauerGraph make_brauer(const std::vector<std::string>& half_edges,
                        const std::vector<std::vector<std::string>>& sigma_cycles,
                        const std::vector<std::pair<std::string, std::string>>& bar_pairs) {
    BrauerGraph g;
    g.names = half_edges;
    const std::size_t H = half_edges.size();
    std::map<std::string, int> id;
    for (std::size_t i = 0; i < H; ++i)
        if (!id.emplace(half_edges[i], static_cast<int>(i)).second)
            throw Error(ErrorKind::InvalidInput, "duplicate half-edge name " + half_edges[i]);
    auto lookup = [&](const std::string& s) {
        auto it = id.find(s);
        if (it == id.end()) throw Error(ErrorKind::InvalidInput, "unknown half-edge " + s);
        return it->second;
    };
    g.sigma.assign(H, -1);
    g.bar.assign(H, -1);
    for (const auto& cyc : sigma_cycles) {
        if (cyc.empty()) throw Error(ErrorKind::InvalidInput, "empty sigma cycle");
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int h = lookup(cyc[k]);
            if (g.sigma[h] != -1) throw Error(ErrorKind::InvalidInput, "half-edge " + cyc[k] + " in two sigma cycles");
            g.sigma[h] = lookup(cyc[(k + 1) % cyc.size()]);
        }
    }
    for (const auto& [a, b] : bar_pairs) {
        int x = lookup(a), y = lookup(b);
        if (x == y) throw Error(ErrorKind::InvalidInput, "bar has a fixed point " + a);
        if (g.bar[x] != -1 || g.bar[y] != -1) throw Error(ErrorKind::InvalidInput, "half-edge in two bar pairs");
        g.bar[x] = y;
        g.bar[y] = x;
        g.edge.resize(H, -1);
        g.edge[x] = g.edge[y] = static_cast<int>(g.edges.size());
        g.edges.emplace_back(x, y);
    }
    for (std::size_t h = 0; h < H; ++h) {
        if (g.sigma[h] == -1) throw Error(ErrorKind::InvalidInput, "half-edge " + half_edges[h] + " missing from sigma");
        if (g.bar[h] == -1) throw Error(ErrorKind::InvalidInput, "half-edge " + half_edges[h] + " missing from bar");
    }
    g.vertex.assign(H, -1);
    g.orbit_pos.assign(H, -1);
    for (std::size_t h = 0; h < H; ++h) {
        if (g.vertex[h] != -1) continue;
        std::vector<int> orb;
        int x = static_cast<int>(h);
        do {
            g.vertex[x] = static_cast<int>(g.orbits.size());
            g.orbit_pos[x] = static_cast<int>(orb.size());
            orb.push_back(x);
            x = g.sigma[x];
        } while (x != static_cast<int>(h));
        g.orbits.push_back(orb);
    }
    return g;
}

const char* graph_type_name(GraphType t) {
    switch (t) {
        case GraphType::Tree: return "Tree";
        case GraphType::OddCycle: return "OddCycle";
        case GraphType::Other: return "Other";
    }
    return "?";
}

GraphType classify_graph(const BrauerGraph& g) {
    const std::size_t V = g.num_vertices(), E = g.num_edges();
    std::vector<int> parent(V);
    for (std::size_t i = 0; i < V; ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::size_t comps = V;
    for (auto [a, b] : g.edges) {
        int x = find(g.vertex[a]), y = find(g.vertex[b]);
        if (x != y) parent[x] = y, --comps;
    }
    if (comps != 1) throw Error(ErrorKind::Disconnected, std::to_string(comps) + " components");
    if (E + 1 == V) return GraphType::Tree;
    if (E != V) return GraphType::Other;
    // one cycle: strip leaves, what remains is the cycle
    std::vector<int> deg(V, 0);
    std::vector<bool> alive(E, true);
    for (auto [a, b] : g.edges) ++deg[g.vertex[a]], ++deg[g.vertex[b]];
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t e = 0; e < E; ++e) {
            if (!alive[e]) continue;
            int u = g.vertex[g.edges[e].first], v = g.vertex[g.edges[e].second];
            if (u != v && (deg[u] == 1 || deg[v] == 1)) {
                alive[e] = false;
                --deg[u], --deg[v];
                changed = true;
            }
        }
    }
    std::size_t len = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
    return len % 2 == 1 ? GraphType::OddCycle : GraphType::Other;
}

std::string walk_string(const BrauerGraph& g, const SignedWalk& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.half_edges.size(); ++i)
        s += (i ? "," : "") + g.names[w.half_edges[i]] + (w.signs[i] > 0 ? "+" : "-");
    return s + ")";
}

namespace {

IntVector walk_class(const BrauerGraph& g, const std::vector<int>& hs, const std::vector<int>& eps) {
    IntVector c(g.num_edges(), 0);
    for (std::size_t i = 0; i < hs.size(); ++i) c[g.edge[hs[i]]] += eps[i];
    return c;
}

std::vector<int> reversed_walk(const BrauerGraph& g, const std::vector<int>& hs) {
    std::vector<int> r;
    for (auto it = hs.rbegin(); it != hs.rend(); ++it) r.push_back(g.bar[*it]);
    return r;
}

// A half-edge of the extended order: v = 0 real, +1 / -1 for vr_+(h) / vr_-(h).
struct XH {
    int h = -1;
    int v = 0;
    bool operator==(const XH& o) const { return h == o.h && v == o.v; }
    bool operator!=(const XH& o) const { return !(*this == o); }
};

struct Extended {
    std::vector<XH> x;   // positions 0..m+1, virtual at both ends
    std::vector<int> s;  // signs at the same positions
};

Extended extend(const BrauerGraph& g, const std::vector<int>& hs, const std::vector<int>& eps) {
    const std::size_t m = hs.size();
    Extended e;
    e.x.push_back(XH{hs[0], -eps[0]});
    e.s.push_back(-eps[0]);
    for (std::size_t i = 0; i < m; ++i) {
        e.x.push_back(XH{hs[i], 0});
        e.s.push_back(eps[i]);
    }
    e.x.push_back(XH{g.bar[hs[m - 1]], -eps[m - 1]});
    e.s.push_back(-eps[m - 1]);
    return e;
}

XH xbar(const BrauerGraph& g, const XH& a) { return a.v == 0 ? XH{g.bar[a.h], 0} : a; }
int xvertex(const BrauerGraph& g, const XH& a) { return g.vertex[a.h]; }
int slot(const BrauerGraph& g, const XH& a) { return 3 * g.orbit_pos[a.h] + 1 + a.v; }

// (a, b, c) in counterclockwise cyclic order around their common vertex
bool ccw(const BrauerGraph& g, const XH& a, const XH& b, const XH& c) {
    int p = slot(g, a), q = slot(g, b), r = slot(g, c);
    return (p < q && q < r) || (q < r && r < p) || (r < p && p < q);
}

bool nc0(const BrauerGraph& g, const SignedWalk& a, const SignedWalk& b) {
    auto ends = [&](const SignedWalk& w) {
        return std::array<std::pair<int, int>, 2>{
            std::make_pair(g.vertex[w.half_edges.front()], w.signs.front()),
            std::make_pair(g.vertex[g.bar[w.half_edges.back()]], w.signs.back())};
    };
    for (auto [u, su] : ends(a))
        for (auto [v, sv] : ends(b))
            if (u == v && su != sv) return false;
    return true;
}

// NC1 and NC2 over the maximal common subwalks of x and y.
bool common_subwalks_ok(const BrauerGraph& g, const Extended& x, const Extended& y, bool skip_identity) {
    const int m = static_cast<int>(x.x.size()) - 2, l = static_cast<int>(y.x.size()) - 2;
    for (int d = -(m - 1); d <= l - 1; ++d) {
        if (skip_identity && d == 0) continue;
        int i = std::max(1, 1 - d);
        while (i <= m && i + d <= l) {
            if (x.x[i] != y.x[i + d]) {
                ++i;
                continue;
            }
            int start = i;
            while (i <= m && i + d <= l && x.x[i] == y.x[i + d]) ++i;
            const int r = i - start, j = start + d;
            if (x.s[start] != y.s[j]) return false;  // NC1
            XH A = xbar(g, x.x[start - 1]), B = xbar(g, y.x[j - 1]);
            XH C = x.x[start + r], D = y.x[j + r];
            bool proper = !(A.v != 0 && B.v != 0) && !(C.v != 0 && D.v != 0);
            if (!proper) continue;
            XH t1 = x.x[start];
            XH tr = xbar(g, x.x[start + r - 1]);
            bool U = ccw(g, t1, A, B);
            bool V = ccw(g, tr, D, C);
            if (U != V) return false;  // NC2
        }
    }
    return true;
}

bool nc3(const BrauerGraph& g, const Extended& x, const Extended& y, bool same) {
    const int m = static_cast<int>(x.x.size()) - 2, l = static_cast<int>(y.x.size()) - 2;
    for (int i = 1; i <= m + 1; ++i) {
        XH a = xbar(g, x.x[i - 1]), b = x.x[i];
        int sa = x.s[i - 1], sb = x.s[i];
        int vtx = xvertex(g, b);
        for (int j = 1; j <= l + 1; ++j) {
            if (same && i == j) continue;
            XH c = xbar(g, y.x[j - 1]), d = y.x[j];
            if (xvertex(g, d) != vtx) continue;
            if (a == c || a == d || b == c || b == d) continue;  // not intersecting
            int virt = (a.v != 0) + (b.v != 0) + (c.v != 0) + (d.v != 0);
            if (virt > 1) continue;
            int sc = y.s[j - 1], sd = y.s[j];
            // cyclic positions of the four half-edges
            std::array<std::pair<int, int>, 4> pts = {std::make_pair(slot(g, a), 0), std::make_pair(slot(g, b), 1),
                                                      std::make_pair(slot(g, c), 2), std::make_pair(slot(g, d), 3)};
            std::sort(pts.begin(), pts.end());
            int posn[4];
            for (int k = 0; k < 4; ++k) posn[pts[k].second] = k;
            auto adjacent = [](int p, int q) { return (p - q + 4) % 4 == 1 || (q - p + 4) % 4 == 1; };
            if (!adjacent(posn[0], posn[1])) return false;  // interleaved
            // reading of a pair in counterclockwise order: (first sign, second sign)
            auto reads_minus_plus = [](int pp, int pq, int sp, int sq) {
                bool p_first = (pq - pp + 4) % 4 == 1;
                int first = p_first ? sp : sq, second = p_first ? sq : sp;
                return first < 0 && second > 0;
            };
            if (reads_minus_plus(posn[0], posn[1], sa, sb) && reads_minus_plus(posn[2], posn[3], sc, sd)) return false;
        }
    }
    return true;
}

bool admissible_impl(const BrauerGraph& g, const SignedWalk& a, const SignedWalk& b, bool same) {
    if (!nc0(g, a, b)) return false;
    Extended xa = extend(g, a.half_edges, a.signs);
    Extended yb = extend(g, b.half_edges, b.signs);
    std::vector<int> rb = reversed_walk(g, b.half_edges);
    std::vector<int> rs(b.signs.rbegin(), b.signs.rend());
    Extended yr = extend(g, rb, rs);
    if (!common_subwalks_ok(g, xa, yb, same)) return false;
    if (!common_subwalks_ok(g, xa, yr, false)) return false;
    return nc3(g, xa, yb, same);
}

}  // namespace

bool pair_admissible(const BrauerGraph& g, const SignedWalk& a, const SignedWalk& b) {
    bool same = a.half_edges == b.half_edges && a.signs == b.signs;
    return admissible_impl(g, a, b, same);
}

std::vector<SignedWalk> signed_walks(const BrauerGraph& g) {
    const std::size_t cap = 2 * g.num_edges();
    std::vector<SignedWalk> out;
    std::vector<int> hs, eps;
    std::vector<int> first_pos(g.num_edges(), -1), uses(g.num_edges(), 0);
    std::function<void()> dfs = [&]() {
        auto rev = reversed_walk(g, hs);
        if (hs <= rev) out.push_back(SignedWalk{hs, eps, walk_class(g, hs, eps)});
        if (hs.size() == cap) return;
        int last = hs.back();
        int v = g.vertex[g.bar[last]];
        int sign = -eps.back();
        for (int h : g.orbits[v]) {
            if (h == g.bar[last]) continue;
            int e = g.edge[h];
            if (uses[e] == 2) continue;
            // an edge seen before must carry the same sign again
            if (first_pos[e] >= 0 && eps[first_pos[e]] != sign) continue;
            bool fresh = first_pos[e] < 0;
            if (fresh) first_pos[e] = static_cast<int>(hs.size());
            ++uses[e];
            hs.push_back(h);
            eps.push_back(sign);
            dfs();
            hs.pop_back();
            eps.pop_back();
            --uses[e];
            if (fresh) first_pos[e] = -1;
        }
    };
    for (std::size_t h = 0; h < g.names.size(); ++h)
        for (int s : {1, -1}) {
            int e = g.edge[h];
            hs = {static_cast<int>(h)};
            eps = {s};
            first_pos[e] = 0;
            uses[e] = 1;
            dfs();
            first_pos[e] = -1;
            uses[e] = 0;
        }
    return out;
}

std::vector<SignedWalk> self_admissible_walks(const BrauerGraph& g) {
    GraphType t = classify_graph(g);
    if (t == GraphType::Other) throw Error(ErrorKind::UnsupportedGraph, "only Brauer trees and odd-cycles are supported");
    std::vector<SignedWalk> out;
    for (auto& w : signed_walks(g))
        if (admissible_impl(g, w, w, true)) out.push_back(std::move(w));
    return out;
}

BrauerFan brauer_fan(const BrauerGraph& g) {
    BrauerFan bf;
    bf.walks = self_admissible_walks(g);
    const std::size_t N = bf.walks.size(), n = g.num_edges();
    std::vector<std::vector<bool>> adj(N, std::vector<bool>(N, false));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            adj[i][j] = adj[j][i] = pair_admissible(g, bf.walks[i], bf.walks[j]);

    // Bron-Kerbosch with pivoting; keep cliques of size n
    std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
        [&](std::vector<int>& R, std::vector<int> P, std::vector<int> X) {
            if (P.empty() && X.empty()) {
                if (R.size() == n) {
                    auto c = R;
                    std::sort(c.begin(), c.end());
                    bf.cliques.push_back(c);
                }
                return;
            }
            int pivot = -1;
            std::size_t best = 0;
            for (const auto* S : {&P, &X})
                for (int u : *S) {
                    std::size_t cnt = 0;
                    for (int p : P) cnt += adj[u][p];
                    if (pivot < 0 || cnt > best) pivot = u, best = cnt;
                }
            std::vector<int> cand;
            for (int p : P)
                if (!adj[pivot][p]) cand.push_back(p);
            for (int v : cand) {
                std::vector<int> P2, X2;
                for (int p : P)
                    if (adj[v][p]) P2.push_back(p);
                for (int x : X)
                    if (adj[v][x]) X2.push_back(x);
                R.push_back(v);
                bk(R, P2, X2);
                R.pop_back();
                P.erase(std::find(P.begin(), P.end(), v));
                X.push_back(v);
            }
        };
    std::vector<int> R, P(N), X;
    for (std::size_t i = 0; i < N; ++i) P[i] = static_cast<int>(i);
    bk(R, P, X);
    std::sort(bf.cliques.begin(), bf.cliques.end());

    std::vector<IntVector> rays;
    for (const auto& w : bf.walks) rays.push_back(w.cls);
    std::vector<Cone> chambers(bf.cliques.begin(), bf.cliques.end());
    Cone base;
    for (std::size_t e = 0; e < n; ++e) {
        IntVector unit(n, 0);
        unit[e] = 1;
        auto it = std::find(rays.begin(), rays.end(), unit);
        if (it == rays.end()) throw Error(ErrorKind::InvalidInput, "positive edge walk is missing");
        base.push_back(static_cast<int>(it - rays.begin()));
    }
    std::sort(base.begin(), base.end());
    auto bit = std::find(chambers.begin(), chambers.end(), base);
    if (bit == chambers.end()) throw Error(ErrorKind::InvalidInput, "positive edge walks do not form a chamber");
    FanOptions opt;
    opt.assert_complete = true;
    bf.fan = build_fan(rays, chambers, static_cast<int>(bit - chambers.begin()), opt);
    return bf;
}

Fan chambers_by_cliques(const BrauerGraph& g) { return brauer_fan(g).fan; }

IntVector RootMap::apply(const IntVector& cls) const {
    IntVector out(orientation.size(), 0);
    for (std::size_t e = 0; e < cls.size(); ++e)
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += cls[e] * edge_image[e][k];
    return out;
}

RootMap root_map(const BrauerGraph& g) {
    GraphType t = classify_graph(g);
    if (t == GraphType::Other) throw Error(ErrorKind::UnsupportedGraph, "only Brauer trees and odd-cycles are supported");
    const std::size_t V = g.num_vertices(), E = g.num_edges();
    RootMap rm;
    rm.orientation.assign(V, 0);
    std::vector<bool> tree_edge(E, false);
    int root = g.vertex[0];
    rm.orientation[root] = 1;
    std::deque<int> q{root};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int h : g.orbits[u]) {
            int v = g.vertex[g.bar[h]];
            if (rm.orientation[v] != 0) continue;
            rm.orientation[v] = -rm.orientation[u];
            tree_edge[g.edge[h]] = true;
            q.push_back(v);
        }
    }
    rm.edge_image.assign(E, IntVector(V, 0));
    for (std::size_t e = 0; e < E; ++e) {
        int h = g.edges[e].first;
        int u = g.vertex[h], v = g.vertex[g.bar[h]];
        int o = rm.orientation[u];
        if (tree_edge[e]) {
            rm.edge_image[e][u] += o;
            rm.edge_image[e][v] -= o;
        } else {
            rm.excluded_edges.push_back(static_cast<int>(e));
            rm.edge_image[e][u] += o;
            rm.edge_image[e][v] += o;
        }
    }
    return rm;
}

std::vector<IntVector> graph_root_system(const BrauerGraph& g) {
    GraphType t = classify_graph(g);
    const std::size_t V = g.num_vertices();
    std::vector<IntVector> out;
    if (t == GraphType::Tree) {
        for (std::size_t u = 0; u < V; ++u)
            for (std::size_t v = 0; v < V; ++v)
                if (u != v) {
                    IntVector r(V, 0);
                    r[u] = 1;
                    r[v] = -1;
                    out.push_back(r);
                }
    } else if (t == GraphType::OddCycle) {
        for (std::size_t u = 0; u < V; ++u) {
            for (int s : {2, -2}) {
                IntVector r(V, 0);
                r[u] = s;
                out.push_back(r);
            }
            for (std::size_t v = u + 1; v < V; ++v)
                for (int s : {1, -1})
                    for (int t2 : {1, -1}) {
                        IntVector r(V, 0);
                        r[u] = s;
                        r[v] = t2;
                        out.push_back(r);
                    }
        }
    } else {
        throw Error(ErrorKind::UnsupportedGraph, "no root system for this graph");
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace tiltfan
