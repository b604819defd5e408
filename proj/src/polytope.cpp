#include "tiltfan/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tiltfan/combinatorics.hpp"

namespace tiltfan {

bool Polytope::integral() const {
    for (const auto& v : vertices)
        for (const auto& x : v)
            if (x.get_den() != 1) return false;
    return true;
}

std::vector<IntVector> Polytope::integer_vertices() const {
    if (!integral()) throw Error(ErrorKind::InvalidInput, "polytope has non-integral vertices");
    std::vector<IntVector> out;
    for (const auto& v : vertices) {
        IntVector w;
        for (const auto& x : v) w.push_back(x.get_num());
        out.push_back(w);
    }
    return out;
}

bool Polytope::origin_interior() const {
    if (facets.empty()) return false;
    return std::all_of(facets.begin(), facets.end(), [](const Facet& f) { return f.offset > 0; });
}

std::vector<RatVector> to_rational(const std::vector<IntVector>& pts) {
    std::vector<RatVector> out;
    for (const auto& p : pts) out.emplace_back(p.begin(), p.end());
    return out;
}

namespace {

struct Scaled {
    std::size_t dim = 0;
    Int scale = 1;
    std::vector<IntVector> pts;  // deduplicated, lex sorted
};

Scaled scale_points(const std::vector<RatVector>& in) {
    if (in.empty()) throw Error(ErrorKind::InvalidInput, "hull of an empty point set");
    Scaled s;
    s.dim = in[0].size();
    for (const auto& p : in)
        for (const auto& x : p) s.scale = lcm(s.scale, x.get_den());
    std::set<IntVector, decltype(&lex_less)> uniq(&lex_less);
    for (const auto& p : in) {
        if (p.size() != s.dim) throw Error(ErrorKind::InvalidInput, "points of mixed dimension");
        IntVector v;
        for (const auto& x : p) v.push_back(Rat(x * Rat(s.scale)).get_num());
        uniq.insert(v);
    }
    s.pts.assign(uniq.begin(), uniq.end());
    return s;
}

RatVector unscale(const IntVector& v, const Int& scale) {
    RatVector r;
    for (const auto& x : v) r.emplace_back(Rat(x, scale));
    for (auto& x : r) x.canonicalize();
    return r;
}

// Integer facet (a, b) with a.x <= b on scaled points -> stored form.
Facet make_facet(const IntVector& a, const Int& b, const Int& scale) {
    Facet f;
    if (b > 0) {
        for (const auto& x : a) f.normal.emplace_back(Rat(x * scale, b));
        f.offset = 1;
    } else {
        for (const auto& x : a) f.normal.emplace_back(x);
        f.offset = Rat(b, scale);
    }
    for (auto& x : f.normal) x.canonicalize();
    f.offset.canonicalize();
    return f;
}

Int cross(const IntVector& o, const IntVector& a, const IntVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Int sqdist(const IntVector& a, const IntVector& b) {
    return (a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]);
}

Polytope assemble(const Scaled& s, const std::vector<IntVector>& verts,
                  const std::vector<std::pair<IntVector, Int>>& facets) {
    Polytope p;
    p.dim = s.dim;
    for (const auto& v : verts) p.vertices.push_back(unscale(v, s.scale));
    for (const auto& [a, b] : facets) {
        Facet f = make_facet(a, b, s.scale);
        for (std::size_t k = 0; k < verts.size(); ++k)
            if (dot(a, verts[k]) == b) f.vertices.push_back(static_cast<int>(k));
        p.facets.push_back(std::move(f));
    }
    return p;
}

Polytope hull_rank1(const Scaled& s) {
    const IntVector& lo = s.pts.front();
    const IntVector& hi = s.pts.back();
    if (lo == hi) throw Error(ErrorKind::InvalidInput, "hull is not full-dimensional");
    return assemble(s, {lo, hi}, {{ivec({-1}), -lo[0]}, {ivec({1}), hi[0]}});
}

Polytope hull_gift_wrap(const Scaled& s) {
    const auto& P = s.pts;
    std::vector<IntVector> hull;
    std::size_t start = 0;  // lex-least point is extreme
    std::size_t cur = start;
    for (;;) {
        hull.push_back(P[cur]);
        std::size_t nxt = cur == 0 ? 1 : 0;
        for (std::size_t k = 0; k < P.size(); ++k) {
            if (k == cur) continue;
            Int c = cross(P[cur], P[nxt], P[k]);
            // keep every point on the left; on a tie prefer the farther one
            if (c < 0 || (c == 0 && sqdist(P[cur], P[k]) > sqdist(P[cur], P[nxt]))) nxt = k;
        }
        cur = nxt;
        if (cur == start) break;
        if (hull.size() > P.size()) throw Error(ErrorKind::InvalidInput, "gift wrapping did not close");
    }
    if (hull.size() < 3) throw Error(ErrorKind::InvalidInput, "hull is not full-dimensional");
    std::vector<std::pair<IntVector, Int>> facets;
    for (std::size_t k = 0; k < hull.size(); ++k) {
        const auto& a = hull[k];
        const auto& b = hull[(k + 1) % hull.size()];
        IntVector nrm = primitive(IntVector{b[1] - a[1], a[0] - b[0]});  // outward for a counterclockwise walk
        facets.emplace_back(nrm, dot(nrm, a));
    }
    return assemble(s, hull, facets);
}

Polytope hull_facet_enum(const Scaled& s) {
    const auto& P = s.pts;
    const std::size_t n = s.dim, m = P.size();
    if (m < n + 1) throw Error(ErrorKind::InvalidInput, "hull is not full-dimensional");
    std::set<std::pair<IntVector, Int>> found;
    std::vector<std::size_t> idx(n);
    for (std::size_t k = 0; k < n; ++k) idx[k] = k;
    for (;;) {
        std::vector<IntVector> rows;
        for (std::size_t k = 1; k < n; ++k) {
            IntVector d(n);
            for (std::size_t t = 0; t < n; ++t) d[t] = P[idx[k]][t] - P[idx[0]][t];
            rows.push_back(d);
        }
        auto ker = integer_kernel(IntMatrix::from_rows(rows, n));
        if (ker.size() == 1) {
            IntVector a = ker[0];
            Int b = dot(a, P[idx[0]]);
            bool le = true, ge = true;
            for (const auto& p : P) {
                Int v = dot(a, p);
                le &= v <= b;
                ge &= v >= b;
                if (!le && !ge) break;
            }
            if (ge && !le) {
                a = negate(a);
                b = -b;
            }
            if (le || ge) {
                if (le && ge) throw Error(ErrorKind::InvalidInput, "hull is not full-dimensional");
                found.emplace(a, b);
            }
        }
        // next n-subset
        std::size_t k = n;
        while (k > 0 && idx[k - 1] == m - n + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t t = k; t < n; ++t) idx[t] = idx[t - 1] + 1;
    }
    if (found.empty()) throw Error(ErrorKind::InvalidInput, "hull is not full-dimensional");
    std::vector<std::pair<IntVector, Int>> facets(found.begin(), found.end());
    std::vector<IntVector> verts;
    for (const auto& p : P) {
        std::vector<IntVector> normals;
        for (const auto& [a, b] : facets)
            if (dot(a, p) == b) normals.push_back(a);
        if (!normals.empty() && rank(IntMatrix::from_rows(normals, n)) == n) verts.push_back(p);
    }
    return assemble(s, verts, facets);
}

}  // namespace

Polytope convex_hull(const std::vector<RatVector>& pts) {
    Scaled s = scale_points(pts);
    if (s.dim == 0) throw Error(ErrorKind::InvalidInput, "hull in dimension 0");
    if (s.dim == 1) return hull_rank1(s);
    if (s.dim == 2) return hull_gift_wrap(s);
    return hull_facet_enum(s);
}

Polytope convex_hull_by_facets(const std::vector<RatVector>& pts) {
    Scaled s = scale_points(pts);
    if (s.dim < 2) return convex_hull(pts);
    return hull_facet_enum(s);
}

const char* wall_kind_name(WallKind k) {
    switch (k) {
        case WallKind::Zero: return "Zero";
        case WallKind::SingleRay: return "SingleRay";
        case WallKind::RaySum: return "RaySum";
        case WallKind::NonconvexPositive: return "NonconvexPositive";
        case WallKind::NotPositive: return "NotPositive";
    }
    return "?";
}

ConvexityReport convexity_report(const Fan& fan) {
    if (fan.complete != Completeness::Certified) throw Error(ErrorKind::IncompleteFan, "convexity needs a certified fan");
    ConvexityReport rep;
    for (std::size_t w = 0; w < fan.walls.size(); ++w) {
        const Wall& wall = fan.walls[w];
        auto free_of = [&](int c) {
            for (int r : fan.chambers[c])
                if (!std::binary_search(wall.shared.begin(), wall.shared.end(), r)) return r;
            return -1;
        };
        int va = free_of(wall.a), vb = free_of(wall.b);
        std::vector<IntVector> basis;
        for (int r : wall.shared) basis.push_back(fan.rays[r]);
        basis.push_back(fan.rays[va]);
        IntMatrix inv = invert_unimodular(IntMatrix::from_columns(basis, fan.rank));
        IntVector co = inv * add(fan.rays[va], fan.rays[vb]);
        if (co.back() != 0) throw Error(ErrorKind::InvalidInput, "wall free rays are not opposite");
        co.pop_back();
        WallReport wr;
        wr.wall = static_cast<int>(w);
        wr.coeffs = co;
        Int total = 0;
        bool nonneg = true;
        for (const auto& x : co) {
            total += x;
            nonneg &= x >= 0;
        }
        std::vector<int> support;
        for (std::size_t k = 0; k < co.size(); ++k)
            if (co[k] != 0) support.push_back(static_cast<int>(k));
        if (!nonneg) {
            wr.kind = WallKind::NotPositive;
        } else if (total == 0) {
            wr.kind = WallKind::Zero;
        } else if (total == 1) {
            wr.kind = WallKind::SingleRay;
            wr.i = wr.j = wall.shared[support[0]];
        } else if (total == 2) {
            wr.kind = WallKind::RaySum;
            wr.i = wall.shared[support.front()];
            wr.j = wall.shared[support.back()];
        } else {
            wr.kind = WallKind::NonconvexPositive;
        }
        if (wr.kind == WallKind::NotPositive || wr.kind == WallKind::NonconvexPositive) rep.convex = false;
        rep.walls.push_back(std::move(wr));
    }
    return rep;
}

Polytope g_polytope(const Fan& fan) {
    if (!convexity_report(fan).convex) throw Error(ErrorKind::NotConvex, "fan is not pairwise convex");
    return convex_hull(to_rational(fan.rays));
}

DualPolytope dual_polytope(const Fan& fan) {
    if (!convexity_report(fan).convex) throw Error(ErrorKind::NotConvex, "fan is not pairwise convex");
    DualPolytope d;
    RatVector ones(fan.rank, Rat(1));
    std::set<RatVector> uniq;
    for (const auto& ch : fan.chambers) {
        RatVector v = solve(fan.ray_matrix(ch).transpose(), ones);
        d.chamber_vertex.push_back(v);
        uniq.insert(v);
    }
    d.polytope = convex_hull(std::vector<RatVector>(uniq.begin(), uniq.end()));
    d.reflexive = d.polytope.integral();
    return d;
}

bool smooth_fano(const Polytope& p) {
    if (!p.origin_interior()) throw Error(ErrorKind::OriginNotInterior, "origin is not an interior point");
    auto verts = p.integer_vertices();
    for (const auto& f : p.facets) {
        if (f.vertices.size() != p.dim) return false;
        std::vector<IntVector> cols;
        for (int v : f.vertices) cols.push_back(verts[v]);
        if (abs(determinant(IntMatrix::from_columns(cols, p.dim))) != 1) return false;
    }
    return true;
}

std::vector<IntVector> canonical_rank2_rays(int cls) {
    std::vector<IntVector> quad = {ivec({1, 0}), ivec({0, 1}), ivec({-1, 0}), ivec({0, -1})};
    auto with = [&](std::vector<IntVector> base, std::initializer_list<IntVector> extra) {
        for (const auto& e : extra) base.push_back(e);
        return base;
    };
    switch (cls) {
        case 1: return quad;
        case 2: return with(quad, {ivec({-1, 1})});
        case 3: return with(quad, {ivec({-1, 1}), ivec({1, -1})});
        case 4: return with(quad, {ivec({-1, 1}), ivec({-2, 1})});
        case 5: return with(quad, {ivec({-1, 1}), ivec({-2, 1}), ivec({1, -1})});
        case 6: return with(quad, {ivec({-1, 1}), ivec({-2, 1}), ivec({1, -1}), ivec({2, -1})});
        case 7: return with(quad, {ivec({-1, 1}), ivec({-2, 1}), ivec({1, -1}), ivec({1, -2})});
        default: throw Error(ErrorKind::InvalidInput, "rank-2 class must be 1..7");
    }
}

namespace {

bool angle_less(const IntVector& a, const IntVector& b) {
    auto half = [](const IntVector& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return a[0] * b[1] - a[1] * b[0] > 0;
}

}  // namespace

Fan rank2_fan_from_rays(const std::vector<IntVector>& rays_in, const std::vector<IntVector>& base) {
    std::vector<IntVector> rays = rays_in;
    for (const auto& r : rays)
        if (r.size() != 2) throw Error(ErrorKind::NotRank2, "ray of length " + std::to_string(r.size()));
    std::sort(rays.begin(), rays.end(), angle_less);
    std::vector<std::vector<IntVector>> chambers;
    for (std::size_t k = 0; k < rays.size(); ++k) chambers.push_back({rays[k], rays[(k + 1) % rays.size()]});
    FanOptions opt;
    opt.assert_complete = true;
    return build_fan_by_rays(rays, chambers, base, opt);
}

Fan canonical_rank2_fan(int cls) {
    return rank2_fan_from_rays(canonical_rank2_rays(cls), {ivec({1, 0}), ivec({0, 1})});
}

Rank2Class rank2_classify(const Fan& fan) {
    if (fan.rank != 2) throw Error(ErrorKind::NotRank2, "classification is for rank-2 fans");
    Rank2Class out;
    out.convex = convexity_report(fan).convex;
    if (!out.convex) return out;
    IntMatrix binv = invert_unimodular(fan.ray_matrix(fan.chambers[fan.base]));
    std::vector<std::set<IntVector>> canon;
    for (int c = 1; c <= 7; ++c) {
        auto r = canonical_rank2_rays(c);
        canon.emplace_back(r.begin(), r.end());
    }
    for (int swap = 0; swap < 2; ++swap)
        for (int sign : {1, -1}) {
            IntMatrix t(2, 2);
            t(swap, 0) = sign;
            t(1 - swap, 1) = sign;
            IntMatrix m = t * binv;
            std::set<IntVector> img;
            for (const auto& r : fan.rays) img.insert(m * r);
            for (int c = 0; c < 7; ++c)
                if (img == canon[static_cast<std::size_t>(c)]) {
                    out.cls = c + 1;
                    return out;
                }
        }
    return out;
}

std::vector<IntVector> root_system_points(char type, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "rank must be positive");
    const std::size_t N = static_cast<std::size_t>(n);
    std::vector<IntVector> out;
    if (type == 'A') {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j) {
                IntVector v(N, 0);
                for (std::size_t k = i; k <= j; ++k) v[k] = 1;
                out.push_back(v);
                out.push_back(negate(v));
            }
        return out;
    }
    if (type != 'C') throw Error(ErrorKind::InvalidInput, "root polytope type must be A or C");
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i + 1 < N; ++i) {
        IntVector b(N, 0);
        b[i] = 1;
        b[i + 1] = -1;
        basis.push_back(b);
    }
    IntVector last(N, 0);
    last[N - 1] = 2;
    basis.push_back(last);
    IntMatrix bm = IntMatrix::from_columns(basis, N);
    std::vector<IntVector> roots;
    for (std::size_t u = 0; u < N; ++u) {
        for (int s : {1, -1}) {
            IntVector r(N, 0);
            r[u] = 2 * s;
            roots.push_back(r);
        }
        for (std::size_t v = u + 1; v < N; ++v)
            for (int s : {1, -1})
                for (int t : {1, -1}) {
                    IntVector r(N, 0);
                    r[u] = s;
                    r[v] = t;
                    roots.push_back(r);
                }
    }
    for (const auto& r : roots) {
        RatVector c = solve(bm, RatVector(r.begin(), r.end()));
        IntVector v;
        for (const auto& x : c) {
            if (x.get_den() != 1) throw Error(ErrorKind::InvalidInput, "root outside the lattice");
            v.push_back(x.get_num());
        }
        out.push_back(v);
    }
    return out;
}

Polytope root_polytope(char type, int n) {
    return convex_hull(to_rational(root_system_points(type, n)));
}

bool maps_vertices(const IntMatrix& m, const Polytope& p, const Polytope& q) {
    auto pv = p.integer_vertices();
    auto qv = q.integer_vertices();
    std::set<IntVector> target(qv.begin(), qv.end()), img;
    for (const auto& v : pv) img.insert(m * v);
    return img == target;
}

std::optional<IntMatrix> lattice_iso(const Polytope& p, const Polytope& q) {
    if (p.dim > 3 || q.dim > 3) throw Error(ErrorKind::DimensionTooLarge, "lattice isomorphism search is limited to rank 3");
    if (p.dim != q.dim || p.vertices.size() != q.vertices.size()) return std::nullopt;
    const std::size_t n = p.dim;
    auto pv = p.integer_vertices();
    auto qv = q.integer_vertices();
    // anchor basis: greedy independent vertices of P
    std::vector<IntVector> anchor;
    for (const auto& v : pv) {
        auto trial = anchor;
        trial.push_back(v);
        if (rank(IntMatrix::from_columns(trial, n)) == trial.size()) anchor = trial;
        if (anchor.size() == n) break;
    }
    if (anchor.size() != n) return std::nullopt;
    IntMatrix a = IntMatrix::from_columns(anchor, n);
    std::vector<RatVector> ainv_cols;
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n, Rat(0));
        e[j] = 1;
        ainv_cols.push_back(solve(a, e));
    }
    std::vector<std::size_t> pick(n, 0);
    std::set<IntVector> target(qv.begin(), qv.end());
    const std::size_t m = qv.size();
    for (;;) {
        bool distinct = true;
        for (std::size_t i = 0; i < n && distinct; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (pick[i] == pick[j]) distinct = false;
        if (distinct) {
            // M = Qsel * A^{-1}
            IntMatrix mm(n, n);
            bool integral = true;
            for (std::size_t i = 0; i < n && integral; ++i)
                for (std::size_t j = 0; j < n && integral; ++j) {
                    Rat s = 0;
                    for (std::size_t k = 0; k < n; ++k) s += Rat(qv[pick[k]][i]) * ainv_cols[j][k];
                    if (s.get_den() != 1) integral = false;
                    else mm(i, j) = s.get_num();
                }
            if (integral && abs(determinant(mm)) == 1) {
                bool ok = true;
                for (const auto& v : pv)
                    if (!target.count(mm * v)) {
                        ok = false;
                        break;
                    }
                if (ok) return mm;
            }
        }
        std::size_t k = n;
        while (k > 0 && pick[k - 1] == m - 1) pick[--k] = 0;
        if (k == 0) break;
        ++pick[k - 1];
    }
    return std::nullopt;
}

bool invariants_match(const Fan& a, const Fan& b) {
    if (a.rank != b.rank) return false;
    if (f_vector(a) != f_vector(b)) return false;
    auto ra = convexity_report(a), rb = convexity_report(b);
    if (ra.convex != rb.convex) return false;
    if (ra.convex && g_polytope(a).vertices.size() != g_polytope(b).vertices.size()) return false;
    for (long l = 1; l <= 3; ++l)
        if (ehrhart_bruteforce(a, l) != ehrhart_bruteforce(b, l)) return false;
    return true;
}

Rat euclidean_volume(const Fan& fan) {
    Rat vol = 0;
    Int fact = 1;
    for (std::size_t k = 2; k <= fan.rank; ++k) fact *= static_cast<unsigned long>(k);
    for (const auto& ch : fan.chambers) vol += Rat(abs(determinant(fan.ray_matrix(ch))), fact);
    vol.canonicalize();
    return vol;
}

}  // namespace tiltfan
