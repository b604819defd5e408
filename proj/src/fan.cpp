#include "tiltfan/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace tiltfan {

const char* completeness_name(Completeness c) {
    switch (c) {
        case Completeness::Certified: return "certified";
        case Completeness::Unknown: return "unknown";
        case Completeness::Incomplete: return "incomplete";
    }
    return "unknown";
}

IntMatrix Fan::ray_matrix(const Cone& c) const {
    std::vector<IntVector> cols;
    for (int i : c) cols.push_back(rays[i]);
    return IntMatrix::from_columns(cols, rank);
}

IntMatrix Fan::base_matrix() const {
    std::vector<IntVector> cols;
    for (int i : chambers[base]) cols.push_back(rays[i]);
    std::sort(cols.begin(), cols.end(), [](const IntVector& a, const IntVector& b) { return lex_less(b, a); });
    return IntMatrix::from_columns(cols, rank);
}

std::vector<IntVector> Fan::base_coordinates() const {
    IntMatrix inv = invert_unimodular(base_matrix());
    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (const auto& r : rays) out.push_back(inv * r);
    return out;
}

int Fan::ray_index(const IntVector& r) const {
    auto it = std::lower_bound(rays.begin(), rays.end(), r, lex_less);
    if (it == rays.end() || *it != r) return -1;
    return static_cast<int>(it - rays.begin());
}

int Fan::chamber_index(const Cone& c) const {
    auto it = std::lower_bound(chambers.begin(), chambers.end(), c);
    if (it == chambers.end() || *it != c) return -1;
    return static_cast<int>(it - chambers.begin());
}

IntVector wall_normal(const Fan& fan, const Cone& shared) {
    std::vector<IntVector> rows;
    for (int i : shared) rows.push_back(fan.rays[i]);
    auto ker = integer_kernel(IntMatrix::from_rows(rows, fan.rank));
    if (ker.size() != 1) throw Error(ErrorKind::InvalidInput, "wall rays are dependent");
    return ker[0];
}

namespace {

Int sgn(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

bool connected(std::size_t nodes, const std::vector<Wall>& walls) {
    if (nodes == 0) return true;
    std::vector<int> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = nodes;
    for (const auto& w : walls) {
        int a = find(w.a), b = find(w.b);
        if (a != b) parent[a] = b, --comps;
    }
    return comps == 1;
}

}  // namespace

Fan build_fan(std::vector<IntVector> rays, std::vector<Cone> chambers, int base, const FanOptions& opt) {
    Fan fan;
    if (chambers.empty()) throw Error(ErrorKind::InvalidInput, "fan without chambers");
    if (base < 0 || static_cast<std::size_t>(base) >= chambers.size())
        throw Error(ErrorKind::InvalidInput, "base chamber index out of range");
    fan.rank = rays.empty() ? 0 : rays[0].size();
    const std::size_t n = fan.rank;

    for (const auto& r : rays) {
        if (r.size() != n) throw Error(ErrorKind::InvalidInput, "rays of mixed length");
        if (is_zero(r)) throw Error(ErrorKind::ZeroVector, "zero ray");
    }
    std::vector<int> order(rays.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(rays[a], rays[b]); });
    std::vector<int> newpos(rays.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        newpos[order[k]] = static_cast<int>(k);
        fan.rays.push_back(rays[order[k]]);
        if (k > 0 && fan.rays[k] == fan.rays[k - 1])
            throw Error(ErrorKind::InvalidInput, "duplicate ray " + to_string(fan.rays[k]));
    }

    for (auto& c : chambers) {
        if (c.size() != n) throw Error(ErrorKind::InvalidInput, "chamber with wrong number of rays");
        for (int& i : c) {
            if (i < 0 || static_cast<std::size_t>(i) >= rays.size())
                throw Error(ErrorKind::InvalidInput, "ray index out of range");
            i = newpos[i];
        }
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            throw Error(ErrorKind::InvalidInput, "chamber repeats a ray");
    }
    Cone base_cone = chambers[base];
    std::sort(chambers.begin(), chambers.end());
    if (std::adjacent_find(chambers.begin(), chambers.end()) != chambers.end())
        throw Error(ErrorKind::InvalidInput, "duplicate chamber");
    fan.chambers = std::move(chambers);
    fan.base = fan.chamber_index(base_cone);

    for (std::size_t c = 0; c < fan.chambers.size(); ++c) {
        Int d = determinant(fan.ray_matrix(fan.chambers[c]));
        if (abs(d) != 1)
            throw Error(ErrorKind::NonUnimodularChamber, "chamber " + std::to_string(c) + " has determinant " + d.get_str());
    }
    // rays of a unimodular chamber are primitive already; this catches unused ones
    for (const auto& r : fan.rays)
        if (primitive(r) != r) throw Error(ErrorKind::InvalidInput, "ray " + to_string(r) + " is not primitive");

    if (n > 0) {
        auto coords = fan.base_coordinates();
        for (std::size_t c = 0; c < fan.chambers.size(); ++c) {
            for (std::size_t k = 0; k < n; ++k) {
                bool pos = false, neg = false;
                for (int r : fan.chambers[c]) {
                    pos |= coords[r][k] > 0;
                    neg |= coords[r][k] < 0;
                }
                if (pos && neg)
                    throw Error(ErrorKind::SignCoherenceViolation,
                                "chamber " + std::to_string(c) + " mixes signs in base coordinate " + std::to_string(k + 1));
            }
        }
    }

    std::map<Cone, std::vector<int>> facets;
    for (std::size_t c = 0; c < fan.chambers.size(); ++c) {
        const Cone& ch = fan.chambers[c];
        for (std::size_t drop = 0; drop < ch.size(); ++drop) {
            Cone f;
            for (std::size_t k = 0; k < ch.size(); ++k)
                if (k != drop) f.push_back(ch[k]);
            facets[f].push_back(static_cast<int>(c));
        }
    }
    for (const auto& [f, cs] : facets) {
        if (cs.size() == 1) {
            fan.dangling.push_back(f);
            continue;
        }
        if (cs.size() > 2)
            throw Error(ErrorKind::InvalidInput, "facet shared by " + std::to_string(cs.size()) + " chambers");
        IntVector normal = wall_normal(fan, f);
        auto free_ray = [&](int c) {
            for (int r : fan.chambers[c])
                if (!std::binary_search(f.begin(), f.end(), r)) return r;
            return -1;
        };
        Int sa = sgn(dot(normal, fan.rays[free_ray(cs[0])]));
        Int sb = sgn(dot(normal, fan.rays[free_ray(cs[1])]));
        if (sa * sb != -1)
            throw Error(ErrorKind::InvalidInput,
                        "chambers " + std::to_string(cs[0]) + " and " + std::to_string(cs[1]) + " overlap across a facet");
        fan.walls.push_back(Wall{cs[0], cs[1], f});
    }

    if (opt.assert_complete && !fan.dangling.empty()) {
        Cone d = fan.dangling.front();
        std::string s;
        for (int r : d) s += to_string(fan.rays[r]);
        throw Error(ErrorKind::DanglingWall, "facet {" + s + "} lies in a single chamber");
    }
    bool conn = connected(fan.chambers.size(), fan.walls);
    if (opt.known_partial)
        fan.complete = Completeness::Incomplete;
    else if (fan.dangling.empty() && conn)
        fan.complete = Completeness::Certified;
    else
        fan.complete = Completeness::Unknown;
    if (opt.assert_complete && !conn) throw Error(ErrorKind::IncompleteFan, "wall graph is disconnected");

    if (opt.paranoid && n <= 3) {
        if (auto bad = paranoid_check(fan))
            throw Error(ErrorKind::InvalidInput, "chambers " + std::to_string(bad->first) + " and " +
                                                     std::to_string(bad->second) + " intersect outside a common face");
    }
    return fan;
}

Fan build_fan_by_rays(const std::vector<IntVector>& rays, const std::vector<std::vector<IntVector>>& chambers,
                      const std::vector<IntVector>& base, const FanOptions& opt) {
    std::map<IntVector, int> idx;
    for (std::size_t i = 0; i < rays.size(); ++i) idx[rays[i]] = static_cast<int>(i);
    auto cone_of = [&](const std::vector<IntVector>& vs) {
        Cone c;
        for (const auto& v : vs) {
            auto it = idx.find(v);
            if (it == idx.end()) throw Error(ErrorKind::InvalidInput, "chamber ray " + to_string(v) + " not in ray list");
            c.push_back(it->second);
        }
        std::sort(c.begin(), c.end());
        return c;
    };
    std::vector<Cone> cs;
    for (const auto& ch : chambers) cs.push_back(cone_of(ch));
    Cone b = cone_of(base);
    int bi = -1;
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] == b) bi = static_cast<int>(i);
    if (bi < 0) throw Error(ErrorKind::InvalidInput, "base is not a chamber");
    return build_fan(rays, cs, bi, opt);
}

std::optional<std::pair<int, int>> paranoid_check(const Fan& fan) {
    const std::size_t n = fan.rank;
    for (std::size_t a = 0; a < fan.chambers.size(); ++a) {
        for (std::size_t b = a + 1; b < fan.chambers.size(); ++b) {
            const Cone& s = fan.chambers[a];
            const Cone& t = fan.chambers[b];
            // columns: rays of s, then negated rays of t; a nonnegative circuit is a
            // point of s meeting t, improper unless carried by common rays only
            std::vector<IntVector> cols;
            std::vector<bool> common;
            for (int r : s) {
                cols.push_back(fan.rays[r]);
                common.push_back(std::binary_search(t.begin(), t.end(), r));
            }
            for (int r : t) {
                cols.push_back(negate(fan.rays[r]));
                common.push_back(std::binary_search(s.begin(), s.end(), r));
            }
            const std::size_t m = cols.size();
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                std::size_t sz = static_cast<std::size_t>(__builtin_popcount(mask));
                if (sz < 2 || sz > n + 1) continue;
                bool noncommon = false;
                std::vector<IntVector> sub;
                for (std::size_t k = 0; k < m; ++k)
                    if (mask >> k & 1u) {
                        sub.push_back(cols[k]);
                        noncommon |= !common[k];
                    }
                if (!noncommon) continue;
                auto ker = integer_kernel(IntMatrix::from_columns(sub, n));
                if (ker.size() != 1) continue;
                const auto& y = ker[0];
                bool allpos = std::all_of(y.begin(), y.end(), [](const Int& x) { return x > 0; });
                bool allneg = std::all_of(y.begin(), y.end(), [](const Int& x) { return x < 0; });
                if (allpos || allneg) return std::make_pair(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    return std::nullopt;
}

std::set<Cone> faces(const Fan& fan, std::size_t i) {
    if (fan.complete != Completeness::Certified) throw Error(ErrorKind::IncompleteFan, "faces needs a certified fan");
    if (i > fan.rank) throw Error(ErrorKind::InvalidInput, "face dimension exceeds rank");
    std::set<Cone> out;
    for (const auto& ch : fan.chambers) {
        std::vector<bool> pick(ch.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(i), true);
        do {
            Cone f;
            for (std::size_t k = 0; k < ch.size(); ++k)
                if (pick[k]) f.push_back(ch[k]);
            out.insert(f);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

HasseOrientation hasse_orient(const Fan& fan) {
    if (fan.complete != Completeness::Certified) throw Error(ErrorKind::IncompleteFan, "orientation needs a certified fan");
    HasseOrientation h;
    h.out_degree.assign(fan.chambers.size(), 0);
    h.in_degree.assign(fan.chambers.size(), 0);
    IntMatrix b = fan.base_matrix();
    for (std::size_t w = 0; w < fan.walls.size(); ++w) {
        const Wall& wall = fan.walls[w];
        IntVector f = wall_normal(fan, wall.shared);
        bool pos = false, neg = false;
        for (std::size_t j = 0; j < fan.rank; ++j) {
            Int v = dot(f, b.column(j));
            pos |= v > 0;
            neg |= v < 0;
        }
        if (pos && neg) throw Error(ErrorKind::OrderViolation, "wall " + std::to_string(w) + " normal is not base-positive");
        if (neg) f = negate(f);
        int free_a = -1;
        for (int r : fan.chambers[wall.a])
            if (!std::binary_search(wall.shared.begin(), wall.shared.end(), r)) free_a = r;
        bool a_up = dot(f, fan.rays[free_a]) > 0;
        int from = a_up ? wall.a : wall.b, to = a_up ? wall.b : wall.a;
        h.arrows.emplace_back(from, to);
        ++h.out_degree[from];
        ++h.in_degree[to];
    }
    return h;
}

bool is_acyclic(const Fan& fan, const HasseOrientation& h) {
    const std::size_t m = fan.chambers.size();
    std::vector<std::vector<int>> adj(m);
    std::vector<int> indeg(m, 0);
    for (auto [a, b] : h.arrows) {
        adj[a].push_back(b);
        ++indeg[b];
    }
    std::queue<int> q;
    for (std::size_t i = 0; i < m; ++i)
        if (indeg[i] == 0) q.push(static_cast<int>(i));
    std::size_t seen = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        ++seen;
        for (int y : adj[x])
            if (--indeg[y] == 0) q.push(y);
    }
    return seen == m;
}

Fan restrict_to_coordinates(const Fan& fan, const std::vector<int>& coords_in) {
    std::vector<int> I = coords_in;
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    for (int i : I)
        if (i < 0 || static_cast<std::size_t>(i) >= fan.rank) throw Error(ErrorKind::IndexOutOfRange, "coordinate index");
    if (I.empty()) throw Error(ErrorKind::InvalidInput, "empty coordinate set");
    auto coords = fan.base_coordinates();
    std::vector<bool> supported(fan.rays.size(), true);
    for (std::size_t r = 0; r < fan.rays.size(); ++r)
        for (std::size_t k = 0; k < fan.rank; ++k)
            if (coords[r][k] != 0 && !std::binary_search(I.begin(), I.end(), static_cast<int>(k))) supported[r] = false;
    std::map<IntVector, int> ray_id;
    std::vector<IntVector> rays;
    auto project = [&](int r) {
        IntVector v;
        for (int i : I) v.push_back(coords[r][i]);
        auto [it, fresh] = ray_id.emplace(v, static_cast<int>(rays.size()));
        if (fresh) rays.push_back(v);
        return it->second;
    };
    std::set<Cone> chambers;
    Cone base_new;
    for (std::size_t c = 0; c < fan.chambers.size(); ++c) {
        Cone sub;
        for (int r : fan.chambers[c])
            if (supported[r]) sub.push_back(r);
        if (sub.size() != I.size()) continue;
        Cone img;
        for (int r : sub) img.push_back(project(r));
        std::sort(img.begin(), img.end());
        chambers.insert(img);
        if (static_cast<int>(c) == fan.base) base_new = img;
    }
    std::vector<Cone> cs(chambers.begin(), chambers.end());
    int bi = static_cast<int>(std::find(cs.begin(), cs.end(), base_new) - cs.begin());
    return build_fan(rays, cs, bi);
}

std::vector<int> sign_filter(const Fan& fan, const std::vector<int>& eps) {
    if (eps.size() != fan.rank) throw Error(ErrorKind::InvalidInput, "sign vector length differs from rank");
    for (int e : eps)
        if (e != 1 && e != -1) throw Error(ErrorKind::InvalidInput, "sign vector entries must be +1 or -1");
    auto coords = fan.base_coordinates();
    std::vector<int> out;
    for (std::size_t c = 0; c < fan.chambers.size(); ++c) {
        bool inside = true;
        for (int r : fan.chambers[c])
            for (std::size_t k = 0; k < fan.rank && inside; ++k)
                if (coords[r][k] * eps[k] < 0) inside = false;
        if (inside) out.push_back(static_cast<int>(c));
    }
    return out;
}

Fan reduce_at_cone(const Fan& fan, const Cone& sigma_in) {
    if (fan.complete != Completeness::Certified) throw Error(ErrorKind::IncompleteFan, "reduction needs a certified fan");
    Cone sigma = sigma_in;
    std::sort(sigma.begin(), sigma.end());
    std::vector<int> star;
    for (std::size_t c = 0; c < fan.chambers.size(); ++c)
        if (std::includes(fan.chambers[c].begin(), fan.chambers[c].end(), sigma.begin(), sigma.end()))
            star.push_back(static_cast<int>(c));
    if (star.empty()) throw Error(ErrorKind::NotAFace, "cone is not a face of any chamber");

    if (sigma.size() == fan.rank) {
        Fan z;
        z.rank = 0;
        z.chambers = {Cone{}};
        z.complete = Completeness::Certified;
        return z;
    }

    // Base: the chamber of the star with no incoming arrow inside the star (the
    // base itself when it contains sigma); lexicographically least as fallback.
    int base_c = -1;
    if (std::binary_search(star.begin(), star.end(), fan.base)) {
        base_c = fan.base;
    } else {
        try {
            auto h = hasse_orient(fan);
            std::vector<int> indeg(fan.chambers.size(), 0);
            for (auto [a, b] : h.arrows)
                if (std::binary_search(star.begin(), star.end(), a) && std::binary_search(star.begin(), star.end(), b))
                    ++indeg[b];
            std::vector<int> sources;
            for (int c : star)
                if (indeg[c] == 0) sources.push_back(c);
            if (sources.size() == 1) base_c = sources[0];
        } catch (const Error&) {
        }
        if (base_c < 0) base_c = star.front();  // chambers are sorted, so this is the lex-least
    }

    std::vector<IntVector> gens;
    for (int r : sigma) gens.push_back(fan.rays[r]);
    IntMatrix q = quotient_projection(gens, fan.rank);
    std::map<IntVector, int> ray_id;
    std::vector<IntVector> rays;
    std::vector<Cone> chambers;
    int bi = -1;
    for (int c : star) {
        Cone img;
        for (int r : fan.chambers[c]) {
            if (std::binary_search(sigma.begin(), sigma.end(), r)) continue;
            IntVector v = q * fan.rays[r];
            auto [it, fresh] = ray_id.emplace(v, static_cast<int>(rays.size()));
            if (fresh) rays.push_back(v);
            img.push_back(it->second);
        }
        if (c == base_c) bi = static_cast<int>(chambers.size());
        chambers.push_back(img);
    }
    FanOptions opt;
    opt.assert_complete = true;
    return build_fan(rays, chambers, bi, opt);
}

}  // namespace tiltfan
