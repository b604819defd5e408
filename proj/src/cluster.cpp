#include "tiltfan/cluster.hpp"

#include <algorithm>
#include <deque>

namespace tiltfan {

namespace {

Int pos(const Int& x) { return x > 0 ? x : Int(0); }

// +1 if the column is nonnegative, -1 if nonpositive, 0 if mixed
int column_sign(const IntMatrix& m, std::size_t j) {
    bool p = false, q = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        p |= m(i, j) > 0;
        q |= m(i, j) < 0;
    }
    if (p && q) return 0;
    return q ? -1 : 1;
}

std::vector<IntVector> chamber_key(const IntMatrix& g) {
    auto cols = g.columns();
    std::sort(cols.begin(), cols.end(), lex_less);
    return cols;
}

}  // namespace

void check_skew_symmetric(const IntMatrix& b) {
    if (b.rows() != b.cols()) throw Error(ErrorKind::NotSkewSymmetric, "exchange matrix is not square");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(i, j) != -b(j, i))
                throw Error(ErrorKind::NotSkewSymmetric,
                            "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and transpose disagree");
}

ExtendedSeed initial_seed(const IntMatrix& b) {
    check_skew_symmetric(b);
    const std::size_t n = b.rows();
    return ExtendedSeed{b, IntMatrix::identity(n), IntMatrix::identity(n), {}};
}

ExtendedSeed mutate(const ExtendedSeed& s, int k1) {
    const std::size_t n = s.B.rows();
    if (k1 < 1 || static_cast<std::size_t>(k1) > n)
        throw Error(ErrorKind::IndexOutOfRange, "mutation direction " + std::to_string(k1));
    const std::size_t k = static_cast<std::size_t>(k1 - 1);
    const int sg = column_sign(s.C, k);
    if (sg == 0) throw Error(ErrorKind::SignIncoherence, "c-vector " + std::to_string(k1) + " has mixed signs");

    ExtendedSeed t = s;
    t.history.push_back(k1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k)
                t.B(i, j) = -s.B(i, j);
            else
                t.B(i, j) = s.B(i, j) + pos(s.B(i, k)) * pos(s.B(k, j)) - pos(-s.B(i, k)) * pos(-s.B(k, j));
        }
    for (std::size_t j = 0; j < n; ++j) {
        if (j == k) {
            for (std::size_t i = 0; i < n; ++i) t.C(i, k) = -s.C(i, k);
            continue;
        }
        Int f = sg > 0 ? pos(s.B(k, j)) : pos(-s.B(k, j));
        if (f != 0)
            for (std::size_t i = 0; i < n; ++i) t.C(i, j) = s.C(i, j) + f * s.C(i, k);
    }
    for (std::size_t r = 0; r < n; ++r) {
        Int v = -s.G(r, k);
        for (std::size_t i = 0; i < n; ++i) {
            Int f = sg > 0 ? pos(-s.B(i, k)) : pos(s.B(i, k));
            if (f != 0) v += f * s.G(r, i);
        }
        t.G(r, k) = v;
    }
    return t;
}

IntVector general_g_column(const ExtendedSeed& s, int k1, const IntMatrix& b0) {
    const std::size_t n = s.B.rows();
    const std::size_t k = static_cast<std::size_t>(k1 - 1);
    IntVector g = negate(s.G.column(k));
    for (std::size_t i = 0; i < n; ++i) {
        Int bp = pos(s.B(i, k));
        Int cp = pos(s.C(i, k));
        for (std::size_t r = 0; r < n; ++r) g[r] += bp * s.G(r, i) - cp * b0(r, i);
    }
    return g;
}

std::string seed_violation(const ExtendedSeed& s) {
    const std::size_t n = s.B.rows();
    try {
        check_skew_symmetric(s.B);
    } catch (const Error& e) {
        return e.what();
    }
    for (std::size_t j = 0; j < n; ++j)
        if (column_sign(s.C, j) == 0) return "c-vector " + std::to_string(j + 1) + " is not sign-coherent";
    for (std::size_t i = 0; i < n; ++i) {
        bool p = false, q = false;
        for (std::size_t j = 0; j < n; ++j) {
            p |= s.G(i, j) > 0;
            q |= s.G(i, j) < 0;
        }
        if (p && q) return "g-matrix row " + std::to_string(i + 1) + " is not sign-coherent";
    }
    if (s.C.transpose() * s.G != IntMatrix::identity(n)) return "C^T G is not the identity";
    if (abs(determinant(s.G)) != 1) return "g-matrix is not unimodular";
    return {};
}

GfanResult enumerate_gfan(const IntMatrix& b, std::size_t budget) {
    if (budget < 1) throw Error(ErrorKind::InvalidInput, "budget must be at least 1");
    ExtendedSeed s0 = initial_seed(b);
    const std::size_t n = b.rows();
    std::map<std::vector<IntVector>, ExtendedSeed> seen;
    std::deque<ExtendedSeed> queue;
    seen.emplace(chamber_key(s0.G), s0);
    queue.push_back(s0);
    bool exhausted = false;
    while (!queue.empty() && !exhausted) {
        ExtendedSeed cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t k = 1; k <= n; ++k) {
            ExtendedSeed nxt = mutate(cur, static_cast<int>(k));
            auto key = chamber_key(nxt.G);
            if (seen.count(key)) continue;
            if (seen.size() >= budget) {
                exhausted = true;
                queue.push_front(cur);
                break;
            }
            seen.emplace(std::move(key), nxt);
            queue.push_back(std::move(nxt));
        }
    }

    GfanResult res;
    res.exhausted = exhausted;
    res.explored = seen.size();
    res.frontier = queue.size();
    std::map<IntVector, int> ray_id;
    std::vector<IntVector> rays;
    std::vector<Cone> chambers;
    int base = -1;
    auto key0 = chamber_key(s0.G);
    for (const auto& [key, seed] : seen) {
        Cone c;
        for (const auto& g : key) {
            auto [it, fresh] = ray_id.emplace(g, static_cast<int>(rays.size()));
            if (fresh) rays.push_back(g);
            c.push_back(it->second);
        }
        if (key == key0) base = static_cast<int>(chambers.size());
        chambers.push_back(c);
    }
    FanOptions opt;
    opt.assert_complete = !exhausted;
    opt.known_partial = exhausted;
    res.fan = build_fan(rays, chambers, base, opt);
    res.seeds.resize(res.fan.chambers.size());
    for (const auto& [key, seed] : seen) {
        Cone c;
        for (const auto& g : key) c.push_back(res.fan.ray_index(g));
        std::sort(c.begin(), c.end());
        res.seeds[static_cast<std::size_t>(res.fan.chamber_index(c))] = seed;
    }
    return res;
}

}  // namespace tiltfan
