#include "tiltfan/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "tiltfan/polytope.hpp"

namespace tiltfan {

namespace {

void check_axioms(const IntMatrix& c) {
    if (c.rows() != c.cols() || c.rows() == 0) throw Error(ErrorKind::InvalidInput, "Cartan matrix must be square");
    const std::size_t n = c.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && c(i, j) != 2) throw Error(ErrorKind::InvalidInput, "diagonal entries must be 2");
            if (i != j && c(i, j) > 0) throw Error(ErrorKind::InvalidInput, "off-diagonal entries must be <= 0");
            if (i != j && (c(i, j) == 0) != (c(j, i) == 0))
                throw Error(ErrorKind::InvalidInput, "zero pattern must be symmetric");
        }
}

}  // namespace

CartanData make_cartan(const IntMatrix& c, const std::vector<Int>& d) {
    check_axioms(c);
    const std::size_t n = c.rows();
    if (d.size() != n) throw Error(ErrorKind::InvalidInput, "symmetrizer length differs from rank");
    for (const auto& x : d)
        if (x <= 0) throw Error(ErrorKind::InvalidInput, "symmetrizer entries must be positive");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c(i, j) * d[j] != c(j, i) * d[i]) throw Error(ErrorKind::InvalidInput, "C*D is not symmetric");
    return CartanData{c, d};
}

CartanData make_cartan(const IntMatrix& c) {
    check_axioms(c);
    const std::size_t n = c.rows();
    // propagate rational ratios d_j / d_i = c_ji / c_ij along the Dynkin graph
    std::vector<Rat> d(n, Rat(0));
    for (std::size_t s = 0; s < n; ++s) {
        if (d[s] != 0) continue;
        d[s] = 1;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            std::size_t i = q.front();
            q.pop_front();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || c(i, j) == 0) continue;
                Rat want = d[i] * Rat(c(j, i)) / Rat(c(i, j));
                if (d[j] == 0) {
                    d[j] = want;
                    q.push_back(j);
                } else if (d[j] != want) {
                    throw Error(ErrorKind::InvalidInput, "Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    Int l = 1;
    for (const auto& x : d) l = lcm(l, x.get_den());
    std::vector<Int> di(n);
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        di[i] = Rat(d[i] * Rat(l)).get_num();
        g = gcd(g, di[i]);
    }
    for (auto& x : di) x /= g;
    return make_cartan(c, di);
}

CartanData cartan_preset(const std::string& type, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "rank must be positive");
    const std::size_t N = static_cast<std::size_t>(n);
    IntMatrix c = IntMatrix::identity(N);
    for (std::size_t i = 0; i < N; ++i) c(i, i) = 2;
    auto link = [&](std::size_t i, std::size_t j) { c(i, j) = -1, c(j, i) = -1; };
    if (type == "A") {
        for (std::size_t i = 0; i + 1 < N; ++i) link(i, i + 1);
    } else if (type == "B" || type == "C") {
        if (n < 2) throw Error(ErrorKind::InvalidInput, "type B/C needs rank >= 2");
        for (std::size_t i = 0; i + 2 < N; ++i) link(i, i + 1);
        // B: the last simple root is short
        c(N - 2, N - 1) = type == "B" ? -1 : -2;
        c(N - 1, N - 2) = type == "B" ? -2 : -1;
    } else if (type == "D") {
        if (n < 4) throw Error(ErrorKind::InvalidInput, "type D needs rank >= 4");
        for (std::size_t i = 0; i + 2 < N; ++i) link(i, i + 1);
        link(N - 3, N - 1);
    } else if (type == "E") {
        if (n < 6 || n > 8) throw Error(ErrorKind::InvalidInput, "type E needs rank 6, 7 or 8");
        // Bourbaki numbering: 1-3-4-5-..., 2 attached to 4
        link(0, 2);
        link(1, 3);
        for (std::size_t i = 2; i + 1 < N; ++i) link(i, i + 1);
    } else if (type == "F") {
        if (n != 4) throw Error(ErrorKind::InvalidInput, "type F needs rank 4");
        link(0, 1);
        link(2, 3);
        c(1, 2) = -1;
        c(2, 1) = -2;
    } else if (type == "G") {
        if (n != 2) throw Error(ErrorKind::InvalidInput, "type G needs rank 2");
        c(0, 1) = -1;
        c(1, 0) = -3;
    } else {
        throw Error(ErrorKind::InvalidInput, "unknown Cartan type " + type);
    }
    return make_cartan(c);
}

Int root_norm(const CartanData& cd, const IntVector& a) {
    // Invariant form: (alpha_i, alpha_j) = L * c_ij / D_i with L = lcm(D).
    const std::size_t n = cd.C.rows();
    Int l = 1;
    for (const auto& x : cd.D) l = lcm(l, x);
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += a[i] * a[j] * (l / cd.D[i]) * cd.C(i, j);
    return s;
}

IntMatrix reflection(const CartanData& cd, int i1) {
    const std::size_t n = cd.C.rows();
    const std::size_t i = static_cast<std::size_t>(i1 - 1);
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= cd.C(i, j);  // s_i(alpha_j) = alpha_j - c_ij alpha_i
    return s;
}

WeylResult weyl_enumerate_budget(const CartanData& cd, std::size_t budget) {
    const std::size_t n = cd.C.rows();
    std::vector<IntMatrix> gens;
    for (std::size_t i = 1; i <= n; ++i) gens.push_back(reflection(cd, static_cast<int>(i)));
    WeylResult res;
    // parent links instead of words: words of an infinite group grow with the frontier
    std::vector<std::pair<std::size_t, int>> parent{{0, 0}};
    std::set<IntMatrix> seen;
    res.elements.push_back(WeylElement{IntMatrix::identity(n), {}});
    seen.insert(res.elements[0].matrix);
    for (std::size_t head = 0; head < res.elements.size() && !res.exhausted; ++head) {
        for (std::size_t i = 0; i < n; ++i) {
            IntMatrix m = res.elements[head].matrix * gens[i];
            if (seen.count(m)) continue;
            if (res.elements.size() >= budget) {
                res.exhausted = true;
                break;
            }
            seen.insert(m);
            parent.emplace_back(head, static_cast<int>(i + 1));
            res.elements.push_back(WeylElement{std::move(m), {}});
        }
    }
    if (res.exhausted) return res;
    for (std::size_t k = 1; k < res.elements.size(); ++k) {
        res.elements[k].word = res.elements[parent[k].first].word;
        res.elements[k].word.push_back(parent[k].second);
    }
    return res;
}

bool is_finite_type(const CartanData& cd) {
    const std::size_t n = cd.C.rows();
    IntMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) = cd.C(i, j) * cd.D[j];
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = s(i, j);
        if (determinant(minor) <= 0) return false;
    }
    return true;
}

std::vector<WeylElement> weyl_enumerate(const CartanData& cd, std::size_t budget) {
    auto r = weyl_enumerate_budget(cd, budget);
    if (r.exhausted)
        throw Error(ErrorKind::BudgetExhausted, "more than " + std::to_string(budget) + " Weyl group elements");
    return std::move(r.elements);
}

namespace {

std::vector<WeylElement> finite_weyl(const CartanData& cd) {
    if (!is_finite_type(cd)) throw Error(ErrorKind::NotFiniteType, "symmetrized Cartan form is not positive definite");
    auto r = weyl_enumerate_budget(cd, 100000);
    if (r.exhausted) throw Error(ErrorKind::NotFiniteType, "Weyl group enumeration did not close");
    return std::move(r.elements);
}

}  // namespace

Fan coxeter_fan(const CartanData& cd) {
    auto ws = finite_weyl(cd);
    std::map<IntVector, int> ray_id;
    std::vector<IntVector> rays;
    std::vector<Cone> chambers;
    for (const auto& w : ws) {
        IntMatrix g = invert_unimodular(w.matrix.transpose());
        Cone c;
        for (const auto& r : g.columns()) {
            auto [it, fresh] = ray_id.emplace(r, static_cast<int>(rays.size()));
            if (fresh) rays.push_back(r);
            c.push_back(it->second);
        }
        chambers.push_back(c);
    }
    FanOptions opt;
    opt.assert_complete = true;
    return build_fan(rays, chambers, 0, opt);
}

RootSystem root_system(const CartanData& cd) {
    auto ws = finite_weyl(cd);
    std::set<IntVector, decltype(&lex_less)> roots(&lex_less);
    for (const auto& w : ws)
        for (const auto& col : w.matrix.columns()) roots.insert(col);
    RootSystem rs;
    rs.roots.assign(roots.begin(), roots.end());
    Int best = -1;
    for (const auto& r : rs.roots) {
        Int nr = root_norm(cd, r);
        if (best < 0 || nr < best) best = nr;
    }
    for (const auto& r : rs.roots)
        if (root_norm(cd, r) == best) rs.short_roots.push_back(r);
    return rs;
}

std::vector<Int> descent_histogram(const CartanData& cd) {
    auto ws = finite_weyl(cd);
    const std::size_t n = cd.C.rows();
    std::vector<Int> hist(n + 1, 0);
    for (const auto& w : ws) {
        IntMatrix inv = invert_unimodular(w.matrix);
        std::size_t des = 0;
        for (std::size_t i = 0; i < n; ++i) {
            IntVector col = inv.column(i);
            if (std::all_of(col.begin(), col.end(), [](const Int& x) { return x <= 0; })) ++des;
        }
        ++hist[des];
    }
    return hist;
}

Polytope short_root_polytope(const CartanData& cd) {
    return convex_hull(to_rational(root_system(cd).short_roots));
}

}  // namespace tiltfan
