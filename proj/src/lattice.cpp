#include "tiltfan/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace tiltfan {

const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::DetNotUnit: return "DetNotUnit";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::DependentGenerators: return "DependentGenerators";
        case ErrorKind::NonSaturated: return "NonSaturated";
        case ErrorKind::NonUnimodularChamber: return "NonUnimodularChamber";
        case ErrorKind::SignCoherenceViolation: return "SignCoherenceViolation";
        case ErrorKind::DanglingWall: return "DanglingWall";
        case ErrorKind::IncompleteFan: return "IncompleteFan";
        case ErrorKind::OrderViolation: return "OrderViolation";
        case ErrorKind::NotAFace: return "NotAFace";
        case ErrorKind::NotPalindromic: return "NotPalindromic";
        case ErrorKind::NotSkewSymmetric: return "NotSkewSymmetric";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::SignIncoherence: return "SignIncoherence";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::UnsupportedGraph: return "UnsupportedGraph";
        case ErrorKind::BudgetExhausted: return "BudgetExhausted";
        case ErrorKind::NotFiniteType: return "NotFiniteType";
        case ErrorKind::NotConvex: return "NotConvex";
        case ErrorKind::OriginNotInterior: return "OriginNotInterior";
        case ErrorKind::NotRank2: return "NotRank2";
        case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    }
    return "Error";
}

IntVector ivec(std::initializer_list<long> xs) {
    IntVector v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Int dot(const IntVector& a, const IntVector& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVector& a, const IntVector& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntVector negate(const IntVector& v) {
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

IntVector add(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

std::string rat_string(const Rat& q_in) {
    Rat q = q_in;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows[0].size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::InvalidInput, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
    if (!cols.empty()) rows = cols[0].size();
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error(ErrorKind::InvalidInput, "ragged matrix columns");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVector> rs;
    for (auto r : rows) rs.push_back(ivec(r));
    return from_rows(rs);
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<IntVector> IntMatrix::columns() const {
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < c_; ++j) out.push_back(column(j));
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (c_ != o.r_) throw Error(ErrorKind::InvalidInput, "matrix shape mismatch");
    IntMatrix p(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) p(i, j) += x * o(k, j);
        }
    return p;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (c_ != v.size()) throw Error(ErrorKind::InvalidInput, "matrix-vector shape mismatch");
    IntVector out(r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (r_ != o.r_) return r_ < o.r_;
    if (c_ != o.c_) return c_ < o.c_;
    return std::lexicographical_compare(a_.begin(), a_.end(), o.a_.begin(), o.a_.end());
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < r_; ++i) os << (i ? "," : "") << to_string(row(i));
    os << ']';
    return os.str();
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidInput, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Gauss-Jordan over Q. Returns the reduced row echelon form and the pivot columns.
std::vector<RatVector> rref(std::vector<RatVector> a, std::vector<std::size_t>& pivots) {
    pivots.clear();
    if (a.empty()) return a;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rat inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return a;
}

std::vector<RatVector> to_rat(const IntMatrix& m) {
    std::vector<RatVector> a(m.rows(), RatVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    return a;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
    std::vector<std::size_t> piv;
    rref(to_rat(m), piv);
    return piv.size();
}

RatVector solve(const IntMatrix& m, const RatVector& b) {
    const std::size_t n = m.rows();
    if (m.cols() != n || b.size() != n) throw Error(ErrorKind::InvalidInput, "solve: shape mismatch");
    auto a = to_rat(m);
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> piv;
    a = rref(std::move(a), piv);
    if (piv.size() < n || piv.back() >= n) throw Error(ErrorKind::InvalidInput, "solve: singular matrix");
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

IntMatrix invert_unimodular(const IntMatrix& m) {
    Int d = determinant(m);
    if (abs(d) != 1) throw Error(ErrorKind::DetNotUnit, "determinant " + d.get_str());
    const std::size_t n = m.rows();
    auto a = to_rat(m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i].push_back(i == j ? 1 : 0);
    std::vector<std::size_t> piv;
    a = rref(std::move(a), piv);
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j].get_num();
    return inv;
}

IntVector primitive(const IntVector& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw Error(ErrorKind::ZeroVector, "primitive of zero vector");
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
    const std::size_t cols = m.cols();
    std::vector<std::size_t> piv;
    auto a = rref(to_rat(m), piv);
    std::vector<bool> is_piv(cols, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        RatVector x(cols);
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -a[r][f];
        Int l = 1;
        for (const auto& q : x) l = lcm(l, q.get_den());
        IntVector v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = Rat(x[i] * Rat(l)).get_num();
        basis.push_back(primitive(v));
    }
    return basis;
}

std::vector<Int> smith_diagonal(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t R = a.rows(), C = a.cols();
    std::vector<Int> diag;
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = R, pj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (a(i, j) != 0 && (pi == R || abs(a(i, j)) < abs(a(pi, pj)))) pi = i, pj = j;
            if (pi == R) {
                std::sort(diag.begin(), diag.end());
                return diag;
            }
            for (std::size_t j = 0; j < C; ++j) std::swap(a(t, j), a(pi, j));
            for (std::size_t i = 0; i < R; ++i) std::swap(a(i, t), a(i, pj));
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                if (q != 0)
                    for (std::size_t j = t; j < C; ++j) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                if (q != 0)
                    for (std::size_t i = t; i < R; ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold any entry not divisible by the pivot into row t
            std::size_t bad = R;
            for (std::size_t i = t + 1; i < R && bad == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (a(i, j) % a(t, t) != 0) { bad = i; break; }
            if (bad == R) break;
            for (std::size_t j = t; j < C; ++j) a(t, j) += a(bad, j);
        }
        diag.push_back(abs(a(t, t)));
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

IntMatrix quotient_projection(const std::vector<IntVector>& gens, std::size_t n) {
    const std::size_t k = gens.size();
    for (const auto& g : gens)
        if (g.size() != n) throw Error(ErrorKind::InvalidInput, "generator of wrong length");
    if (k > n) throw Error(ErrorKind::DependentGenerators, "more generators than the ambient rank");
    IntMatrix s = IntMatrix::from_columns(gens, n);  // n x k
    IntMatrix u = IntMatrix::identity(n);
    auto swap_rows = [&](IntMatrix& x, std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < x.cols(); ++c) std::swap(x(i, c), x(j, c));
    };
    auto axpy_rows = [&](IntMatrix& x, std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t c = 0; c < x.cols(); ++c) x(dst, c) -= q * x(src, c);
    };
    // Unimodular row reduction U*S = [T; 0]. Pivot: smallest |entry|, lowest row on ties.
    for (std::size_t c = 0; c < k; ++c) {
        for (;;) {
            std::size_t p = n;
            for (std::size_t i = c; i < n; ++i)
                if (s(i, c) != 0 && (p == n || abs(s(i, c)) < abs(s(p, c)))) p = i;
            if (p == n) throw Error(ErrorKind::DependentGenerators, "generator " + std::to_string(c + 1) + " is dependent");
            if (p != c) {
                swap_rows(s, p, c);
                swap_rows(u, p, c);
            }
            bool done = true;
            for (std::size_t i = c + 1; i < n; ++i) {
                if (s(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s(i, c).get_mpz_t(), s(c, c).get_mpz_t());
                axpy_rows(s, i, c, q);
                axpy_rows(u, i, c, q);
                if (s(i, c) != 0) done = false;
            }
            if (done) break;
        }
    }
    Int det = 1;
    for (std::size_t c = 0; c < k; ++c) det *= s(c, c);
    if (abs(det) != 1) {
        auto d = smith_diagonal(IntMatrix::from_columns(gens, n));
        throw Error(ErrorKind::NonSaturated, "elementary divisor " + d.back().get_str());
    }
    IntMatrix q(n - k, n);
    for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i - k, j) = u(i, j);
    return q;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace tiltfan
