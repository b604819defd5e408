#include "tiltfan/combinatorics.hpp"

#include <unordered_set>

namespace tiltfan {

FVector f_vector(const Fan& fan) {
    FVector f;
    for (std::size_t i = 0; i <= fan.rank; ++i) f.emplace_back(static_cast<unsigned long>(faces(fan, i).size()));
    return f;
}

HVector h_vector(const FVector& f) {
    if (f.empty()) throw Error(ErrorKind::InvalidInput, "empty f-vector");
    const long n = static_cast<long>(f.size()) - 1;
    HVector h(static_cast<std::size_t>(n + 1));
    for (long j = 0; j <= n; ++j)
        for (long i = 0; i <= j; ++i) {
            Int term = binomial(n - i, j - i) * f[static_cast<std::size_t>(i)];
            h[static_cast<std::size_t>(j)] += ((j - i) % 2 ? -term : term);
        }
    return h;
}

FVector f_from_h(const HVector& h) {
    const long n = static_cast<long>(h.size()) - 1;
    FVector f(h.size());
    for (long j = 0; j <= n; ++j)
        for (long i = 0; i <= j; ++i) f[static_cast<std::size_t>(j)] += binomial(n - i, j - i) * h[static_cast<std::size_t>(i)];
    return f;
}

bool dehn_sommerville(const HVector& h) {
    for (std::size_t j = 0; j < h.size(); ++j)
        if (h[j] != h[h.size() - 1 - j]) return false;
    return true;
}

std::vector<Int> gamma_vector(const HVector& h) {
    if (h.empty() || !dehn_sommerville(h)) throw Error(ErrorKind::NotPalindromic, "h-vector is not palindromic");
    const long n = static_cast<long>(h.size()) - 1;
    HVector rest = h;
    std::vector<Int> gamma;
    // peel off gamma_i x^i (1+x)^(n-2i) from the lowest remaining coefficient
    for (long i = 0; 2 * i <= n; ++i) {
        Int g = rest[static_cast<std::size_t>(i)];
        gamma.push_back(g);
        for (long k = 0; k <= n - 2 * i; ++k) rest[static_cast<std::size_t>(i + k)] -= g * binomial(n - 2 * i, k);
    }
    for (const auto& x : rest)
        if (x != 0) throw Error(ErrorKind::NotPalindromic, "no gamma expansion");
    return gamma;
}

bool unimodal_halves(const HVector& h) {
    const std::size_t n = h.size() - 1;
    for (std::size_t j = 0; j + 1 <= n / 2; ++j)
        if (h[j] > h[j + 1]) return false;
    for (std::size_t j = (n + 1) / 2; j < n; ++j)
        if (h[j] < h[j + 1]) return false;
    return true;
}

Int ehrhart_count(const HVector& h, long ell) {
    const long n = static_cast<long>(h.size()) - 1;
    Int s = 0;
    for (long j = 0; j <= n; ++j) s += binomial(n + ell - j, n) * h[static_cast<std::size_t>(j)];
    return s;
}

namespace {

struct VecHash {
    std::size_t operator()(const IntVector& v) const {
        std::size_t s = 1469598103934665603ull;
        for (const auto& x : v) s = (s ^ std::hash<long>{}(x.get_si())) * 1099511628211ull;
        return s;
    }
};

}  // namespace

Int ehrhart_bruteforce(const Fan& fan, long ell) {
    if (fan.complete != Completeness::Certified) throw Error(ErrorKind::IncompleteFan, "Ehrhart count needs a certified fan");
    if (ell < 1) throw Error(ErrorKind::InvalidInput, "dilation must be positive");
    const std::size_t n = fan.rank;
    std::unordered_set<IntVector, VecHash> pts;
    std::vector<long> a(n, 0);
    for (const auto& ch : fan.chambers) {
        // all a >= 0 with sum <= ell, odometer style
        std::fill(a.begin(), a.end(), 0);
        for (;;) {
            IntVector p(n);
            for (std::size_t k = 0; k < n; ++k)
                if (a[k])
                    for (std::size_t d = 0; d < n; ++d) p[d] += a[k] * fan.rays[ch[k]][d];
            pts.insert(std::move(p));
            long total = 0;
            for (long x : a) total += x;
            std::size_t k = 0;
            while (k < n) {
                if (total < ell) {
                    ++a[k];
                    break;
                }
                total -= a[k];
                a[k] = 0;
                ++k;
            }
            if (k == n) break;
        }
    }
    return Int(static_cast<unsigned long>(pts.size()));
}

}  // namespace tiltfan
