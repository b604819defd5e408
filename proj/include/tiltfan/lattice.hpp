#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "tiltfan/error.hpp"

namespace tiltfan {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

IntVector ivec(std::initializer_list<long> xs);
bool lex_less(const IntVector& a, const IntVector& b);
Int dot(const IntVector& a, const IntVector& b);
Rat dot(const RatVector& a, const IntVector& b);
bool is_zero(const IntVector& v);
IntVector negate(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
std::string to_string(const IntVector& v);
std::string rat_string(const Rat& q);  // "p/q", or "p" when integral

// Dense integer matrix. Row-major storage; columns are the vectors
// (g-vectors, rays, images of simple roots).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows = 0);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    std::vector<IntVector> columns() const;
    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntVector operator*(const IntVector& v) const;
    bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    bool operator<(const IntMatrix& o) const;
    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

// Fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);
IntMatrix invert_unimodular(const IntMatrix& m);
IntVector primitive(const IntVector& v);
std::size_t rank(const IntMatrix& m);

// Rational solve of M x = b for square nonsingular M.
RatVector solve(const IntMatrix& m, const RatVector& b);

// Primitive integer basis of {x : M x = 0}, in reduced-echelon order.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

// Diagonal of the Smith normal form (nonzero entries only, positive, d1 | d2 | ...).
std::vector<Int> smith_diagonal(const IntMatrix& m);

// Q : Z^n -> Z^{n-k} whose kernel is span_Z(S). S must be independent and saturated.
IntMatrix quotient_projection(const std::vector<IntVector>& gens, std::size_t n);

Int binomial(long n, long k);

}  // namespace tiltfan
