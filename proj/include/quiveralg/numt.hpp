#pragma once

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace numt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Square integer matrix with exact arbitrary-precision entries, row-major.
struct IntMatrix {
    int n = 0;
    std::vector<Int> e;

    IntMatrix() = default;
    explicit IntMatrix(int dim) : n(dim), e(static_cast<size_t>(dim) * dim) {
        if (dim <= 0) throw std::invalid_argument("IntMatrix: dimension must be positive");
    }
    IntMatrix(int dim, std::initializer_list<Int> entries) : IntMatrix(dim) {
        if (entries.size() != e.size())
            throw std::invalid_argument("IntMatrix: wrong number of entries");
        std::copy(entries.begin(), entries.end(), e.begin());
    }

    static IntMatrix identity(int dim);
    static IntMatrix diagonal(const std::vector<Int>& d);

    Int& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
    const Int& at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }

    bool operator==(const IntMatrix& o) const { return n == o.n && e == o.e; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;

    /// Exact determinant (fraction-free Gaussian elimination).
    Int det() const;
    bool is_identity() const;
    bool is_diagonal() const;
};

struct Bezout {
    Int g, x, y;  //!< g = gcd >= 0 and x*a + y*b = g
};

/// Extended Euclid. Throws std::domain_error when both arguments are zero.
Bezout bezout(const Int& a, const Int& b);

/// Smallest k >= 1 with n^k = 1 mod p. Requires p >= 2 and gcd(n,p) = 1.
Int mult_order(const Int& n, const Int& p);

/// Number of positive divisors of n >= 1.
long divisor_count(const Int& n);

struct Snf {
    IntMatrix u, d, v;  //!< m = u*d*v, |det u| = |det v| = 1
};

/// Smith normal form with positive diagonal and divisibility chain
/// d1 | d2 | ... | dn. Throws std::domain_error on singular input.
Snf smith_normal_form(const IntMatrix& m);

/// Adjugate: adjugate(m)*m = m*adjugate(m) = det(m)*I. For 1x1 returns [1].
IntMatrix adjugate(const IntMatrix& m);

/// Exact inverse of a matrix with det = +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace numt
