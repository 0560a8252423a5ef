#include "quiveralg/numt.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace numt {

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n; ++i) m.at(i, i) = d[static_cast<size_t>(i)];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("IntMatrix: size mismatch");
    IntMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r = *this;
    for (auto& x : r.e) x = -x;
    return r;
}

Int IntMatrix::det() const {
    // Bareiss: all divisions exact.
    IntMatrix a = *this;
    Int sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { r = i; break; }
            if (r < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

bool IntMatrix::is_identity() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_diagonal() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

Bezout bezout(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw std::domain_error("bezout: gcd(0,0) undefined");
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        s0 -= q * s1; std::swap(s0, s1);
        t0 -= q * t1; std::swap(t0, t1);
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    return {r0, s0, t0};
}

Int mult_order(const Int& n, const Int& p) {
    if (p < 2) throw std::domain_error("mult_order: modulus must be >= 2");
    Int r = n % p;
    if (r < 0) r += p;
    if (gcd(r, p) != 1) throw std::domain_error("mult_order: base not a unit mod p");
    Int acc = r, k = 1;
    while (acc != 1) {
        acc = acc * r % p;
        ++k;
    }
    return k;
}

long divisor_count(const Int& n) {
    if (n < 1) throw std::domain_error("divisor_count: argument must be positive");
    long count = 0;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        count += (i * i == n) ? 1 : 2;
    }
    return count;
}

namespace {

// Elementary operations on a, mirrored into u (left factor) and v (right
// factor) so that u*a*v stays constant.
struct SnfWork {
    IntMatrix u, a, v;

    void swap_rows(int i, int j) {
        for (int c = 0; c < a.n; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int r = 0; r < a.n; ++r) std::swap(u.at(r, i), u.at(r, j));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < a.n; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int c = 0; c < a.n; ++c) std::swap(v.at(i, c), v.at(j, c));
    }
    // row i += q * row j
    void add_row(int i, int j, const Int& q) {
        for (int c = 0; c < a.n; ++c) a.at(i, c) += q * a.at(j, c);
        for (int r = 0; r < a.n; ++r) u.at(r, j) -= q * u.at(r, i);
    }
    // col i += q * col j
    void add_col(int i, int j, const Int& q) {
        for (int r = 0; r < a.n; ++r) a.at(r, i) += q * a.at(r, j);
        for (int c = 0; c < a.n; ++c) v.at(j, c) -= q * v.at(i, c);
    }
    void negate_row(int i) {
        for (int c = 0; c < a.n; ++c) a.at(i, c) = -a.at(i, c);
        for (int r = 0; r < a.n; ++r) u.at(r, i) = -u.at(r, i);
    }
};

}  // namespace

Snf smith_normal_form(const IntMatrix& m) {
    if (m.det() == 0) throw std::domain_error("smith_normal_form: singular matrix");
    const int d = m.n;
    SnfWork w{IntMatrix::identity(d), m, IntMatrix::identity(d)};

    for (int t = 0; t < d; ++t) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (t,t).
            int pr = -1, pc = -1;
            for (int i = t; i < d; ++i)
                for (int j = t; j < d; ++j) {
                    const Int& x = w.a.at(i, j);
                    if (x == 0) continue;
                    if (pr < 0 || abs(x) < abs(w.a.at(pr, pc))) { pr = i; pc = j; }
                }
            if (pr != t) w.swap_rows(t, pr);
            if (pc != t) w.swap_cols(t, pc);

            bool changed = false;
            for (int i = t + 1; i < d; ++i) {
                if (w.a.at(i, t) == 0) continue;
                Int q = w.a.at(i, t) / w.a.at(t, t);
                if (q != 0) w.add_row(i, t, -q);
                if (w.a.at(i, t) != 0) changed = true;
            }
            for (int j = t + 1; j < d; ++j) {
                if (w.a.at(t, j) == 0) continue;
                Int q = w.a.at(t, j) / w.a.at(t, t);
                if (q != 0) w.add_col(j, t, -q);
                if (w.a.at(t, j) != 0) changed = true;
            }
            if (changed) continue;

            // Pivot now alone in its row and column; force divisibility.
            int br = -1;
            for (int i = t + 1; i < d && br < 0; ++i)
                for (int j = t + 1; j < d; ++j)
                    if (w.a.at(i, j) % w.a.at(t, t) != 0) { br = i; break; }
            if (br < 0) break;
            w.add_row(t, br, 1);
        }
        if (w.a.at(t, t) < 0) w.negate_row(t);
    }
    return {std::move(w.u), std::move(w.a), std::move(w.v)};
}

IntMatrix adjugate(const IntMatrix& m) {
    const int d = m.n;
    IntMatrix q(d);
    if (d == 1) {
        q.at(0, 0) = 1;
        return q;
    }
    IntMatrix minor(d - 1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            for (int r = 0, mr = 0; r < d; ++r) {
                if (r == i) continue;
                for (int c = 0, mc = 0; c < d; ++c) {
                    if (c == j) continue;
                    minor.at(mr, mc++) = m.at(r, c);
                }
                ++mr;
            }
            Int cof = minor.det();
            q.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return q;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    Int dm = m.det();
    if (dm != 1 && dm != -1)
        throw std::domain_error("unimodular_inverse: determinant not +-1");
    IntMatrix q = adjugate(m);
    return dm == 1 ? q : -q;
}

}  // namespace numt
