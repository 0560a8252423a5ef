#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <json.hpp>

#include "quiveralg/numt.hpp"

namespace torquiver {

using MultiIndex = std::vector<long long>;

/// Data (F,G) of a torus quiver with F = diag(a_1..a_d), a_j >= 1,
/// det G != 0, and N = det F the fiber size.
struct TorusQuiverSpec {
    int d = 0;
    numt::IntMatrix F, G;
    long long N = 0;

    long long a(int j) const { return static_cast<long long>(F.at(j, j)); }
    long long g(int i, int j) const { return static_cast<long long>(G.at(i, j)); }
};

/// Validates and packs (F,G). F must already be diagonal with positive
/// entries; use reduce() for general F.
TorusQuiverSpec make_spec(const numt::IntMatrix& f, const numt::IntMatrix& g);

struct ReduceResult {
    TorusQuiverSpec spec;
    numt::IntMatrix u, v;  //!< f = u * spec.F * v and g = u * spec.G * v
};

/// Diagonalize F through unimodular factors and transport G accordingly.
/// Positive diagonal F passes through untouched with u = v = I.
ReduceResult reduce(const numt::IntMatrix& f, const numt::IntMatrix& g);

/// Point of T^d stored as angles in [0,1)^d.
struct TorusPoint {
    std::vector<double> t;
};

TorusPoint wrap(std::vector<double> angles);

/// All nu with 0 <= nu_j <= a_j - 1, lexicographically ordered; length N.
std::vector<MultiIndex> index_set(const TorusQuiverSpec& spec);

/// The N solutions y of F.y = G.x, as angles ((G t)_j + nu_j)/a_j mod 1
/// in index_set order.
std::vector<TorusPoint> fiber(const TorusQuiverSpec& spec, const TorusPoint& x);

using PairFunction = std::function<std::complex<double>(const TorusPoint&, const TorusPoint&)>;

/// <xi, eta>(x) = (1/N) * sum over the fiber of conj(xi) * eta.
std::complex<double> inner_product(const TorusQuiverSpec& spec, const PairFunction& xi,
                                   const PairFunction& eta, const TorusPoint& x);

/// Monomial u_nu(x,y) = y^nu.
PairFunction basis_monomial(MultiIndex nu);

struct OnbReport {
    double orth_defect = 0.0;
    double recon_defect = 0.0;
    int samples = 0;
    unsigned seed = 0;
    double tol = 0.0;
    bool pass = false;
};

/// Samples uniform x and measures how far {u_nu} is from an orthonormal
/// module basis: pairwise inner products against delta, and pointwise
/// reconstruction of a fixed battery of monomials x^a y^b, |a|+|b| <= 3.
OnbReport verify_onb(const TorusQuiverSpec& spec, int samples, unsigned seed = 0,
                     double tol = 1e-9);

nlohmann::ordered_json to_json(const TorusQuiverSpec& spec);
nlohmann::ordered_json to_json(const OnbReport& report);

}  // namespace torquiver
