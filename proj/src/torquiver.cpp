#include "quiveralg/torquiver.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace torquiver {

namespace {

double frac(double v) {
    double f = v - std::floor(v);
    return f >= 1.0 ? 0.0 : f;
}

std::complex<double> unit_phase(double turns) {
    double arg = 2.0 * std::numbers::pi * turns;
    return {std::cos(arg), std::sin(arg)};
}

// All integer vectors of length d with L1 norm <= radius.
void ball_rec(int d, long long radius, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (static_cast<int>(cur.size()) == d) {
        out.push_back(cur);
        return;
    }
    for (long long v = -radius; v <= radius; ++v) {
        cur.push_back(v);
        ball_rec(d, radius - std::llabs(v), cur, out);
        cur.pop_back();
    }
}

std::vector<MultiIndex> l1_ball(int d, long long radius) {
    std::vector<MultiIndex> out;
    MultiIndex cur;
    ball_rec(d, radius, cur, out);
    return out;
}

}  // namespace

TorusQuiverSpec make_spec(const numt::IntMatrix& f, const numt::IntMatrix& g) {
    if (f.n < 1 || f.n != g.n) throw std::domain_error("make_spec: dimension mismatch");
    if (!f.is_diagonal()) throw std::domain_error("make_spec: F must be diagonal");
    TorusQuiverSpec spec;
    spec.d = f.n;
    spec.F = f;
    spec.G = g;
    long long n = 1;
    for (int j = 0; j < f.n; ++j) {
        if (f.at(j, j) < 1) throw std::domain_error("make_spec: F entries must be positive");
        n *= static_cast<long long>(f.at(j, j));
    }
    spec.N = n;
    if (g.det() == 0) throw std::domain_error("make_spec: G must be nonsingular");
    return spec;
}

ReduceResult reduce(const numt::IntMatrix& f, const numt::IntMatrix& g) {
    if (f.n != g.n) throw std::domain_error("reduce: dimension mismatch");
    if (f.det() == 0) throw std::domain_error("reduce: F must be nonsingular");
    if (g.det() == 0) throw std::domain_error("reduce: G must be nonsingular");

    bool positive_diagonal = f.is_diagonal();
    for (int j = 0; positive_diagonal && j < f.n; ++j)
        if (f.at(j, j) < 1) positive_diagonal = false;
    if (positive_diagonal)
        return {make_spec(f, g), numt::IntMatrix::identity(f.n), numt::IntMatrix::identity(f.n)};

    auto [u, dd, v] = numt::smith_normal_form(f);
    numt::IntMatrix gp = numt::unimodular_inverse(u) * g * numt::unimodular_inverse(v);
    if (u * dd * v != f || u * gp * v != g)
        throw std::logic_error("reduce: factorization failed to round-trip");
    if (abs(gp.det()) != abs(g.det()))
        throw std::logic_error("reduce: determinant not preserved");
    return {make_spec(dd, gp), u, v};
}

TorusPoint wrap(std::vector<double> angles) {
    for (double& v : angles) v = frac(v);
    return {std::move(angles)};
}

std::vector<MultiIndex> index_set(const TorusQuiverSpec& spec) {
    std::vector<MultiIndex> out;
    out.reserve(static_cast<size_t>(spec.N));
    MultiIndex nu(static_cast<size_t>(spec.d), 0);
    for (;;) {
        out.push_back(nu);
        int j = spec.d - 1;
        while (j >= 0 && ++nu[static_cast<size_t>(j)] == spec.a(j)) {
            nu[static_cast<size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

std::vector<TorusPoint> fiber(const TorusQuiverSpec& spec, const TorusPoint& x) {
    if (static_cast<int>(x.t.size()) != spec.d)
        throw std::domain_error("fiber: point dimension mismatch");
    std::vector<double> gt(static_cast<size_t>(spec.d), 0.0);
    for (int j = 0; j < spec.d; ++j)
        for (int k = 0; k < spec.d; ++k)
            gt[static_cast<size_t>(j)] +=
                static_cast<double>(spec.g(j, k)) * x.t[static_cast<size_t>(k)];

    std::vector<TorusPoint> ys;
    ys.reserve(static_cast<size_t>(spec.N));
    for (const MultiIndex& nu : index_set(spec)) {
        std::vector<double> y(static_cast<size_t>(spec.d));
        for (int j = 0; j < spec.d; ++j)
            y[static_cast<size_t>(j)] =
                frac((gt[static_cast<size_t>(j)] + static_cast<double>(nu[static_cast<size_t>(j)])) /
                     static_cast<double>(spec.a(j)));
        // F.y - G.x must be integral
        for (int j = 0; j < spec.d; ++j) {
            double resid = static_cast<double>(spec.a(j)) * y[static_cast<size_t>(j)] -
                           gt[static_cast<size_t>(j)];
            if (std::abs(resid - std::round(resid)) >= 1e-12)
                throw std::logic_error("fiber: point violates the defining equation");
        }
        ys.push_back({std::move(y)});
    }
    return ys;
}

std::complex<double> inner_product(const TorusQuiverSpec& spec, const PairFunction& xi,
                                   const PairFunction& eta, const TorusPoint& x) {
    std::complex<double> acc = 0.0;
    for (const TorusPoint& y : fiber(spec, x)) acc += std::conj(xi(x, y)) * eta(x, y);
    return acc / static_cast<double>(spec.N);
}

PairFunction basis_monomial(MultiIndex nu) {
    return [nu](const TorusPoint&, const TorusPoint& y) {
        double turns = 0.0;
        for (size_t j = 0; j < nu.size(); ++j)
            turns += static_cast<double>(nu[j]) * y.t[j];
        return unit_phase(turns);
    };
}

OnbReport verify_onb(const TorusQuiverSpec& spec, int samples, unsigned seed, double tol) {
    if (samples < 1) throw std::domain_error("verify_onb: need at least one sample");
    OnbReport rep;
    rep.samples = samples;
    rep.seed = seed;
    rep.tol = tol;

    std::vector<MultiIndex> idx = index_set(spec);
    std::vector<PairFunction> basis;
    basis.reserve(idx.size());
    for (const MultiIndex& nu : idx) basis.push_back(basis_monomial(nu));

    // battery: all monomials x^a y^b with |a|+|b| <= 3
    struct Monomial {
        MultiIndex a, b;
    };
    std::vector<Monomial> battery;
    for (const MultiIndex& a : l1_ball(spec.d, 3)) {
        long long used = 0;
        for (long long c : a) used += std::llabs(c);
        for (const MultiIndex& b : l1_ball(spec.d, 3 - used)) battery.push_back({a, b});
    }
    auto eval = [](const Monomial& m, const TorusPoint& x, const TorusPoint& y) {
        double turns = 0.0;
        for (size_t j = 0; j < m.a.size(); ++j) turns += static_cast<double>(m.a[j]) * x.t[j];
        for (size_t j = 0; j < m.b.size(); ++j) turns += static_cast<double>(m.b[j]) * y.t[j];
        return unit_phase(turns);
    };

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int s = 0; s < samples; ++s) {
        std::vector<double> t(static_cast<size_t>(spec.d));
        for (double& v : t) v = uniform(rng);
        TorusPoint x = wrap(std::move(t));
        std::vector<TorusPoint> ys = fiber(spec, x);

        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j) {
                std::complex<double> ip = inner_product(spec, basis[i], basis[j], x);
                double want = i == j ? 1.0 : 0.0;
                rep.orth_defect = std::max(rep.orth_defect, std::abs(ip - want));
            }

        for (const Monomial& m : battery) {
            PairFunction xi = [&](const TorusPoint& px, const TorusPoint& py) {
                return eval(m, px, py);
            };
            std::vector<std::complex<double>> coeff(basis.size());
            for (size_t i = 0; i < basis.size(); ++i)
                coeff[i] = inner_product(spec, basis[i], xi, x);
            for (const TorusPoint& y : ys) {
                std::complex<double> recon = 0.0;
                for (size_t i = 0; i < basis.size(); ++i) recon += basis[i](x, y) * coeff[i];
                rep.recon_defect = std::max(rep.recon_defect, std::abs(recon - xi(x, y)));
            }
        }
    }
    rep.pass = rep.orth_defect < tol && rep.recon_defect < tol;
    return rep;
}

nlohmann::ordered_json to_json(const TorusQuiverSpec& spec) {
    nlohmann::ordered_json j;
    j["d"] = spec.d;
    auto mat = [](const numt::IntMatrix& m) {
        auto rows = nlohmann::ordered_json::array();
        for (int i = 0; i < m.n; ++i) {
            auto row = nlohmann::ordered_json::array();
            for (int c = 0; c < m.n; ++c) row.push_back(static_cast<long long>(m.at(i, c)));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["F"] = mat(spec.F);
    j["G"] = mat(spec.G);
    return j;
}

nlohmann::ordered_json to_json(const OnbReport& report) {
    nlohmann::ordered_json j;
    j["orth_defect"] = report.orth_defect;
    j["recon_defect"] = report.recon_defect;
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    j["tol"] = report.tol;
    j["pass"] = report.pass;
    return j;
}

}  // namespace torquiver
