// Acceptance gate for the library: seven criteria covering the finite and
// torus quiver computations and the symbolic relation checker. Each criterion
// prints one pass/fail line; the process exits nonzero when any fail.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "quiveralg/finquiver.hpp"
#include "quiveralg/numt.hpp"
#include "quiveralg/starcalc.hpp"
#include "quiveralg/starverify.hpp"
#include "quiveralg/torquiver.hpp"

using numt::IntMatrix;
using starcalc::AlgebraElement;
using torquiver::TorusQuiverSpec;

namespace {

int failures = 0;

template <class Body>
void criterion(int num, const std::string& name, double budget_s, Body body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > budget_s) {
        ok = false;
        note = "over time budget of " + std::to_string(budget_s) + "s";
    }
    std::printf("%s  criterion %d: %s  [%.2fs]%s%s\n", ok ? "PASS" : "FAIL", num, name.c_str(),
                secs, note.empty() ? "" : "  ", note.c_str());
    if (!ok) ++failures;
}

TorusQuiverSpec spec1(long long a, long long b) {
    return torquiver::make_spec(IntMatrix(1, {numt::Int(a)}), IntMatrix(1, {numt::Int(b)}));
}

std::vector<TorusQuiverSpec> battery() {
    std::vector<TorusQuiverSpec> specs;
    for (long long a : {2, 3})
        for (long long b : {1, 3, -1}) specs.push_back(spec1(a, b));
    IntMatrix f(2, {2, 0, 0, 3});
    specs.push_back(torquiver::make_spec(f, IntMatrix::identity(2)));
    specs.push_back(torquiver::make_spec(f, IntMatrix(2, {1, 1, 0, 1})));
    specs.push_back(torquiver::make_spec(f, IntMatrix(2, {5, 0, 0, 1})));
    return specs;
}

bool expect(bool cond, std::string& note, const std::string& what) {
    if (!cond && note.empty()) note = what;
    return cond;
}

// --- criterion bodies ---

bool c1_decompositions(std::string& note) {
    using Sum = std::vector<std::pair<long, long>>;
    bool ok = true;
    auto r1 = finquiver::algebra_decomposition(72, 5, 1);
    ok &= expect(r1.summands == Sum{{1, 4}, {2, 10}, {6, 8}}, note,
                 "Q_{5,1}(Z_72) gave " + r1.render());
    auto r2 = finquiver::algebra_decomposition(77, 6, 1);
    ok &= expect(r2.summands == Sum{{1, 1}, {2, 3}, {10, 7}}, note,
                 "Q_{6,1}(Z_77) gave " + r2.render());
    return ok;
}

bool c2_census(std::string& note) {
    bool ok = true;
    for (long p : {2, 3, 5, 7, 11, 13}) {
        auto c = finquiver::census(p);
        long expected = numt::divisor_count(p - 1) + 3;
        ok &= expect(static_cast<long>(c.classes.size()) == expected, note,
                     "p = " + std::to_string(p) + ": " + std::to_string(c.classes.size()) +
                         " classes, closed form says " + std::to_string(expected));
    }
    ok &= expect(finquiver::census(2).classes.size() == 4, note, "p = 2 should give 4 classes");
    auto c3 = finquiver::census(3);
    ok &= expect(c3.classes.size() == 5, note, "p = 3 should give 5 classes");

    auto class_of = [&](long n, long m) {
        for (size_t i = 0; i < c3.classes.size(); ++i)
            for (auto& [cn, cm] : c3.classes[i].members)
                if (cn == n && cm == m) return static_cast<long>(i);
        return -1L;
    };
    auto paired = [&](long n1, long m1, long n2, long m2) {
        return class_of(n1, m1) >= 0 && class_of(n1, m1) == class_of(n2, m2);
    };
    ok &= expect(paired(0, 1, 0, 2), note, "Q(0,1) and Q(0,2) should pair at p = 3");
    ok &= expect(paired(1, 1, 2, 2), note, "Q(1,1) and Q(2,2) should pair at p = 3");
    ok &= expect(paired(1, 2, 2, 1), note, "Q(1,2) and Q(2,1) should pair at p = 3");
    ok &= expect(paired(1, 0, 2, 0), note, "Q(1,0) and Q(2,0) should pair at p = 3");
    return ok;
}

bool c3_base_points(std::string& note) {
    bool ok = true;
    for (long p = 1; p <= 100 && ok; ++p) {
        for (long n = 0; n < p; ++n) {
            if (std::gcd(n, p) != 1) continue;
            long o = p >= 2 ? static_cast<long>(numt::mult_order(n, p)) : 1;
            long nk = 1 % p;
            for (long k = 1; k <= o; ++k) {
                nk = (nk * n) % p;
                long brute = 0;
                for (long y = 0; y < p; ++y)
                    if (nk * y % p == y) ++brute;
                ok &= expect(finquiver::loop_base_points(p, n, k) == brute, note,
                             "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
            }
        }
    }
    return ok;
}

bool c4_snf(std::string& note) {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long long> ent(-9, 9);
    bool ok = true;
    int done = 0;
    while (done < 100 && ok) {
        int d = 1 + done % 3;
        IntMatrix m(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m.at(i, j) = ent(rng);
        if (m.det() == 0) continue;
        auto s = numt::smith_normal_form(m);
        std::string tag = "matrix " + std::to_string(done);
        ok &= expect(s.u * s.d * s.v == m, note, tag + ": U D V != M");
        numt::Int du = s.u.det(), dv = s.v.det();
        ok &= expect((du == 1 || du == -1) && (dv == 1 || dv == -1), note,
                     tag + ": transforms not unimodular");
        ok &= expect(s.d.is_diagonal(), note, tag + ": D not diagonal");
        for (int i = 0; i + 1 < d; ++i)
            ok &= expect(s.d.at(i, i) > 0 && s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0, note,
                         tag + ": divisibility chain broken");
        ok &= expect(s.d.at(d - 1, d - 1) > 0, note, tag + ": diagonal not positive");
        ++done;
    }
    return ok;
}

bool c5_onb(std::string& note) {
    bool ok = true;
    for (const auto& spec : battery()) {
        auto rep = torquiver::verify_onb(spec, 100, 0, 1e-9);
        ok &= expect(rep.pass && rep.orth_defect < 1e-9 && rep.recon_defect < 1e-9, note,
                     "defects " + std::to_string(rep.orth_defect) + " / " +
                         std::to_string(rep.recon_defect));
    }
    return ok;
}

bool c6_relation_suites(std::string& note) {
    bool ok = true;
    auto need = [&](const starverify::VerifyReport& r, const std::string& tag) {
        bool good = r.hypothesis_met && r.pass();
        if (!good && note.empty()) {
            note = tag + " failed";
            for (const auto& c : r.checks)
                if (!c.pass) note += ": " + c.name;
        }
        ok &= good;
    };

    for (const auto& spec : battery()) need(starverify::verify_presentation(spec), "presentation");

    for (long long k = 1; k <= 3; ++k) {
        need(starverify::verify_matrix_units(spec1(2, 3), k), "matrix-units N=2");
        need(starverify::verify_matrix_units(spec1(4, 3), k), "matrix-units N=4");
    }
    auto d2 = torquiver::make_spec(IntMatrix(2, {2, 0, 0, 2}), IntMatrix::identity(2));
    for (long long k = 1; k <= 2; ++k)
        need(starverify::verify_matrix_units(d2, k), "matrix-units d=2");

    need(starverify::verify_power_quotient(spec1(2, 1), 2), "power-quotient (2,1)");
    need(starverify::verify_power_quotient(spec1(2, -1), 3), "power-quotient (2,-1)");
    need(starverify::verify_power_quotient(spec1(3, 1), 2), "power-quotient (3,1)");
    for (const auto& spec : battery())
        need(starverify::verify_power_quotient(spec, 1), "power-quotient k=1");
    auto d2i = torquiver::make_spec(IntMatrix(2, {2, 0, 0, 3}), IntMatrix::identity(2));
    need(starverify::verify_power_quotient(d2i, 2), "power-quotient d=2");

    need(starverify::verify_subalgebra_generators(spec1(2, 3), {2}), "subalg-gens (2,3)");
    need(starverify::verify_subalgebra_generators(spec1(3, 1), {3}), "subalg-gens (3,1)");
    for (const auto& spec : battery()) {
        long long df = static_cast<long long>(spec.F.det()), dg = static_cast<long long>(spec.G.det());
        if (std::gcd(df < 0 ? -df : df, dg < 0 ? -dg : dg) != 1) continue;
        need(starverify::verify_subalgebra_generators(spec, std::vector<long long>(spec.d, 1)),
             "subalg-gens battery");
    }

    need(starverify::verify_twisted_family(spec1(2, 3), {1}), "twisted (2,3)");
    need(starverify::verify_twisted_family(spec1(3, -1), {2}), "twisted (3,-1)");
    need(starverify::verify_twisted_family(
             torquiver::make_spec(IntMatrix(2, {2, 0, 0, 3}), IntMatrix(2, {5, 0, 0, 1})), {3, 2}),
         "twisted d=2");

    need(starverify::verify_colimit_diagram(spec1(2, 3), 1), "diagram k=1");
    need(starverify::verify_colimit_diagram(spec1(2, 3), 2), "diagram k=2");
    need(starverify::verify_colimit_diagram(d2i, 1), "diagram d=2");

    need(starverify::verify_crossed_product(spec1(2, 3), 1, 25, 0), "crossed-product (2,3)");
    need(starverify::verify_crossed_product(d2i, 1, 25, 0), "crossed-product d=2");
    return ok;
}

// random words over the generators, as in the unit suite but self-contained
starcalc::GeneratorWord random_word(const TorusQuiverSpec& spec, std::mt19937& rng) {
    std::uniform_int_distribution<int> len(1, 8), kind(0, 3), idx(0, spec.d - 1);
    std::uniform_int_distribution<long long> expo(1, 4), re(-2, 2), im(-2, 2);
    starcalc::GeneratorWord w;
    w.coeff = {numt::Rat(re(rng)), numt::Rat(im(rng))};
    if (w.coeff.is_zero()) w.coeff = {numt::Rat(1)};
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        starcalc::Letter l;
        switch (kind(rng)) {
            case 0: l.kind = starcalc::LetterKind::S; break;
            case 1: l.kind = starcalc::LetterKind::SStar; break;
            default:
                l.kind = starcalc::LetterKind::U;
                l.j = idx(rng) + 1;
                l.e = kind(rng) % 2 ? expo(rng) : -expo(rng);
        }
        w.letters.push_back(l);
    }
    return w;
}

starcalc::GeneratorWord adjoint_word(const starcalc::GeneratorWord& w) {
    starcalc::GeneratorWord out;
    out.coeff = w.coeff.conj();
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        starcalc::Letter l = *it;
        if (l.kind == starcalc::LetterKind::S)
            l.kind = starcalc::LetterKind::SStar;
        else if (l.kind == starcalc::LetterKind::SStar)
            l.kind = starcalc::LetterKind::S;
        else
            l.e = -l.e;
        out.letters.push_back(l);
    }
    return out;
}

bool c7_rewriting_laws(std::string& note) {
    std::mt19937 rng(2024);
    auto specs = battery();
    bool ok = true;
    std::vector<std::vector<starcalc::GeneratorWord>> words(specs.size());
    std::vector<std::vector<AlgebraElement>> elems(specs.size());

    for (int i = 0; i < 500 && ok; ++i) {
        size_t s = i % specs.size();
        const auto& spec = specs[s];
        auto w = random_word(spec, rng);
        AlgebraElement x = starcalc::normalize(spec, {w});
        std::string tag = "word " + std::to_string(i);

        ok &= expect(x.canonical_shape, note, tag + ": result not canonical");
        ok &= expect(starcalc::equals(starcalc::normalize(x), x), note, tag + ": not idempotent");
        AlgebraElement xs = starcalc::normalize(spec, {adjoint_word(w)});
        ok &= expect(starcalc::equals(starcalc::adjoint(x), xs), note,
                     tag + ": adjoint incompatible");

        if (!words[s].empty()) {
            // concatenation must agree with multiply
            auto prev_w = words[s].back();
            AlgebraElement prev = elems[s].back();
            starcalc::GeneratorWord cat;
            cat.coeff = prev_w.coeff * w.coeff;
            cat.letters = prev_w.letters;
            cat.letters.insert(cat.letters.end(), w.letters.begin(), w.letters.end());
            ok &= expect(starcalc::equals(starcalc::normalize(spec, {cat}),
                                          starcalc::multiply(prev, x)),
                         note, tag + ": concatenation disagrees with multiply");
        }
        if (elems[s].size() >= 2) {
            AlgebraElement a = elems[s][elems[s].size() - 2];
            AlgebraElement b = elems[s].back();
            ok &= expect(starcalc::equals(starcalc::multiply(starcalc::multiply(a, b), x),
                                          starcalc::multiply(a, starcalc::multiply(b, x))),
                         note, tag + ": associativity broken");
        }
        words[s].push_back(w);
        elems[s].push_back(x);
        if (elems[s].size() > 3) {
            elems[s].erase(elems[s].begin());
            words[s].erase(words[s].begin());
        }
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "cyclic quiver algebra decompositions", 1.0, c1_decompositions);
    criterion(2, "census closed form and the p = 3 pairings", 30.0, c2_census);
    criterion(3, "loop base point counts against brute force", 10.0, c3_base_points);
    criterion(4, "smith normal form on 100 random matrices", 1.0, c4_snf);
    criterion(5, "orthonormal basis defects across the battery", 5.0, c5_onb);
    criterion(6, "symbolic relation suites", 60.0, c6_relation_suites);
    criterion(7, "rewriting engine laws on 500 random words", 30.0, c7_rewriting_laws);
    if (failures == 0)
        std::printf("all 7 acceptance criteria passed\n");
    else
        std::printf("%d of 7 acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
