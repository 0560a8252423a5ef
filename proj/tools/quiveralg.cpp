#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quiveralg/finquiver.hpp"
#include "quiveralg/starcalc.hpp"
#include "quiveralg/starverify.hpp"
#include "quiveralg/torquiver.hpp"

namespace {

/// Bad flag values found after CLI parsing; mapped to exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long long parse_entry(const std::string& cell, const std::string& flag) {
    size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(cell, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != cell.size())
        throw UsageError(flag + ": bad integer '" + cell + "'");
    return v;
}

std::vector<long long> parse_list(const std::string& text, const std::string& flag) {
    std::vector<long long> out;
    std::stringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) out.push_back(parse_entry(cell, flag));
    if (out.empty()) throw UsageError(flag + ": empty list");
    return out;
}

/// Rows split by ';', entries by ',': "4,6;2,2" is [[4,6],[2,2]].
numt::IntMatrix parse_matrix(const std::string& text, const std::string& flag) {
    std::vector<std::vector<long long>> rows;
    std::stringstream in(text);
    std::string row;
    while (std::getline(in, row, ';')) rows.push_back(parse_list(row, flag));
    if (rows.empty()) throw UsageError(flag + ": empty matrix");
    int d = static_cast<int>(rows.size());
    numt::IntMatrix m(d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(rows[i].size()) != d)
            throw UsageError(flag + ": matrix must be square, row " + std::to_string(i + 1) +
                             " has " + std::to_string(rows[i].size()) + " of " +
                             std::to_string(d) + " entries");
        for (int j = 0; j < d; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::string matrix_text(const numt::IntMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.n; ++i) {
        if (i) out << ";";
        for (int j = 0; j < m.n; ++j) out << (j ? "," : "") << m.at(i, j);
    }
    return out.str();
}

nlohmann::ordered_json matrix_json(const numt::IntMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.n; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(static_cast<long long>(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

torquiver::TorusQuiverSpec spec_from_flags(const std::string& fs, const std::string& gs) {
    return torquiver::make_spec(parse_matrix(fs, "--F"), parse_matrix(gs, "--G"));
}

int run_decompose(long p, long n, long m, bool json) {
    auto rep = finquiver::algebra_decomposition(p, n, m);
    if (json)
        std::cout << finquiver::to_json(rep).dump() << "\n";
    else
        std::cout << rep.render() << "\n";
    return 0;
}

int run_census(long p, bool json) {
    auto c = finquiver::census(p);
    if (json) {
        std::cout << finquiver::to_json(c).dump() << "\n";
        return 0;
    }
    std::cout << c.classes.size() << " classes\n";
    for (const auto& cls : c.classes) {
        std::cout << "  Q(" << cls.n << "," << cls.m << ")  size " << cls.size << "  members:";
        for (const auto& [n, m] : cls.members) std::cout << " (" << n << "," << m << ")";
        std::cout << "\n";
    }
    return 0;
}

int run_iso(long p, const std::string& q1, const std::string& q2, bool json) {
    auto p1 = parse_list(q1, "--q1");
    auto p2 = parse_list(q2, "--q2");
    if (p1.size() != 2 || p2.size() != 2)
        throw UsageError("--q1/--q2: expected a pair n,m");
    auto a = finquiver::build(p, static_cast<long>(p1[0]), static_cast<long>(p1[1]));
    auto b = finquiver::build(p, static_cast<long>(p2[0]), static_cast<long>(p2[1]));
    auto w = finquiver::isomorphic(a, b);
    if (json) {
        nlohmann::ordered_json j;
        j["isomorphic"] = w.has_value();
        if (w) {
            j["vertex_map"] = w->vertex_map;
            j["edge_map"] = w->edge_map;
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "isomorphic: " << (w ? "yes" : "no") << "\n";
    if (w) {
        std::cout << "vertex map:";
        for (size_t x = 0; x < w->vertex_map.size(); ++x)
            std::cout << " " << x << "->" << w->vertex_map[x];
        std::cout << "\n";
    }
    return 0;
}

int run_build(long p, long n, long m, bool json) {
    auto q = finquiver::build(p, n, m);
    std::cout << finquiver::to_json(q).dump(json ? -1 : 2) << "\n";
    return 0;
}

int run_reduce(const std::string& fs, const std::string& gs, bool json) {
    numt::IntMatrix f = parse_matrix(fs, "--F");
    numt::IntMatrix g = parse_matrix(gs, "--G");
    if (f.n != g.n) throw std::domain_error("F and G must have the same size");
    if (f.det() == 0) throw std::domain_error("singular F");
    if (g.det() == 0) throw std::domain_error("singular G");
    auto res = torquiver::reduce(f, g);
    if (json) {
        auto j = torquiver::to_json(res.spec);
        j["U"] = matrix_json(res.u);
        j["V"] = matrix_json(res.v);
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "F' = " << matrix_text(res.spec.F) << "\n";
    std::cout << "G' = " << matrix_text(res.spec.G) << "\n";
    std::cout << "U = " << matrix_text(res.u) << "\n";
    std::cout << "V = " << matrix_text(res.v) << "\n";
    return 0;
}

int run_onb(const std::string& fs, const std::string& gs, int samples, unsigned seed, double tol,
            bool json) {
    auto spec = spec_from_flags(fs, gs);
    auto rep = torquiver::verify_onb(spec, samples, seed, tol);
    if (json) {
        std::cout << torquiver::to_json(rep).dump() << "\n";
    } else {
        std::cout << "orthonormality defect = " << rep.orth_defect << "\n";
        std::cout << "reconstruction defect = " << rep.recon_defect << "\n";
        std::cout << "samples = " << rep.samples << ", seed = " << rep.seed
                  << ", tol = " << rep.tol << "\n";
        std::cout << "result: " << (rep.pass ? "pass" : "FAIL") << "\n";
    }
    return rep.pass ? 0 : 2;
}

int run_normalize(const std::string& fs, const std::string& gs, const std::string& word,
                  bool json) {
    auto spec = spec_from_flags(fs, gs);
    auto elem = starcalc::normalize(spec, word);
    if (json)
        std::cout << starcalc::to_json(elem).dump() << "\n";
    else
        std::cout << starcalc::to_string(elem) << "\n";
    return 0;
}

starverify::VerifyReport run_check(const std::string& check, const torquiver::TorusQuiverSpec& spec,
                                   const std::string& kflag, int trials, unsigned seed) {
    std::vector<long long> klist;
    if (!kflag.empty()) klist = parse_list(kflag, "--k");
    auto scalar_k = [&](long long dflt) {
        if (klist.empty()) return dflt;
        if (klist.size() != 1) throw UsageError("--k: this check takes a single level");
        return klist[0];
    };
    auto vector_k = [&]() {
        if (klist.empty()) return std::vector<long long>(spec.d, 1);
        if (static_cast<int>(klist.size()) != spec.d)
            throw UsageError("--k: expected " + std::to_string(spec.d) + " entries");
        return klist;
    };
    if (check == "presentation") return starverify::verify_presentation(spec);
    if (check == "power-quotient") return starverify::verify_power_quotient(spec, scalar_k(1));
    if (check == "subalg-gens") return starverify::verify_subalgebra_generators(spec, vector_k());
    if (check == "twisted") return starverify::verify_twisted_family(spec, vector_k());
    if (check == "matrix-units") return starverify::verify_matrix_units(spec, scalar_k(1));
    if (check == "diagram") return starverify::verify_colimit_diagram(spec, scalar_k(1));
    if (check == "crossed-product")
        return starverify::verify_crossed_product(spec, scalar_k(1), trials, seed);
    throw UsageError("--check: unknown check '" + check + "'");
}

int run_verify(const std::string& check, const std::string& fs, const std::string& gs,
               const std::string& kflag, int trials, unsigned seed, bool json) {
    auto spec = spec_from_flags(fs, gs);
    auto rep = run_check(check, spec, kflag, trials, seed);
    bool ok = rep.hypothesis_met && rep.pass();
    if (json) {
        std::cout << starverify::to_json(rep).dump() << "\n";
        return ok ? 0 : 2;
    }
    std::cout << "check: " << rep.check << "\n";
    if (!rep.hypothesis_met || !rep.hypothesis_note.empty())
        std::cout << "hypothesis: " << (rep.hypothesis_met ? "met" : "NOT met")
                  << (rep.hypothesis_note.empty() ? "" : " (" + rep.hypothesis_note + ")") << "\n";
    for (const auto& c : rep.checks)
        std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name
                  << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
    for (size_t i = 0; i < rep.witnesses.size(); ++i)
        std::cout << "witness " << i + 1 << ": " << rep.witnesses[i] << "\n";
    std::cout << "result: " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quivers Q_{n,m}(Z_p) and Q_F,G(T^d): decompositions, reductions, and the\n"
                 "symbolic *-algebra of the associated generators and relations."};
    app.require_subcommand(1);

    long p = 0, n = 0, m = 0;
    std::string q1, q2, fs, gs, word, check, kflag;
    int samples = 100, trials = 25;
    unsigned seed = 0;
    double tol = 1e-9;
    bool json = false;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "machine output"); };

    auto* dec = app.add_subcommand("decompose", "Block decomposition of the algebra of Q_{n,m}(Z_p)");
    dec->add_option("--p", p, "modulus")->required();
    dec->add_option("--n", n, "range coefficient")->required();
    dec->add_option("--m", m, "source coefficient")->required();
    add_json(dec);

    auto* cen = app.add_subcommand("census", "Isomorphism classes of Q_{n,m}(Z_p) over all n, m");
    cen->add_option("--p", p, "modulus")->required();
    add_json(cen);

    auto* iso = app.add_subcommand("iso", "Test two quivers over Z_p for isomorphism");
    iso->add_option("--p", p, "modulus")->required();
    iso->add_option("--q1", q1, "first pair n,m")->required();
    iso->add_option("--q2", q2, "second pair n,m")->required();
    add_json(iso);

    auto* bld = app.add_subcommand("build", "Emit the edge list of Q_{n,m}(Z_p) as JSON");
    bld->add_option("--p", p, "modulus")->required();
    bld->add_option("--n", n, "range coefficient")->required();
    bld->add_option("--m", m, "source coefficient")->required();
    add_json(bld);

    auto* red = app.add_subcommand("reduce", "Diagonalize F by unimodular moves, transporting G");
    red->add_option("--F", fs, "matrix a,b;c,d")->required();
    red->add_option("--G", gs, "matrix a,b;c,d")->required();
    add_json(red);

    auto* onb = app.add_subcommand("onb", "Sampled orthonormal-basis check for the monomial frame");
    onb->add_option("--F", fs, "diagonal matrix")->required();
    onb->add_option("--G", gs, "matrix")->required();
    onb->add_option("--samples", samples, "sample count");
    onb->add_option("--seed", seed, "RNG seed");
    onb->add_option("--tol", tol, "defect tolerance");
    add_json(onb);

    auto* nrm = app.add_subcommand("normalize", "Rewrite a generator word to normal form");
    nrm->add_option("--F", fs, "diagonal matrix")->required();
    nrm->add_option("--G", gs, "matrix")->required();
    nrm->add_option("--word", word, "word in U<j>, S, S*")->required();
    add_json(nrm);

    auto* ver = app.add_subcommand("verify", "Machine-check a relation suite");
    ver->add_option("--check", check, "suite name")
        ->required()
        ->check(CLI::IsMember({"presentation", "power-quotient", "subalg-gens", "twisted",
                               "matrix-units", "diagram", "crossed-product"}));
    ver->add_option("--F", fs, "diagonal matrix")->required();
    ver->add_option("--G", gs, "matrix")->required();
    ver->add_option("--k", kflag, "level, or comma list for subalg-gens and twisted");
    ver->add_option("--trials", trials, "random trials (crossed-product)");
    ver->add_option("--seed", seed, "RNG seed");
    add_json(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (dec->parsed()) return run_decompose(p, n, m, json);
        if (cen->parsed()) return run_census(p, json);
        if (iso->parsed()) return run_iso(p, q1, q2, json);
        if (bld->parsed()) return run_build(p, n, m, json);
        if (red->parsed()) return run_reduce(fs, gs, json);
        if (onb->parsed()) return run_onb(fs, gs, samples, seed, tol, json);
        if (nrm->parsed()) return run_normalize(fs, gs, word, json);
        if (ver->parsed()) return run_verify(check, fs, gs, kflag, trials, seed, json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const starcalc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
