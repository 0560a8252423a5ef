#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quiveralg/numt.hpp"
#include "quiveralg/torquiver.hpp"

namespace starcalc {

using torquiver::MultiIndex;
using torquiver::TorusQuiverSpec;

/// Exact coefficient a + b*i with rational a, b.
struct GaussianRational {
    numt::Rat re, im;

    GaussianRational() = default;
    GaussianRational(long long r) : re(r) {}
    GaussianRational(numt::Rat r) : re(std::move(r)) {}
    GaussianRational(numt::Rat r, numt::Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

/// Spanning-set word S_alpha U^nu S_beta*. Paths are stored outermost first:
/// alpha = (a_1..a_k) means S_{a_1}...S_{a_k}, and S_beta* is the adjoint of
/// the path word, so beta[0] labels the rightmost starred factor.
struct NormalTerm {
    std::vector<MultiIndex> alpha;
    MultiIndex nu;
    std::vector<MultiIndex> beta;

    long long gauge_degree() const {
        return static_cast<long long>(alpha.size()) - static_cast<long long>(beta.size());
    }
    bool operator==(const NormalTerm& o) const {
        return alpha == o.alpha && nu == o.nu && beta == o.beta;
    }
    // ordered by (gauge degree, |beta|, alpha, nu, beta)
    bool operator<(const NormalTerm& o) const;
};

using TermMap = std::map<NormalTerm, GaussianRational>;

/// Finite linear combination of normal terms over one (F,G) spec.
/// canonical_shape marks that every gauge degree has been contracted to its
/// minimal common shape, which makes the representation unique and equality
/// a structural comparison; expand_level intentionally returns elements with
/// the flag off.
struct AlgebraElement {
    TorusQuiverSpec spec;
    TermMap terms;
    bool canonical_shape = true;

    bool is_zero() const { return terms.empty(); }
};

// constructors
AlgebraElement zero(const TorusQuiverSpec& spec);
AlgebraElement scalar(const TorusQuiverSpec& spec, GaussianRational c);
AlgebraElement one(const TorusQuiverSpec& spec);
AlgebraElement from_term(const TorusQuiverSpec& spec, NormalTerm t, GaussianRational c = 1);
AlgebraElement u_monomial(const TorusQuiverSpec& spec, MultiIndex nu);
AlgebraElement isometry(const TorusQuiverSpec& spec);  // S
AlgebraElement path_isometry(const TorusQuiverSpec& spec, std::vector<MultiIndex> alpha);

/// E_{alpha,beta} = S_alpha S_beta*; requires |alpha| = |beta| with entries
/// in the index set.
AlgebraElement matrix_unit(const TorusQuiverSpec& spec, std::vector<MultiIndex> alpha,
                           std::vector<MultiIndex> beta);

// arithmetic; canonical results
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const GaussianRational& c, const AlgebraElement& x);
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement adjoint(const AlgebraElement& x);
bool equals(const AlgebraElement& x, const AlgebraElement& y);

/// Re-canonicalize an element (idempotent).
AlgebraElement normalize(const AlgebraElement& x);

/// Gauge-invariant conditional expectation: keeps degree-0 terms only.
AlgebraElement expectation(const AlgebraElement& x);

/// Rewrite every term to path lengths (k1,k2) through the partition-of-unity
/// expansion S_a U^nu S_b* = sum_mu S_{(a,mu)} U^{nu_mu} S_{(b,pi_mu)}*.
/// Requires k1 - k2 to match the gauge degree of every term.
AlgebraElement expand_level(const AlgebraElement& x, long long k1, long long k2);

/// rho(S_alpha f S_beta*) = S_{(0,alpha)} f S_{(0,beta)}*; degree-0 input.
AlgebraElement rho(const AlgebraElement& x);

using LaurentPoly = std::map<MultiIndex, GaussianRational>;

/// Compression of a degree-0 element to an N^k x N^k matrix of Laurent
/// polynomials, rows and columns labeled by length-k paths in lex order.
struct LaurentMatrix {
    TorusQuiverSpec spec;
    long long level = 0;
    std::vector<std::vector<MultiIndex>> paths;
    std::vector<LaurentPoly> entries;  //!< row-major, paths.size()^2
    bool entries_in_power_subring = true;  //!< all exponents divisible by a_j^level

    size_t size() const { return paths.size(); }
    LaurentPoly& at(size_t r, size_t c) { return entries[r * paths.size() + c]; }
    const LaurentPoly& at(size_t r, size_t c) const { return entries[r * paths.size() + c]; }
    LaurentMatrix operator*(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix& o) const;
};

std::vector<std::vector<MultiIndex>> level_paths(const TorusQuiverSpec& spec, long long k);

/// entry(alpha,beta) = normalize(S_alpha* x S_beta); throws std::domain_error
/// when an entry fails to reduce to a Laurent polynomial.
LaurentMatrix to_matrix(const AlgebraElement& x, long long k);

/// Inverse of to_matrix: sum of S_alpha entry S_beta*.
AlgebraElement from_matrix(const LaurentMatrix& m);

// --- words and parsing ---

enum class LetterKind { U, S, SStar };

struct Letter {
    LetterKind kind = LetterKind::S;
    int j = 0;        //!< 1-based unitary index, U letters only
    long long e = 0;  //!< nonzero exponent, U letters only
};

struct GeneratorWord {
    GaussianRational coeff{numt::Rat(1)};
    std::vector<Letter> letters;
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Grammar: whitespace-separated tokens U<j>, U<j>^<int>, U<j>*, S, S*,
/// rational coefficients <int>[/<int>][i], sums joined by + and -.
std::vector<GeneratorWord> parse_word(std::string_view text, const TorusQuiverSpec& spec);

AlgebraElement normalize(const TorusQuiverSpec& spec, const std::vector<GeneratorWord>& words);
AlgebraElement normalize(const TorusQuiverSpec& spec, std::string_view text);

std::string to_string(const GaussianRational& c);
std::string to_string(const std::vector<GeneratorWord>& words);
/// Prints an element as a grammar-conformant word sum; normalizing the output
/// reproduces the element.
std::string to_string(const AlgebraElement& x);

nlohmann::ordered_json to_json(const AlgebraElement& x);

}  // namespace starcalc
