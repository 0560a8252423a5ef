#include "quiveralg/starcalc.hpp"

#include <algorithm>
#include <sstream>

namespace starcalc {

namespace {

void check_same_spec(const TorusQuiverSpec& a, const TorusQuiverSpec& b) {
    if (a.d != b.d || a.F != b.F || a.G != b.G)
        throw std::domain_error("elements live over different specs");
}

MultiIndex vadd(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

MultiIndex vsub(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool all_zero(const MultiIndex& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

// nu = nu0 + F q with nu0 in the index set (floored per coordinate)
void split_index(const TorusQuiverSpec& spec, const MultiIndex& nu, MultiIndex& nu0, MultiIndex& q) {
    nu0.assign(spec.d, 0);
    q.assign(spec.d, 0);
    for (int j = 0; j < spec.d; ++j) {
        long long a = spec.a(j);
        long long r = nu[j] % a;
        if (r < 0) r += a;
        nu0[j] = r;
        q[j] = (nu[j] - r) / a;
    }
}

// row vector times G: (qG)_m = sum_j q_j G_{jm}
MultiIndex times_g(const TorusQuiverSpec& spec, const MultiIndex& q) {
    MultiIndex r(spec.d, 0);
    for (int m = 0; m < spec.d; ++m) {
        long long acc = 0;
        for (int j = 0; j < spec.d; ++j) acc += q[j] * spec.g(j, m);
        r[m] = acc;
    }
    return r;
}

// S* U^nu = U^carry S* U^{-pi}; returns {carry, pi}
std::pair<MultiIndex, MultiIndex> sstar_commute(const TorusQuiverSpec& spec, const MultiIndex& nu) {
    MultiIndex nu0, q;
    split_index(spec, nu, nu0, q);
    MultiIndex pi(spec.d, 0);
    for (int j = 0; j < spec.d; ++j) {
        if (nu0[j] != 0) {
            pi[j] = spec.a(j) - nu0[j];
            q[j] += 1;
        }
    }
    return {times_g(spec, q), pi};
}

NormalTerm term_mul_u(const TorusQuiverSpec& spec, NormalTerm t, const MultiIndex& eta) {
    if (t.beta.empty()) {
        t.nu = vadd(t.nu, eta);
        return t;
    }
    // pass the monomial left through the starred block, rightmost factor first
    MultiIndex carry = eta;
    for (auto& b : t.beta) {
        auto [c, pi] = sstar_commute(spec, vsub(carry, b));
        b = pi;
        carry = c;
    }
    t.nu = vadd(t.nu, carry);
    return t;
}

std::optional<NormalTerm> term_mul_s(const TorusQuiverSpec& spec, NormalTerm t) {
    if (!t.beta.empty()) {
        if (!all_zero(t.beta.front())) return std::nullopt;
        t.beta.erase(t.beta.begin());
        return t;
    }
    MultiIndex nu0, q;
    split_index(spec, t.nu, nu0, q);
    t.alpha.push_back(std::move(nu0));
    t.nu = times_g(spec, q);
    return t;
}

NormalTerm term_mul_sstar(const TorusQuiverSpec& spec, NormalTerm t) {
    t.beta.insert(t.beta.begin(), MultiIndex(spec.d, 0));
    return t;
}

std::optional<NormalTerm> term_mul(const TorusQuiverSpec& spec, const NormalTerm& x,
                                   const NormalTerm& y) {
    size_t k = x.beta.size(), l = y.alpha.size();
    size_t c = std::min(k, l);
    for (size_t i = 0; i < c; ++i)
        if (x.beta[i] != y.alpha[i]) return std::nullopt;
    NormalTerm r;
    r.alpha = x.alpha;
    if (k == l) {
        r.nu = vadd(x.nu, y.nu);
        r.beta = y.beta;
        return r;
    }
    if (k < l) {
        // push U^nu right through the unmatched path tail
        MultiIndex carry = x.nu;
        for (size_t i = k; i < l; ++i) {
            MultiIndex nu0, q;
            split_index(spec, vadd(carry, y.alpha[i]), nu0, q);
            r.alpha.push_back(std::move(nu0));
            carry = times_g(spec, q);
        }
        r.nu = vadd(carry, y.nu);
        r.beta = y.beta;
        return r;
    }
    // k > l: push U^{nu'} left through the unmatched starred tail
    MultiIndex carry = y.nu;
    r.beta = y.beta;
    for (size_t i = l; i < k; ++i) {
        auto [c2, pi] = sstar_commute(spec, vsub(carry, x.beta[i]));
        r.beta.push_back(pi);
        carry = c2;
    }
    r.nu = vadd(x.nu, carry);
    return r;
}

void accumulate(TermMap& m, NormalTerm t, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = m.find(t);
    if (it == m.end()) {
        m.emplace(std::move(t), c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) m.erase(it);
    }
}

// one expansion level of a single term
void expand_term_once(const TorusQuiverSpec& spec, const NormalTerm& t, const GaussianRational& c,
                      const std::vector<MultiIndex>& idx, TermMap& out) {
    for (const auto& mu : idx) {
        auto [carry, pi] = sstar_commute(spec, vsub(t.nu, mu));
        NormalTerm nt;
        nt.alpha = t.alpha;
        nt.alpha.push_back(mu);
        nt.nu = std::move(carry);
        nt.beta = t.beta;
        nt.beta.push_back(pi);
        accumulate(out, std::move(nt), c);
    }
}

struct GData {
    long long det = 0;
    numt::IntMatrix adj{1};
};

GData g_data(const TorusQuiverSpec& spec) {
    GData g;
    g.det = static_cast<long long>(spec.G.det());
    g.adj = numt::adjugate(spec.G);
    return g;
}

// exact inverse of one expansion level; nullopt when the group is not the
// expansion of anything one shape lower
std::optional<TermMap> contract_once(const TorusQuiverSpec& spec, const GData& gd,
                                     const TermMap& terms) {
    struct Bucket {
        GaussianRational coeff;
        size_t count = 0;
    };
    std::map<NormalTerm, Bucket> buckets;
    size_t n = static_cast<size_t>(spec.N);
    for (const auto& [t, c] : terms) {
        if (t.alpha.empty() || t.beta.empty()) return std::nullopt;
        const MultiIndex& mu = t.alpha.back();
        const MultiIndex& pi = t.beta.back();
        MultiIndex nu0(spec.d, 0), qprime(spec.d, 0);
        for (int j = 0; j < spec.d; ++j) {
            if (pi[j] != 0) {
                nu0[j] = spec.a(j) - pi[j];
                qprime[j] = 1;
            }
        }
        // recover q from t.nu = (q + q') G
        MultiIndex q(spec.d, 0);
        for (int m = 0; m < spec.d; ++m) {
            long long w = 0;
            for (int j = 0; j < spec.d; ++j)
                w += t.nu[j] * static_cast<long long>(gd.adj.at(j, m));
            if (w % gd.det != 0) return std::nullopt;
            q[m] = w / gd.det - qprime[m];
        }
        NormalTerm key;
        key.alpha.assign(t.alpha.begin(), t.alpha.end() - 1);
        key.beta.assign(t.beta.begin(), t.beta.end() - 1);
        key.nu.resize(spec.d);
        for (int j = 0; j < spec.d; ++j) key.nu[j] = mu[j] + nu0[j] + spec.a(j) * q[j];
        auto [it, fresh] = buckets.try_emplace(std::move(key), Bucket{c, 1});
        if (!fresh) {
            if (it->second.coeff != c) return std::nullopt;
            it->second.count += 1;
        }
    }
    TermMap out;
    for (auto& [key, b] : buckets) {
        if (b.count != n) return std::nullopt;
        out.emplace(key, b.coeff);
    }
    return out;
}

TermMap canonical_terms(const TorusQuiverSpec& spec, const TermMap& raw) {
    std::map<long long, TermMap> by_degree;
    for (const auto& [t, c] : raw) {
        if (!c.is_zero()) accumulate(by_degree[t.gauge_degree()], t, c);
    }
    auto idx = torquiver::index_set(spec);
    GData gd = g_data(spec);
    TermMap result;
    for (auto& [deg, group] : by_degree) {
        size_t bmax = 0;
        for (const auto& [t, c] : group) bmax = std::max(bmax, t.beta.size());
        // bring the whole degree class to one shape
        TermMap shaped;
        for (const auto& [t, c] : group) {
            if (t.beta.size() == bmax) {
                accumulate(shaped, t, c);
                continue;
            }
            TermMap cur;
            cur.emplace(t, c);
            for (size_t lvl = t.beta.size(); lvl < bmax; ++lvl) {
                TermMap next;
                for (const auto& [tt, cc] : cur) expand_term_once(spec, tt, cc, idx, next);
                cur = std::move(next);
            }
            for (auto& [tt, cc] : cur) accumulate(shaped, tt, cc);
        }
        // then shrink it as far as the expansion inverts
        while (!shaped.empty()) {
            auto smaller = contract_once(spec, gd, shaped);
            if (!smaller) break;
            shaped = std::move(*smaller);
        }
        for (auto& [t, c] : shaped) accumulate(result, t, c);
    }
    return result;
}

AlgebraElement make_canonical(const TorusQuiverSpec& spec, const TermMap& raw) {
    AlgebraElement x;
    x.spec = spec;
    x.terms = canonical_terms(spec, raw);
    x.canonical_shape = true;
    return x;
}

}  // namespace

bool NormalTerm::operator<(const NormalTerm& o) const {
    long long d1 = gauge_degree(), d2 = o.gauge_degree();
    if (d1 != d2) return d1 < d2;
    if (beta.size() != o.beta.size()) return beta.size() < o.beta.size();
    if (alpha != o.alpha) return alpha < o.alpha;
    if (nu != o.nu) return nu < o.nu;
    return beta < o.beta;
}

AlgebraElement zero(const TorusQuiverSpec& spec) {
    AlgebraElement x;
    x.spec = spec;
    return x;
}

AlgebraElement scalar(const TorusQuiverSpec& spec, GaussianRational c) {
    AlgebraElement x = zero(spec);
    if (!c.is_zero()) {
        NormalTerm t;
        t.nu.assign(spec.d, 0);
        x.terms.emplace(std::move(t), std::move(c));
    }
    return x;
}

AlgebraElement one(const TorusQuiverSpec& spec) { return scalar(spec, 1); }

AlgebraElement from_term(const TorusQuiverSpec& spec, NormalTerm t, GaussianRational c) {
    if (t.nu.size() != static_cast<size_t>(spec.d))
        throw std::domain_error("term arity does not match spec");
    auto check_path = [&](const std::vector<MultiIndex>& p) {
        for (const auto& m : p) {
            if (m.size() != static_cast<size_t>(spec.d))
                throw std::domain_error("term arity does not match spec");
            for (int j = 0; j < spec.d; ++j)
                if (m[j] < 0 || m[j] >= spec.a(j))
                    throw std::domain_error("path entry outside the index set");
        }
    };
    check_path(t.alpha);
    check_path(t.beta);
    TermMap raw;
    accumulate(raw, std::move(t), c);
    return make_canonical(spec, raw);
}

AlgebraElement u_monomial(const TorusQuiverSpec& spec, MultiIndex nu) {
    NormalTerm t;
    t.nu = std::move(nu);
    return from_term(spec, std::move(t));
}

AlgebraElement isometry(const TorusQuiverSpec& spec) {
    NormalTerm t;
    t.alpha.emplace_back(spec.d, 0);
    t.nu.assign(spec.d, 0);
    return from_term(spec, std::move(t));
}

AlgebraElement path_isometry(const TorusQuiverSpec& spec, std::vector<MultiIndex> alpha) {
    NormalTerm t;
    t.alpha = std::move(alpha);
    t.nu.assign(spec.d, 0);
    return from_term(spec, std::move(t));
}

AlgebraElement matrix_unit(const TorusQuiverSpec& spec, std::vector<MultiIndex> alpha,
                           std::vector<MultiIndex> beta) {
    if (alpha.size() != beta.size())
        throw std::domain_error("matrix unit needs paths of equal length");
    auto check = [&](const std::vector<MultiIndex>& p) {
        for (const auto& m : p) {
            if (m.size() != static_cast<size_t>(spec.d))
                throw std::domain_error("path entry arity does not match spec");
            for (int j = 0; j < spec.d; ++j)
                if (m[j] < 0 || m[j] >= spec.a(j))
                    throw std::domain_error("path entry outside the index set");
        }
    };
    check(alpha);
    check(beta);
    NormalTerm t;
    t.alpha = std::move(alpha);
    t.nu.assign(spec.d, 0);
    t.beta = std::move(beta);
    return from_term(spec, std::move(t));
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_spec(x.spec, y.spec);
    TermMap raw = x.terms;
    for (const auto& [t, c] : y.terms) accumulate(raw, t, c);
    return make_canonical(x.spec, raw);
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
    return add(x, scale(GaussianRational(-1), y));
}

AlgebraElement scale(const GaussianRational& c, const AlgebraElement& x) {
    AlgebraElement r = zero(x.spec);
    if (c.is_zero()) return r;
    for (const auto& [t, v] : x.terms) {
        GaussianRational w = c * v;
        if (!w.is_zero()) r.terms.emplace(t, std::move(w));
    }
    r.canonical_shape = x.canonical_shape;
    return r;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_spec(x.spec, y.spec);
    TermMap raw;
    for (const auto& [t1, c1] : x.terms) {
        for (const auto& [t2, c2] : y.terms) {
            auto t = term_mul(x.spec, t1, t2);
            if (t) accumulate(raw, std::move(*t), c1 * c2);
        }
    }
    return make_canonical(x.spec, raw);
}

AlgebraElement adjoint(const AlgebraElement& x) {
    TermMap raw;
    for (const auto& [t, c] : x.terms) {
        NormalTerm s;
        s.alpha = t.beta;
        s.nu = vsub(MultiIndex(x.spec.d, 0), t.nu);
        s.beta = t.alpha;
        accumulate(raw, std::move(s), c.conj());
    }
    return make_canonical(x.spec, raw);
}

bool equals(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_spec(x.spec, y.spec);
    const AlgebraElement* a = &x;
    const AlgebraElement* b = &y;
    AlgebraElement ca, cb;
    if (!x.canonical_shape) {
        ca = make_canonical(x.spec, x.terms);
        a = &ca;
    }
    if (!y.canonical_shape) {
        cb = make_canonical(y.spec, y.terms);
        b = &cb;
    }
    return a->terms == b->terms;
}

AlgebraElement normalize(const AlgebraElement& x) { return make_canonical(x.spec, x.terms); }

AlgebraElement expectation(const AlgebraElement& x) {
    AlgebraElement r = zero(x.spec);
    for (const auto& [t, c] : x.terms)
        if (t.gauge_degree() == 0) r.terms.emplace(t, c);
    r.canonical_shape = x.canonical_shape;
    return r;
}

AlgebraElement expand_level(const AlgebraElement& x, long long k1, long long k2) {
    if (k1 < 0 || k2 < 0) throw std::domain_error("expansion levels must be nonnegative");
    AlgebraElement r = zero(x.spec);
    r.canonical_shape = x.terms.empty();
    auto idx = torquiver::index_set(x.spec);
    for (const auto& [t, c] : x.terms) {
        if (t.gauge_degree() != k1 - k2)
            throw std::domain_error("expansion levels do not match the gauge degree");
        if (static_cast<long long>(t.alpha.size()) > k1)
            throw std::domain_error("term already longer than the requested level");
        TermMap cur;
        cur.emplace(t, c);
        for (long long lvl = static_cast<long long>(t.beta.size()); lvl < k2; ++lvl) {
            TermMap next;
            for (const auto& [tt, cc] : cur) expand_term_once(x.spec, tt, cc, idx, next);
            cur = std::move(next);
        }
        for (auto& [tt, cc] : cur) accumulate(r.terms, tt, cc);
    }
    return r;
}

AlgebraElement rho(const AlgebraElement& x) {
    TermMap raw;
    for (const auto& [t, c] : x.terms) {
        if (t.gauge_degree() != 0)
            throw std::domain_error("rho needs a gauge-degree-0 element");
        NormalTerm s;
        s.alpha.emplace_back(x.spec.d, 0);
        s.alpha.insert(s.alpha.end(), t.alpha.begin(), t.alpha.end());
        s.nu = t.nu;
        s.beta.emplace_back(x.spec.d, 0);
        s.beta.insert(s.beta.end(), t.beta.begin(), t.beta.end());
        accumulate(raw, std::move(s), c);
    }
    return make_canonical(x.spec, raw);
}

std::vector<std::vector<MultiIndex>> level_paths(const TorusQuiverSpec& spec, long long k) {
    if (k < 0) throw std::domain_error("level must be nonnegative");
    auto idx = torquiver::index_set(spec);
    std::vector<std::vector<MultiIndex>> paths{{}};
    for (long long i = 0; i < k; ++i) {
        std::vector<std::vector<MultiIndex>> next;
        next.reserve(paths.size() * idx.size());
        for (const auto& p : paths) {
            for (const auto& m : idx) {
                auto q = p;
                q.push_back(m);
                next.push_back(std::move(q));
            }
        }
        paths = std::move(next);
    }
    return paths;
}

LaurentMatrix to_matrix(const AlgebraElement& x, long long k) {
    LaurentMatrix m;
    m.spec = x.spec;
    m.level = k;
    m.paths = level_paths(x.spec, k);
    size_t n = m.paths.size();
    m.entries.assign(n * n, {});
    std::vector<long long> pw(x.spec.d, 1);
    for (int j = 0; j < x.spec.d; ++j)
        for (long long i = 0; i < k; ++i) pw[j] *= x.spec.a(j);
    for (size_t r = 0; r < n; ++r) {
        AlgebraElement left = adjoint(path_isometry(x.spec, m.paths[r]));
        AlgebraElement row = multiply(left, x);
        for (size_t c = 0; c < n; ++c) {
            AlgebraElement e = multiply(row, path_isometry(x.spec, m.paths[c]));
            LaurentPoly& poly = m.at(r, c);
            for (const auto& [t, v] : e.terms) {
                if (!t.alpha.empty() || !t.beta.empty())
                    throw std::domain_error("not in level-" + std::to_string(k) + " algebra");
                poly.emplace(t.nu, v);
                for (int j = 0; j < x.spec.d; ++j)
                    if (t.nu[j] % pw[j] != 0) m.entries_in_power_subring = false;
            }
        }
    }
    return m;
}

AlgebraElement from_matrix(const LaurentMatrix& m) {
    TermMap raw;
    size_t n = m.paths.size();
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) {
            for (const auto& [nu, v] : m.at(r, c)) {
                NormalTerm base;
                base.alpha = m.paths[r];
                base.nu.assign(m.spec.d, 0);
                NormalTerm tail;
                tail.nu = nu;
                tail.beta = m.paths[c];
                auto prod = term_mul(m.spec, base, tail);
                accumulate(raw, std::move(*prod), v);
            }
        }
    }
    return make_canonical(m.spec, raw);
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (level != o.level || paths.size() != o.paths.size())
        throw std::domain_error("matrix level mismatch");
    LaurentMatrix r;
    r.spec = spec;
    r.level = level;
    r.paths = paths;
    size_t n = paths.size();
    r.entries.assign(n * n, {});
    r.entries_in_power_subring = true;
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            const LaurentPoly& left = at(i, k);
            if (left.empty()) continue;
            for (size_t j = 0; j < n; ++j) {
                const LaurentPoly& right = o.at(k, j);
                if (right.empty()) continue;
                LaurentPoly& dst = r.at(i, j);
                for (const auto& [nu1, c1] : left) {
                    for (const auto& [nu2, c2] : right) {
                        MultiIndex nu = vadd(nu1, nu2);
                        GaussianRational c = c1 * c2;
                        auto it = dst.find(nu);
                        if (it == dst.end()) {
                            if (!c.is_zero()) dst.emplace(std::move(nu), std::move(c));
                        } else {
                            it->second = it->second + c;
                            if (it->second.is_zero()) dst.erase(it);
                        }
                    }
                }
            }
        }
    }
    std::vector<long long> pw(spec.d, 1);
    for (int j = 0; j < spec.d; ++j)
        for (long long i = 0; i < level; ++i) pw[j] *= spec.a(j);
    for (const auto& poly : r.entries)
        for (const auto& [nu, c] : poly)
            for (int j = 0; j < spec.d; ++j)
                if (nu[j] % pw[j] != 0) r.entries_in_power_subring = false;
    return r;
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const {
    return level == o.level && paths == o.paths && entries == o.entries;
}

// Folding a word letter by letter keeps a single normal term as the running
// state, so this is leftmost-innermost rewriting: every step rewrites the seam
// between the already-normal prefix and the next input letter, using
// U^eta S -> S_{eta0} U^{qG} (index step), S* U^eta -> U^{(q+q')G} S* U^{-pi}
// (wall crossing) and S* S -> delta. An index step consumes the letter
// outright; a wall crossing chain walks the starred block once, left to right,
// without creating new S letters. The measure (number of S letters standing
// left of some S*, then word length) therefore drops lexicographically at
// every rewrite, and the fold finishes after one pass over the input.
AlgebraElement normalize(const TorusQuiverSpec& spec, const std::vector<GeneratorWord>& words) {
    TermMap raw;
    for (const auto& w : words) {
        NormalTerm t;
        t.nu.assign(spec.d, 0);
        bool dead = false;
        for (const auto& letter : w.letters) {
            switch (letter.kind) {
                case LetterKind::U: {
                    MultiIndex eta(spec.d, 0);
                    eta[letter.j - 1] = letter.e;
                    t = term_mul_u(spec, std::move(t), eta);
                    break;
                }
                case LetterKind::S: {
                    auto nt = term_mul_s(spec, std::move(t));
                    if (!nt) {
                        dead = true;
                    } else {
                        t = std::move(*nt);
                    }
                    break;
                }
                case LetterKind::SStar:
                    t = term_mul_sstar(spec, std::move(t));
                    break;
            }
            if (dead) break;
        }
        if (!dead) accumulate(raw, std::move(t), w.coeff);
    }
    return make_canonical(spec, raw);
}

AlgebraElement normalize(const TorusQuiverSpec& spec, std::string_view text) {
    return normalize(spec, parse_word(text, spec));
}

std::string to_string(const GaussianRational& c) {
    auto rat = [](const numt::Rat& r) {
        std::ostringstream os;
        os << numerator(r);
        if (denominator(r) != 1) os << "/" << denominator(r);
        return os.str();
    };
    if (c.im == 0) return rat(c.re);
    if (c.re == 0) return rat(c.im) + "i";
    std::string s = rat(c.re);
    s += c.im > 0 ? " + " : " - ";
    numt::Rat ai = c.im > 0 ? c.im : numt::Rat(-c.im);
    return s + rat(ai) + "i";
}

namespace {

void append_u_letters(std::string& out, const MultiIndex& nu, bool negate) {
    for (size_t j = 0; j < nu.size(); ++j) {
        long long e = negate ? -nu[j] : nu[j];
        if (e == 0) continue;
        if (!out.empty() && out.back() != ' ') out += ' ';
        out += "U" + std::to_string(j + 1);
        if (e != 1) out += "^" + std::to_string(e);
    }
}

std::string term_body(const NormalTerm& t) {
    std::string out;
    for (const auto& m : t.alpha) {
        append_u_letters(out, m, false);
        if (!out.empty() && out.back() != ' ') out += ' ';
        out += "S";
    }
    append_u_letters(out, t.nu, false);
    for (auto it = t.beta.rbegin(); it != t.beta.rend(); ++it) {
        if (!out.empty() && out.back() != ' ') out += ' ';
        out += "S*";
        append_u_letters(out, *it, true);
    }
    return out;
}

std::string rat_token(const numt::Rat& r, bool imaginary) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    std::string s = os.str();
    if (imaginary) s += "i";
    return s;
}

// one printed summand per nonzero real/imaginary part
void append_summand(std::string& out, const numt::Rat& mag, bool imaginary, bool negative,
                    const std::string& body) {
    if (out.empty()) {
        if (negative) out += "- ";
    } else {
        out += negative ? " - " : " + ";
    }
    bool unit = mag == 1 && !imaginary;
    if (!unit || body.empty()) {
        out += rat_token(mag, imaginary);
        if (!body.empty()) out += ' ';
    }
    out += body;
}

}  // namespace

std::string to_string(const std::vector<GeneratorWord>& words) {
    std::string out;
    for (const auto& w : words) {
        std::string body;
        for (const auto& letter : w.letters) {
            if (!body.empty()) body += ' ';
            switch (letter.kind) {
                case LetterKind::U:
                    body += "U" + std::to_string(letter.j);
                    if (letter.e != 1) body += "^" + std::to_string(letter.e);
                    break;
                case LetterKind::S:
                    body += "S";
                    break;
                case LetterKind::SStar:
                    body += "S*";
                    break;
            }
        }
        const GaussianRational& c = w.coeff;
        if (c.is_zero()) {
            append_summand(out, numt::Rat(0), false, false, body);
            continue;
        }
        if (c.re != 0)
            append_summand(out, c.re < 0 ? numt::Rat(-c.re) : c.re, false, c.re < 0, body);
        if (c.im != 0)
            append_summand(out, c.im < 0 ? numt::Rat(-c.im) : c.im, true, c.im < 0, body);
    }
    if (out.empty()) out = "0";
    return out;
}

std::string to_string(const AlgebraElement& x) {
    std::string out;
    for (const auto& [t, c] : x.terms) {
        std::string body = term_body(t);
        if (c.re != 0)
            append_summand(out, c.re < 0 ? numt::Rat(-c.re) : c.re, false, c.re < 0, body);
        if (c.im != 0)
            append_summand(out, c.im < 0 ? numt::Rat(-c.im) : c.im, true, c.im < 0, body);
    }
    if (out.empty()) out = "0";
    return out;
}

nlohmann::ordered_json to_json(const AlgebraElement& x) {
    auto rat = [](const numt::Rat& r) {
        std::ostringstream os;
        os << numerator(r) << "/" << denominator(r);
        return os.str();
    };
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [t, c] : x.terms) {
        nlohmann::ordered_json jt;
        jt["alpha"] = t.alpha;
        jt["nu"] = t.nu;
        jt["beta"] = t.beta;
        jt["re"] = rat(c.re);
        jt["im"] = rat(c.im);
        terms.push_back(std::move(jt));
    }
    nlohmann::ordered_json j;
    j["degree_terms"] = std::move(terms);
    return j;
}

}  // namespace starcalc
