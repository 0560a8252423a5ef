#include "quiveralg/finquiver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "quiveralg/numt.hpp"

namespace finquiver {

namespace {

long reduce_mod(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

}  // namespace

bool CyclicQuiver::has_edge(long x, long y) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(x, y));
}

CyclicQuiver build(long p, long n, long m) {
    if (p < 1) throw std::domain_error("build: modulus must be >= 1");
    CyclicQuiver q;
    q.p = p;
    q.n = reduce_mod(n, p);
    q.m = reduce_mod(m, p);
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y)
            if ((q.n * y - q.m * x) % p == 0) q.edges.emplace_back(x, y);
    return q;
}

CyclicQuiver reverse(const CyclicQuiver& q) {
    CyclicQuiver r;
    r.p = q.p;
    r.n = q.m;
    r.m = q.n;
    for (auto& [x, y] : q.edges) r.edges.emplace_back(y, x);
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

SinkSourceReport sink_source_report(const CyclicQuiver& q) {
    std::vector<char> in_r(static_cast<size_t>(q.p), 0), in_s(static_cast<size_t>(q.p), 0);
    for (auto& [x, y] : q.edges) {
        in_r[static_cast<size_t>(x)] = 1;
        in_s[static_cast<size_t>(y)] = 1;
    }
    SinkSourceReport rep;
    rep.sourceless = std::all_of(in_r.begin(), in_r.end(), [](char c) { return c != 0; });
    rep.sinkless = std::all_of(in_s.begin(), in_s.end(), [](char c) { return c != 0; });
    return rep;
}

namespace {

// Joint color refinement of the disjoint union of two p-vertex quivers.
// Color ids are assigned by sorted signature, so they are comparable across
// the two halves and stable across isomorphic inputs.
std::vector<long> joint_colors(const CyclicQuiver& q1, const CyclicQuiver& q2) {
    const long p = q1.p;
    const size_t total = static_cast<size_t>(2 * p);
    std::vector<std::vector<long>> out(total), in(total);
    for (auto& [x, y] : q1.edges) {
        out[static_cast<size_t>(x)].push_back(y);
        in[static_cast<size_t>(y)].push_back(x);
    }
    for (auto& [x, y] : q2.edges) {
        out[static_cast<size_t>(p + x)].push_back(p + y);
        in[static_cast<size_t>(p + y)].push_back(p + x);
    }
    std::vector<long> col(total, 0);
    size_t classes = 1;
    for (size_t round = 0; round < total; ++round) {
        std::vector<std::vector<long>> sig(total);
        for (size_t v = 0; v < total; ++v) {
            auto& s = sig[v];
            s.push_back(col[v]);
            s.push_back(-1);
            for (long w : out[v]) s.push_back(col[static_cast<size_t>(w)]);
            std::sort(s.begin() + 2, s.end());
            s.push_back(-2);
            size_t base = s.size();
            for (long w : in[v]) s.push_back(col[static_cast<size_t>(w)]);
            std::sort(s.begin() + static_cast<long>(base), s.end());
        }
        std::map<std::vector<long>, long> ids;
        for (auto& s : sig) ids.emplace(s, 0);
        long next = 0;
        for (auto& [k, id] : ids) id = next++;
        for (size_t v = 0; v < total; ++v) col[v] = ids[sig[v]];
        if (static_cast<size_t>(next) == classes) break;
        classes = static_cast<size_t>(next);
    }
    return col;
}

bool witness_commutes(const CyclicQuiver& q1, const CyclicQuiver& q2, const IsoWitness& w) {
    const size_t p = static_cast<size_t>(q1.p);
    if (w.vertex_map.size() != p || w.edge_map.size() != q1.edges.size()) return false;
    std::vector<char> vseen(p, 0), eseen(q2.edges.size(), 0);
    for (long img : w.vertex_map) {
        if (img < 0 || img >= q1.p || vseen[static_cast<size_t>(img)]) return false;
        vseen[static_cast<size_t>(img)] = 1;
    }
    for (size_t i = 0; i < q1.edges.size(); ++i) {
        size_t j = w.edge_map[i];
        if (j >= q2.edges.size() || eseen[j]) return false;
        eseen[j] = 1;
        auto [x, y] = q1.edges[i];
        // phi(r(e)) = r(psi(e)) and phi(s(e)) = s(psi(e))
        if (q2.edges[j].first != w.vertex_map[static_cast<size_t>(x)]) return false;
        if (q2.edges[j].second != w.vertex_map[static_cast<size_t>(y)]) return false;
    }
    return true;
}

}  // namespace

std::optional<IsoWitness> isomorphic(const CyclicQuiver& q1, const CyclicQuiver& q2) {
    if (q1.p != q2.p || q1.edges.size() != q2.edges.size()) return std::nullopt;
    const long p = q1.p;
    std::vector<long> col = joint_colors(q1, q2);

    std::map<long, long> hist1, hist2;
    for (long v = 0; v < p; ++v) {
        ++hist1[col[static_cast<size_t>(v)]];
        ++hist2[col[static_cast<size_t>(p + v)]];
    }
    if (hist1 != hist2) return std::nullopt;

    std::vector<long> order(static_cast<size_t>(p));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](long a, long b) {
        long ca = col[static_cast<size_t>(a)], cb = col[static_cast<size_t>(b)];
        if (hist1[ca] != hist1[cb]) return hist1[ca] < hist1[cb];
        if (ca != cb) return ca < cb;
        return a < b;
    });

    std::vector<long> phi(static_cast<size_t>(p), -1);
    std::vector<char> used(static_cast<size_t>(p), 0);
    auto rec = [&](auto&& self, long idx) -> bool {
        if (idx == p) return true;
        long v = order[static_cast<size_t>(idx)];
        for (long w = 0; w < p; ++w) {
            if (used[static_cast<size_t>(w)]) continue;
            if (col[static_cast<size_t>(p + w)] != col[static_cast<size_t>(v)]) continue;
            if (q1.has_edge(v, v) != q2.has_edge(w, w)) continue;
            bool ok = true;
            for (long k = 0; k < idx && ok; ++k) {
                long u = order[static_cast<size_t>(k)];
                long pu = phi[static_cast<size_t>(u)];
                ok = q1.has_edge(v, u) == q2.has_edge(w, pu) &&
                     q1.has_edge(u, v) == q2.has_edge(pu, w);
            }
            if (!ok) continue;
            phi[static_cast<size_t>(v)] = w;
            used[static_cast<size_t>(w)] = 1;
            if (self(self, idx + 1)) return true;
            phi[static_cast<size_t>(v)] = -1;
            used[static_cast<size_t>(w)] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;

    IsoWitness wit;
    wit.vertex_map = phi;
    wit.edge_map.reserve(q1.edges.size());
    for (auto& [x, y] : q1.edges) {
        std::pair<long, long> img{phi[static_cast<size_t>(x)], phi[static_cast<size_t>(y)]};
        auto it = std::lower_bound(q2.edges.begin(), q2.edges.end(), img);
        if (it == q2.edges.end() || *it != img)
            throw std::logic_error("isomorphic: witness does not map edges to edges");
        wit.edge_map.push_back(static_cast<size_t>(it - q2.edges.begin()));
    }
    if (!witness_commutes(q1, q2, wit))
        throw std::logic_error("isomorphic: witness fails the projection check");
    return wit;
}

long loop_base_points(long p, long n, long k) {
    if (p < 1) throw std::domain_error("loop_base_points: modulus must be >= 1");
    if (k < 1) throw std::domain_error("loop_base_points: length must be >= 1");
    long nr = reduce_mod(n, p);
    if (std::gcd(nr, p) != 1) throw std::domain_error("loop_base_points: n not coprime to p");
    using numt::Int;
    Int pw = p == 1 ? Int(0) : boost::multiprecision::powm(Int(nr), Int(k), Int(p));
    Int t = pw - 1;
    t %= p;
    if (t < 0) t += p;
    return static_cast<long>(gcd(t, Int(p)));
}

std::map<long, long> cycle_structure(long p, long n, long m) {
    if (p < 1) throw std::domain_error("cycle_structure: modulus must be >= 1");
    long nr = reduce_mod(n, p), mr = reduce_mod(m, p);
    if (std::gcd(nr, p) != 1) throw std::domain_error("cycle_structure: n not coprime to p");
    if (std::gcd(mr, p) != 1) throw std::domain_error("cycle_structure: m not coprime to p");
    long ninv = p == 1 ? 0 : reduce_mod(static_cast<long>(numt::bezout(nr, p).x % p), p);
    long mult = ninv * mr % p;
    std::map<long, long> hist;
    std::vector<char> seen(static_cast<size_t>(p), 0);
    for (long x = 0; x < p; ++x) {
        if (seen[static_cast<size_t>(x)]) continue;
        long len = 0, c = x;
        do {
            seen[static_cast<size_t>(c)] = 1;
            c = mult * c % p;
            ++len;
        } while (c != x);
        ++hist[len];
    }
    return hist;
}

std::string DecompositionReport::render() const {
    std::string s;
    for (auto& [k, c] : summands) {
        if (!s.empty()) s += " ⊕ ";
        s += k == 1 ? "C(T)" : "M" + std::to_string(k) + "(C(T))";
        if (c > 1) s += "^" + std::to_string(c);
    }
    return s;
}

DecompositionReport algebra_decomposition(long p, long n, long m) {
    DecompositionReport rep;
    for (auto& [k, c] : cycle_structure(p, n, m)) rep.summands.emplace_back(k, c);
    return rep;
}

namespace {

struct UnionFind {
    std::vector<long> parent;
    explicit UnionFind(long n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    long find(long v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[parent[static_cast<size_t>(v)]];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    }
    void unite(long a, long b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

QnnComponents qnn_components(long p, long n) {
    if (p < 1) throw std::domain_error("qnn_components: modulus must be >= 1");
    long nr = reduce_mod(n, p);
    long g = std::gcd(nr, p);  // gcd(0,p) = p covers the n = 0 case
    QnnComponents result{p / g, g};

    CyclicQuiver q = build(p, nr, nr);
    UnionFind uf(p);
    for (auto& [x, y] : q.edges) uf.unite(x, y);
    std::map<long, long> edge_count;
    for (auto& [x, y] : q.edges) ++edge_count[uf.find(x)];
    std::map<long, long> roots;
    for (long v = 0; v < p; ++v) ++roots[uf.find(v)];
    if (static_cast<long>(roots.size()) != result.component_count)
        throw std::logic_error("qnn_components: component count mismatch");
    for (auto& [root, cnt] : roots) {
        if (cnt != g || edge_count[root] != g * g)
            throw std::logic_error("qnn_components: component shape mismatch");
    }
    return result;
}

namespace {

// Structural screening key: isomorphic quivers always agree on it.
std::string invariant_key(const CyclicQuiver& q) {
    std::vector<long> col = joint_colors(q, q);
    std::map<long, long> hist;
    for (long v = 0; v < q.p; ++v) ++hist[col[static_cast<size_t>(v)]];
    std::string key = std::to_string(q.edges.size());
    for (auto& [c, cnt] : hist) key += "|" + std::to_string(c) + ":" + std::to_string(cnt);
    return key;
}

}  // namespace

Census census(long p) {
    if (p < 1) throw std::domain_error("census: modulus must be >= 1");
    Census result;
    result.p = p;
    std::vector<CyclicQuiver> reps;
    std::vector<std::string> keys;
    for (long n = 0; n < p; ++n)
        for (long m = 0; m < p; ++m) {
            CyclicQuiver q = build(p, n, m);
            std::string key = invariant_key(q);
            bool placed = false;
            for (size_t c = 0; c < reps.size(); ++c) {
                if (keys[c] != key) continue;
                if (!isomorphic(reps[c], q)) continue;
                result.classes[c].size += 1;
                result.classes[c].members.emplace_back(n, m);
                placed = true;
                break;
            }
            if (!placed) {
                reps.push_back(q);
                keys.push_back(key);
                CensusClass cls;
                cls.n = n;
                cls.m = m;
                cls.size = 1;
                cls.members.emplace_back(n, m);
                result.classes.push_back(std::move(cls));
            }
        }
    return result;
}

nlohmann::ordered_json to_json(const CyclicQuiver& q) {
    nlohmann::ordered_json j;
    j["p"] = q.p;
    j["n"] = q.n;
    j["m"] = q.m;
    auto edges = nlohmann::ordered_json::array();
    for (auto& [x, y] : q.edges) edges.push_back({x, y});
    j["edges"] = std::move(edges);
    return j;
}

nlohmann::ordered_json to_json(const DecompositionReport& r) {
    nlohmann::ordered_json j;
    auto parts = nlohmann::ordered_json::array();
    for (auto& [k, c] : r.summands) parts.push_back({k, c});
    j["summands"] = std::move(parts);
    j["algebra"] = r.render();
    return j;
}

nlohmann::ordered_json to_json(const Census& c) {
    nlohmann::ordered_json j;
    j["p"] = c.p;
    j["class_count"] = c.classes.size();
    auto arr = nlohmann::ordered_json::array();
    for (auto& cls : c.classes) {
        nlohmann::ordered_json e;
        e["n"] = cls.n;
        e["m"] = cls.m;
        e["size"] = cls.size;
        auto mem = nlohmann::ordered_json::array();
        for (auto& [n, m] : cls.members) mem.push_back({n, m});
        e["members"] = std::move(mem);
        arr.push_back(std::move(e));
    }
    j["classes"] = std::move(arr);
    return j;
}

}  // namespace finquiver
