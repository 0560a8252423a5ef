#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace finquiver {

/// Quiver on vertex set Z_p with an edge (x,y) whenever n*y = m*x (mod p).
/// Range and source are the coordinate projections r(x,y) = x, s(x,y) = y.
struct CyclicQuiver {
    long p = 1;
    long n = 0;
    long m = 0;
    std::vector<std::pair<long, long>> edges;  //!< sorted lexicographically

    bool has_edge(long x, long y) const;
};

CyclicQuiver build(long p, long n, long m);

/// Same edge pairs with r and s swapped.
CyclicQuiver reverse(const CyclicQuiver& q);

struct SinkSourceReport {
    bool sinkless = false;   //!< s surjective: every vertex emits an edge
    bool sourceless = false; //!< r surjective: every vertex receives an edge
};

SinkSourceReport sink_source_report(const CyclicQuiver& q);

struct IsoWitness {
    std::vector<long> vertex_map;        //!< vertex x of Q1 -> vertex_map[x] of Q2
    std::vector<std::size_t> edge_map;   //!< edge i of Q1 -> edge edge_map[i] of Q2
};

/// Digraph isomorphism respecting both projections; the fiber measures are
/// normalized counting measures, so any such bijection pair is a quiver
/// isomorphism (all h_y = 1). Returns a witness or nullopt.
std::optional<IsoWitness> isomorphic(const CyclicQuiver& q1, const CyclicQuiver& q2);

/// |{y : n^k * y = y (mod p)}| = gcd(n^k - 1, p), with gcd(0,p) = p.
long loop_base_points(long p, long n, long k);

/// Orbit-length histogram {length -> count} of x -> n^{-1}*m*x on Z_p.
std::map<long, long> cycle_structure(long p, long n, long m);

struct DecompositionReport {
    std::vector<std::pair<long, long>> summands;  //!< (block size k, multiplicity)
    std::string render() const;                   //!< e.g. "C(T)^4 (+) M2(C(T))^10"
};

DecompositionReport algebra_decomposition(long p, long n, long m);

struct QnnComponents {
    long component_count = 0;
    long component_modulus = 0;
};

/// Q_{n,n}(Z_p) splits into p/gcd(n,p) copies of Q_{0,0}(Z_gcd(n,p));
/// re-verified here by weak-component analysis of the built quiver.
QnnComponents qnn_components(long p, long n);

struct CensusClass {
    long n = 0, m = 0;  //!< lexicographically smallest representative
    long size = 0;
    std::vector<std::pair<long, long>> members;
};

struct Census {
    long p = 0;
    std::vector<CensusClass> classes;  //!< ordered by representative
};

Census census(long p);

nlohmann::ordered_json to_json(const CyclicQuiver& q);
nlohmann::ordered_json to_json(const DecompositionReport& r);
nlohmann::ordered_json to_json(const Census& c);

}  // namespace finquiver
