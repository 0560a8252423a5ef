#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "quiveralg/starcalc.hpp"

namespace starverify {

using starcalc::AlgebraElement;
using torquiver::TorusQuiverSpec;

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string note;
};

struct VerifyReport {
    std::string check;
    bool hypothesis_met = true;
    std::string hypothesis_note;
    std::vector<CheckResult> checks;
    std::vector<std::string> witnesses;  //!< generator words, when the check produces them

    bool pass() const;
};

/// Defining relations and the derived rewriting rules, instantiated over the
/// index set and each unitary.
VerifyReport verify_presentation(const TorusQuiverSpec& spec);

/// The power pair (F^k, G^k) realized on U_j and S~ = S^k. For k >= 2 the
/// relations can only all hold when |det G| = 1 and F G = G F; the report
/// records the hypothesis and the outcome either way.
VerifyReport verify_power_quotient(const TorusQuiverSpec& spec, long long k);

/// Each U_j rebuilt as a word in U_1^{k_1}..U_d^{k_d}, S, S*; needs k_j | a_j
/// and gcd(det F, det G) = 1. Witness words are returned in the report.
VerifyReport verify_subalgebra_generators(const TorusQuiverSpec& spec,
                                          const std::vector<long long>& k);

/// The family S~_lambda = U^{lambda . k} S and W_j = U_j^{k_j}; needs
/// gcd(k_j, a_j) = 1.
VerifyReport verify_twisted_family(const TorusQuiverSpec& spec, const std::vector<long long>& k);

/// Matrix unit laws for E_ab = S_a S_b* at level k: adjoints, the product
/// rule with its delta, and the partition sum. The product rule is checked
/// exhaustively for small N^k and on a fixed sample otherwise.
VerifyReport verify_matrix_units(const TorusQuiverSpec& spec, long long k);

/// Compatibility of rho with the level embedding: expand-then-rho equals
/// rho-then-expand on level-k matrix units twisted by a monomial battery.
VerifyReport verify_colimit_diagram(const TorusQuiverSpec& spec, long long k);

/// S x S* = rho(x) on random gauge-degree-0 elements, plus the monomial and
/// partition identities behind the crossed-product picture.
VerifyReport verify_crossed_product(const TorusQuiverSpec& spec, long long k, int trials,
                                    unsigned seed);

nlohmann::ordered_json to_json(const VerifyReport& r);

}  // namespace starverify
