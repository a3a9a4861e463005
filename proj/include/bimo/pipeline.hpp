#ifndef BIMO_PIPELINE_HPP
#define BIMO_PIPELINE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "bimo/algebra.hpp"
#include "bimo/engine.hpp"

namespace bimo {

struct PipelineOptions {
    int min_gadget_size = 0;   // 0 = auto (|G|)
    int budget_vertices = 0;   // 0 = auto (max(256, |V(Gamma*)|))
    long long budget_closure = 20000;
    bool oracle = false;       // cross-check the engine on small graphs first

    nlohmann::ordered_json to_json() const;
    static PipelineOptions from_json(const nlohmann::json& j);
};

/// Self-contained witness that Bi(Gamma*) is the prescribed submonoid:
/// inputs, digests, graph stats, the bimorphism list with its composition
/// table, the isomorphism witness, and per-clause verification results.
struct VerificationCertificate {
    nlohmann::ordered_json document;
    bool passed = false;

    std::string dump() const { return document.dump(2) + "\n"; }
};

/// FNV-1a over the canonical serialization.
std::string digest(const nlohmann::json& j);

/// Full run: gadget family (k = |G|-1, min_size = |G|), Gamma, Gamma*,
/// bimorphism enumeration, clause checks, certificate. Precondition failures
/// are recorded in the certificate rather than thrown.
VerificationCertificate run_pipeline(const std::vector<std::vector<int>>& group_table,
                                     const std::string& submonoid_spec,
                                     const PipelineOptions& options = {});

/// Re-derives the certificate from its recorded inputs and budgets and
/// compares canonical fields. Throws Mismatch naming the first differing
/// field; returns the fresh pass/fail otherwise.
bool replay(const nlohmann::json& certificate);

/// "1,2,5" -> {1,2,5}. Whitespace tolerated.
std::vector<int> parse_element_list(const std::string& spec);

} // namespace bimo

#endif
