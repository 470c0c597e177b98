#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigsys/exact.hpp"
#include "sigsys/graph.hpp"
#include "sigsys/valued_digraph.hpp"

namespace sigsys {

// Coefficients of the generalised constraint families. Defaults give the
// original system: signature sum X_{u,v} - X_{v,u}, parity sum - 2N = 1.
struct SystemParams {
    long long sig_p = 1;
    long long sig_q = -1;
    long long parity_p = 2;
    long long parity_q = 1;

    bool is_default() const {
        return sig_p == 1 && sig_q == -1 && parity_p == 2 && parity_q == 1;
    }
    bool operator==(const SystemParams&) const = default;
};

// Integer linear system: flow row per vertex, one parity row, one row per
// free coordinate of the quotient, one row (with a fresh auxiliary) per
// torsion coordinate. Variables are the arcs in table order, then N, then
// the torsion auxiliaries.
struct SignatureSystem {
    Graph host;
    ArcTable arcs;
    std::vector<std::string> dset_names;
    QuotientPresentation group;
    IntMatrix a;
    std::vector<Int> b;
    std::vector<std::string> variable_roles;
    std::vector<std::string> constraint_roles;
    SystemParams params;

    int arc_vars() const { return arcs.size(); }
    int n_var_index() const { return arcs.size(); }
    int torsion_var_index(int j) const { return arcs.size() + 1 + j; }
};

SignatureSystem build_system(const Graph& h, const std::vector<ValuedDigraph>& dset,
                             SystemParams params = {},
                             long long guard = default_hom_guard());

struct SystemSolution {
    std::vector<Int> arc_values;
    Int n = 0;
    std::vector<Int> torsion_aux;

    std::vector<Int> packed() const;  // full variable vector in system order
};

std::optional<SystemSolution> solve_system(const SignatureSystem& s);
bool check_solution(const SignatureSystem& s, const SystemSolution& sol);

// Closed walk w_0, ..., w_{L-1} (the step back to w_0 is implicit).
struct WalkCertificate {
    std::vector<int> walk;

    int length() const { return static_cast<int>(walk.size()); }
};

// Closed odd walk whose traversal counts solve the system: subtract the
// per-edge minima, inflate by one traversal per arc when the support is
// empty or disconnected, then run an Euler circuit on the support.
WalkCertificate extract_certificate(const SignatureSystem& s, const SystemSolution& sol);

GroupElement walk_signature(const Graph& h, const ArcTable& arcs,
                            const QuotientPresentation& q, const WalkCertificate& w,
                            SystemParams params = {});

// True iff the length is odd, every step is an edge, and the signature
// projects to zero.
bool verify_certificate(const Graph& h, const ArcTable& arcs,
                        const QuotientPresentation& q, const WalkCertificate& w,
                        SystemParams params = {});

// Transport a solution along a homomorphism psi: src.host -> dst.host by
// summing arc values over preimage arcs. N is unchanged; the torsion
// auxiliaries are re-solved on the target.
SystemSolution push_solution(const SignatureSystem& src, const SignatureSystem& dst,
                             const VertexMap& psi, const SystemSolution& sol);

// Witness that no homomorphism host -> target exists: a solution on host
// together with recorded infeasibility of the same system on the target.
struct NoHomProof {
    SystemSolution source_solution;
    std::string note;
};

std::optional<NoHomProof> no_hom_test(const Graph& h, const Graph& target,
                                      const std::vector<ValuedDigraph>& dset,
                                      SystemParams params = {},
                                      long long guard = default_hom_guard());

struct Verdict {
    bool feasible = false;
    std::vector<std::string> conclusions;
    std::string provenance;
};

// Conclusion names: coind_le_3, chi_ge_4, bipartite_coind_le_2,
// no_hom_to_target, raw_feasibility_only.
Verdict make_verdict(const SignatureSystem& s, bool feasible,
                     std::optional<bool> k3_feasible,
                     std::optional<bool> target_proof = std::nullopt);

}  // namespace sigsys
