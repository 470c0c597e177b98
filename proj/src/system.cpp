#include "sigsys/system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sigsys {

SignatureSystem build_system(const Graph& h, const std::vector<ValuedDigraph>& dset,
                             SystemParams params, long long guard) {
    if (!h.is_simple()) throw std::invalid_argument("host graph must be loopless");
    if (h.edge_count() == 0) throw std::invalid_argument("host graph has no edges");
    if (!h.connected()) throw std::invalid_argument("host graph must be connected");
    SignatureSystem s{h, ArcTable(h), {}, {}, {}, {}, {}, {}, params};
    for (const auto& d : dset) s.dset_names.push_back(d.name);
    RelationSet rel = theta(dset, h, s.arcs, guard);
    s.group = quotient(s.arcs.size(), rel.relations);

    int m = s.arcs.size();
    int factors = static_cast<int>(s.group.invariant_factors().size());
    int vars = m + 1 + factors;
    int rows = h.vertex_count() + 1 + s.group.free_rank() + factors;
    s.a = IntMatrix(rows, vars);
    s.b.assign(rows, 0);

    for (int i = 0; i < m; ++i) {
        auto [u, v] = s.arcs.arc(i);
        s.variable_roles.push_back("arc(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    s.variable_roles.push_back("N");
    for (int j = 0; j < factors; ++j)
        s.variable_roles.push_back("k" + std::to_string(j + 1));

    int row = 0;
    for (int u = 0; u < h.vertex_count(); ++u, ++row) {
        for (int v : h.neighbours(u)) {
            s.a.at(row, s.arcs.index(u, v)) += 1;
            s.a.at(row, s.arcs.index(v, u)) -= 1;
        }
        s.constraint_roles.push_back("flow(" + std::to_string(u) + ")");
    }
    for (int i = 0; i < m; ++i) s.a.at(row, i) = 1;
    s.a.at(row, s.n_var_index()) = -params.parity_p;
    s.b[row] = params.parity_q;
    s.constraint_roles.push_back("parity");
    ++row;
    // signature sum: coefficient of X_alpha in quotient coordinate c is
    // p * c(alpha) + q * c(alpha^-)
    for (int i = 0; i < s.group.free_rank(); ++i, ++row) {
        for (int al = 0; al < m; ++al)
            s.a.at(row, al) = params.sig_p * s.group.free_coeff(i, al) +
                              params.sig_q * s.group.free_coeff(i, s.arcs.reverse(al));
        s.constraint_roles.push_back("signature-free(" + std::to_string(i) + ")");
    }
    for (int j = 0; j < factors; ++j, ++row) {
        for (int al = 0; al < m; ++al)
            s.a.at(row, al) = params.sig_p * s.group.torsion_coeff(j, al) +
                              params.sig_q * s.group.torsion_coeff(j, s.arcs.reverse(al));
        s.a.at(row, s.torsion_var_index(j)) = -s.group.invariant_factors()[j];
        s.constraint_roles.push_back("signature-torsion(" + std::to_string(j) + ")");
    }
    return s;
}

std::vector<Int> SystemSolution::packed() const {
    std::vector<Int> x = arc_values;
    x.push_back(n);
    x.insert(x.end(), torsion_aux.begin(), torsion_aux.end());
    return x;
}

std::optional<SystemSolution> solve_system(const SignatureSystem& s) {
    auto x = solve_diophantine(s.a, s.b);
    if (!x) return std::nullopt;
    SystemSolution sol;
    int m = s.arc_vars();
    sol.arc_values.assign(x->begin(), x->begin() + m);
    sol.n = (*x)[m];
    sol.torsion_aux.assign(x->begin() + m + 1, x->end());
    return sol;
}

bool check_solution(const SignatureSystem& s, const SystemSolution& sol) {
    std::vector<Int> x = sol.packed();
    if (static_cast<int>(x.size()) != s.a.cols()) return false;
    return s.a.apply(x) == s.b;
}

namespace {

long long to_count(const Int& x) {
    if (x < 0 || x > 10000000)
        throw std::runtime_error("traversal count out of range for certificate extraction");
    return x.convert_to<long long>();
}

}  // namespace

WalkCertificate extract_certificate(const SignatureSystem& s, const SystemSolution& sol) {
    if (!s.params.is_default())
        throw std::invalid_argument(
            "certificate extraction needs the traversal-count system (default parameters)");
    if (!check_solution(s, sol))
        throw std::runtime_error("certificate extraction given an invalid solution");
    int m = s.arc_vars();
    int n = s.host.vertex_count();
    std::vector<Int> x = sol.arc_values;
    for (int i = 0; i < m; ++i) {
        int r = s.arcs.reverse(i);
        if (r <= i) continue;
        Int mn = std::min(x[i], x[r]);
        x[i] -= mn;
        x[r] -= mn;
    }
    // weak connectivity of the positive support
    {
        std::vector<std::vector<int>> touch(n);
        int first = -1;
        for (int i = 0; i < m; ++i) {
            if (x[i] <= 0) continue;
            auto [u, v] = s.arcs.arc(i);
            touch[u].push_back(v);
            touch[v].push_back(u);
            if (first == -1) first = u;
        }
        bool connected = first != -1;
        if (connected) {
            std::vector<char> seen(n, 0);
            std::deque<int> queue{first};
            seen[first] = 1;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int v : touch[u])
                    if (!seen[v]) {
                        seen[v] = 1;
                        queue.push_back(v);
                    }
            }
            for (int u = 0; u < n && connected; ++u)
                if (!touch[u].empty() && !seen[u]) connected = false;
        }
        if (!connected)
            for (int i = 0; i < m; ++i) x[i] += 1;
    }
    // Euler circuit on the support multidigraph; flow rows guarantee balance
    std::vector<std::vector<std::pair<int, long long>>> out(n);
    long long total = 0;
    int start = -1;
    for (int i = 0; i < m; ++i) {
        long long c = to_count(x[i]);
        if (c == 0) continue;
        auto [u, v] = s.arcs.arc(i);
        out[u].emplace_back(v, c);
        total += c;
        if (start == -1 || u < start) start = u;
    }
    if (start == -1 || total % 2 == 0)
        throw std::runtime_error("certificate extraction: inconsistent support");
    std::vector<size_t> ptr(n, 0);
    std::vector<int> stack{start}, circuit;
    while (!stack.empty()) {
        int v = stack.back();
        while (ptr[v] < out[v].size() && out[v][ptr[v]].second == 0) ++ptr[v];
        if (ptr[v] == out[v].size()) {
            circuit.push_back(v);
            stack.pop_back();
        } else {
            --out[v][ptr[v]].second;
            stack.push_back(out[v][ptr[v]].first);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    if (static_cast<long long>(circuit.size()) != total + 1 ||
        circuit.front() != circuit.back())
        throw std::runtime_error("certificate extraction: support is not Eulerian");
    circuit.pop_back();
    return WalkCertificate{std::move(circuit)};
}

GroupElement walk_signature(const Graph& h, const ArcTable& arcs,
                            const QuotientPresentation& q, const WalkCertificate& w,
                            SystemParams params) {
    int len = w.length();
    if (len == 0) throw std::invalid_argument("empty walk");
    std::vector<Int> counts(arcs.size(), 0);
    for (int i = 0; i < len; ++i) {
        int u = w.walk[i], v = w.walk[(i + 1) % len];
        int a = arcs.index(u, v);
        if (a == -1) throw std::invalid_argument("walk step is not an edge of the host");
        counts[a] += 1;
    }
    std::vector<Int> vec(arcs.size(), 0);
    for (int a = 0; a < arcs.size(); ++a)
        vec[a] = params.sig_p * counts[a] + params.sig_q * counts[arcs.reverse(a)];
    (void)h;
    return q.project(vec);
}

bool verify_certificate(const Graph& h, const ArcTable& arcs,
                        const QuotientPresentation& q, const WalkCertificate& w,
                        SystemParams params) {
    int len = w.length();
    if (len == 0 || len % 2 == 0) return false;
    for (int i = 0; i < len; ++i)
        if (!h.has_edge(w.walk[i], w.walk[(i + 1) % len])) return false;
    return walk_signature(h, arcs, q, w, params).is_zero();
}

SystemSolution push_solution(const SignatureSystem& src, const SignatureSystem& dst,
                             const VertexMap& psi, const SystemSolution& sol) {
    if (!(src.params == dst.params) || src.dset_names != dst.dset_names)
        throw std::invalid_argument("push_solution: systems built with different settings");
    if (static_cast<int>(psi.image.size()) != src.host.vertex_count())
        throw std::invalid_argument("push_solution: map length mismatch");
    for (auto [u, v] : src.host.edges())
        if (!dst.host.has_edge(psi.image[u], psi.image[v]))
            throw std::invalid_argument("push_solution: map is not a homomorphism");
    SystemSolution out;
    out.arc_values.assign(dst.arc_vars(), 0);
    for (int i = 0; i < src.arc_vars(); ++i) {
        auto [u, v] = src.arcs.arc(i);
        out.arc_values[dst.arcs.index(psi.image[u], psi.image[v])] += sol.arc_values[i];
    }
    out.n = sol.n;
    int factors = static_cast<int>(dst.group.invariant_factors().size());
    out.torsion_aux.assign(factors, 0);
    for (int j = 0; j < factors; ++j) {
        Int c = 0;
        for (int al = 0; al < dst.arc_vars(); ++al)
            c += (dst.params.sig_p * dst.group.torsion_coeff(j, al) +
                  dst.params.sig_q * dst.group.torsion_coeff(j, dst.arcs.reverse(al))) *
                 out.arc_values[al];
        const Int& d = dst.group.invariant_factors()[j];
        if (c % d != 0)
            throw std::runtime_error("push_solution: torsion row not divisible");
        out.torsion_aux[j] = c / d;
    }
    return out;
}

std::optional<NoHomProof> no_hom_test(const Graph& h, const Graph& target,
                                      const std::vector<ValuedDigraph>& dset,
                                      SystemParams params, long long guard) {
    SignatureSystem sh = build_system(h, dset, params, guard);
    auto sol = solve_system(sh);
    if (!sol) return std::nullopt;
    SignatureSystem st = build_system(target, dset, params, guard);
    if (solve_system(st)) return std::nullopt;
    NoHomProof proof;
    proof.source_solution = *sol;
    proof.note = "system feasible on source, infeasible on target";
    return proof;
}

Verdict make_verdict(const SignatureSystem& s, bool feasible,
                     std::optional<bool> k3_feasible, std::optional<bool> target_proof) {
    Verdict v;
    v.feasible = feasible;
    bool original = s.dset_names == std::vector<std::string>{"d1"} && s.params.is_default();
    if (!feasible && original) {
        v.conclusions.push_back("coind_le_3");
        v.provenance = "signature system infeasible";
    }
    if (feasible && k3_feasible.has_value() && !*k3_feasible) {
        v.conclusions.push_back("chi_ge_4");
        v.provenance = "system feasible here, infeasible on K3";
    }
    if (feasible && target_proof.has_value() && *target_proof)
        v.conclusions.push_back("no_hom_to_target");
    if (v.conclusions.empty()) {
        v.conclusions.push_back("raw_feasibility_only");
        v.provenance = feasible ? "system feasible" : "system infeasible";
    }
    return v;
}

}  // namespace sigsys
