#ifndef FGA_DIVISION_HPP
#define FGA_DIVISION_HPP

// Division on both sides (A/B = C iff A = C*B; A\B = C iff A = B*C),
// primality, and the prime-factorization experiment.
//
// Quotient searches are exhaustive: a candidate quotient must have
// q_A / q_B edges, so it is drawn from the enumerated universe with that
// many edges and checked by product isomorphism, cheapest-first via the
// vertex-count formula.  The returned representative is the candidate with
// the smallest canonical key (the enumeration order).

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fga/algebra.hpp"
#include "fga/enumerate.hpp"
#include "fga/errors.hpp"
#include "fga/flow_graph.hpp"
#include "fga/isomorphism.hpp"

namespace fga {

// Largest quotient-edge count the division search will enumerate.
inline constexpr int kDivisionMaxQuotientEdges = 5;

namespace detail {

inline void require_not_zero_over_zero(const FlowGraph& a, const FlowGraph& b) {
    if (is_trivial(a) && is_trivial(b)) throw DomainError("0/0 is undefined");
}

template <typename MakeProduct>
inline std::optional<FlowGraph> divide_search(const FlowGraph& a, const FlowGraph& b,
                                              MakeProduct&& product_of) {
    if (b.q() == 0) {
        // C*F0 is trivial for every C, and F0*C = F0; a trivial divisor only
        // divides the trivial graph.
        return is_trivial(a) ? std::optional<FlowGraph>(nat(0)) : std::nullopt;
    }
    if (a.q() % b.q() != 0) return std::nullopt;
    const int qc = a.q() / b.q();
    if (qc > kDivisionMaxQuotientEdges)
        throw SearchBudgetExceeded("division: quotient candidate enumeration bound exceeded");
    for (const FlowGraph& c : universe_exact(qc)) {
        const FlowGraph prod = product_of(c);
        if (prod.p() != a.p() || prod.q() != a.q()) continue;
        if (isomorphic(prod, a)) return c;
    }
    return std::nullopt;
}

}  // namespace detail

// A/B: some C with A = C*B, smallest canonical key; absent if none.
inline std::optional<FlowGraph> right_divide(const FlowGraph& a, const FlowGraph& b) {
    detail::require_not_zero_over_zero(a, b);
    return detail::divide_search(a, b, [&](const FlowGraph& c) { return otimes_graph(c, b); });
}

// A\B: some C with A = B*C, smallest canonical key; absent if none.
inline std::optional<FlowGraph> left_divide(const FlowGraph& a, const FlowGraph& b) {
    detail::require_not_zero_over_zero(a, b);
    return detail::divide_search(a, b, [&](const FlowGraph& c) { return otimes_graph(b, c); });
}

// All quotients C (up to isomorphism) with A = C*B; used by experiments.
inline std::vector<FlowGraph> right_divide_all(const FlowGraph& a, const FlowGraph& b) {
    detail::require_not_zero_over_zero(a, b);
    std::vector<FlowGraph> out;
    if (b.q() == 0) {
        if (is_trivial(a)) out.push_back(nat(0));
        return out;
    }
    if (a.q() % b.q() != 0) return out;
    const int qc = a.q() / b.q();
    if (qc > kDivisionMaxQuotientEdges)
        throw SearchBudgetExceeded("division: quotient candidate enumeration bound exceeded");
    for (const FlowGraph& c : universe_exact(qc)) {
        const FlowGraph prod = otimes_graph(c, b);
        if (prod.p() == a.p() && prod.q() == a.q() && isomorphic(prod, a)) out.push_back(c);
    }
    return out;
}

// --- primality -------------------------------------------------------------
//
// A nontrivial factorization is A = C*B with neither factor a unit (units:
// F1 and the anchor-reversed edge R1; see algebra.hpp).  A is prime when it
// is nontrivial, not a unit, and admits no nontrivial factorization.  This
// is the "divisible only by 1 and itself" notion stated modulo the unit
// group, mirroring primality in N (where 1 is the only unit).
//
// One-edge factors need no universe sweep over the large side; they are
// resolved by the closed forms of the five one-edge flow graphs:
//   * F1 / R1 are units (never disqualify);
//   * a one-edge infinitesimal as either factor forces the product (and
//     hence A) to be infinitesimal, and every infinitesimal A factors
//     nontrivially (e.g. A = E*(G_A, s_A, s_A) with E the loose edge
//     anchored s = t = tail), so no infinitesimal with q >= 2 is prime,
//     and the three one-edge infinitesimals are idempotent (X*X = X).
// The remaining factor pairs have both sides with >= 2 edges and are swept
// exhaustively.

enum class PrimeRoute { Right, Left };

inline bool is_prime(const FlowGraph& a, PrimeRoute route = PrimeRoute::Right) {
    if (is_trivial(a) || is_otimes_unit(a)) return false;  // 0 and units are not prime
    if (a.q() == 1) return false;  // the one-edge infinitesimals satisfy X*X = X
    if (is_infinitesimal(a)) return false;  // closed-form one-edge factorization above

    // Both-sides-nontrivial sweep: factor pairs (qc, qb) with qc*qb = q_A
    // and both >= 2.  The route only changes which factor drives the outer
    // loop; both are exhaustive and must agree.
    bool skipped = false;
    for (int qb = 2; qb <= a.q() / 2; ++qb) {
        if (a.q() % qb != 0) continue;
        const int qc = a.q() / qb;
        if (std::max(qb, qc) > kDivisionMaxQuotientEdges) {
            skipped = true;  // only fatal if every examined pair says "prime"
            continue;
        }
        const int q_outer = (route == PrimeRoute::Right) ? qb : qc;
        const int q_inner = (route == PrimeRoute::Right) ? qc : qb;
        for (const FlowGraph& outer : universe_exact(q_outer)) {
            for (const FlowGraph& inner : universe_exact(q_inner)) {
                const FlowGraph& c = (route == PrimeRoute::Right) ? inner : outer;
                const FlowGraph& b = (route == PrimeRoute::Right) ? outer : inner;
                if (otimes_expected_vertices(c, b) != a.p()) continue;
                const FlowGraph prod = otimes_graph(c, b);
                if (prod.q() == a.q() && isomorphic(prod, a)) return false;
            }
        }
    }
    if (skipped)
        throw SearchBudgetExceeded("is_prime: factor enumeration bound exceeded");
    return true;
}

// --- factorization experiment ---------------------------------------------

// All sequences (P1,...,Pk) of prime flow graphs with P1*...*Pk isomorphic
// to A, found by recursive right division; duplicate sequences (up to
// per-position isomorphism) removed via canonical keys.
inline std::vector<std::vector<FlowGraph>> factorization_experiment(const FlowGraph& a) {
    if (is_trivial(a)) throw DomainError("factorization_experiment requires a nontrivial graph");
    std::vector<std::vector<FlowGraph>> out;
    std::vector<std::string> seen;

    auto record = [&](std::vector<FlowGraph> seq) {
        std::string sig;
        for (const FlowGraph& g : seq) sig += canonical_key(g) + '\xff';
        for (const std::string& s : seen)
            if (s == sig) return;
        seen.push_back(std::move(sig));
        out.push_back(std::move(seq));
    };

    // rec(G, suffix): extend `suffix` of primes whose product (appended to
    // the right of G) reconstructs A.
    std::vector<FlowGraph> suffix;
    auto rec = [&](auto&& self, const FlowGraph& g) -> void {
        if (is_prime(g)) {
            std::vector<FlowGraph> seq;
            seq.push_back(g);
            seq.insert(seq.end(), suffix.rbegin(), suffix.rend());
            record(std::move(seq));
        }
        for (int qp = 2; qp <= g.q() / 2; ++qp) {
            if (g.q() % qp != 0) continue;
            for (const FlowGraph& p : universe_exact(qp)) {
                if (!is_prime(p)) continue;
                for (const FlowGraph& c : right_divide_all(g, p)) {
                    suffix.push_back(p);
                    self(self, c);
                    suffix.pop_back();
                }
            }
        }
    };
    rec(rec, a);
    return out;
}

}  // namespace fga

#endif  // FGA_DIVISION_HPP
