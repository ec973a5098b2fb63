#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loops/action.hpp"
#include "loops/table.hpp"

namespace loops {

/// Isomorphism-invariant summary of a loop; equal fingerprints are necessary
/// (not sufficient) for isomorphism, and serve as classification buckets.
struct Fingerprint {
    int order = 0;
    bool associative = false;
    bool commutative = false;
    int n_lambda = 0, n_mu = 0, n_rho = 0, nucleus = 0, commutant = 0, center = 0;
    long associating_triples = 0;
    long commuting_pairs = 0;
    std::vector<TranslationTypes> translation_types;  // sorted multiset

    bool operator==(const Fingerprint&) const = default;
    /// Canonical serialization, used as the bucket key.
    std::string key() const;
};

Fingerprint fingerprint(const CayleyTable& t);

/// Backtracking isomorphism search with f(0) = 0: fingerprint filter first,
/// candidate images restricted by per-element local invariants (translation
/// cycle types, nucleus/commutant membership), and forward propagation
/// f(a.b) := f(a).f(b) with contradiction pruning. Candidates are tried in
/// ascending index order, so the result is deterministic. The returned
/// witness is verified exhaustively before being handed back.
std::optional<Permutation> are_isomorphic(const CayleyTable& t1, const CayleyTable& t2);

/// All multiplicative bijections of a group table fixing 0, via the same
/// backtracker from g to itself.
std::vector<Permutation> automorphisms(const CayleyTable& g);

/// Searches Aut(N) x Aut(H) for (alpha, beta) with
/// alpha o phi_h o alpha^-1 = psi_{beta(h)} for every h. N must be a group
/// shared by both actions, as must H. On success the induced map
/// (n,h) -> (alpha(n), beta(h)) is verified to be an isomorphism of the
/// product tables.
std::optional<std::pair<Permutation, Permutation>> semidirect_iso_criterion(const ActionHom& a,
                                                                            const ActionHom& b);

/// For trivial-kernel actions over a common group N: true iff some
/// alpha in Aut(N) conjugates {phi_h} onto {psi_h} as sets.
bool conjugacy_criterion(const ActionHom& a, const ActionHom& b);

struct IsoClass {
    int representative = 0;    // least input index in the class
    std::vector<int> members;  // ascending input indices
    Fingerprint fp;
    bool associative = false;
};

struct IsoClassReport {
    std::vector<IsoClass> classes;
    int input_count = 0;
    int class_count() const { return static_cast<int>(classes.size()); }
};

/// Greedy partition in input order: each loop is tested against the existing
/// representatives inside its fingerprint bucket. Deterministic for a given
/// input order regardless of the worker count (jobs parallelizes only the
/// per-loop fingerprint computation).
IsoClassReport classify(const std::vector<CayleyTable>& loops_in, int jobs = 1);

std::string isoclass_report_to_json(const IsoClassReport& r,
                                    const std::vector<std::string>& input_labels = {});

}  // namespace loops
