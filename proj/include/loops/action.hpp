#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loops/perm.hpp"
#include "loops/table.hpp"

namespace loops {

/// A homomorphism from a group H into the stabilizer of the identity of a
/// loop N: one permutation of 0..|N|-1 per H-element.
struct ActionHom {
    CayleyTable N;                    // loop
    CayleyTable H;                    // group
    std::vector<Permutation> images;  // images[h] = phi_h

    /// Pair (n, h) is encoded H-major, so the identity pair lands at 0 and
    /// the blocks of the product table are the cosets N.h.
    int pair_index(int n, int h) const { return h * N.n + n; }
    int n_part(int idx) const { return idx % N.n; }
    int h_part(int idx) const { return idx / N.n; }
};

struct ActionCheck {
    bool ok = true;
    std::string violation;  // first violated condition, empty when ok
};

/// Checks identity image, stabilizer condition phi_h(0) = 0, and the
/// homomorphism law phi_{h1 h2} = phi_{h1} o phi_{h2}, exhaustively.
/// Throws if N is not a loop or H is not a group.
ActionCheck validate_action(const ActionHom& a);

void require_valid_action(const ActionHom& a);

/// H = Z_h_order, images[k] = generator_image^k. Throws if the generator
/// moves 0 or its order does not divide h_order.
ActionHom cyclic_action(const CayleyTable& N, int h_order, const Permutation& generator_image);

/// The loop N x H with (n1,h1).(n2,h2) = (n1.phi_{h1}(n2), h1 h2).
CayleyTable product(const ActionHom& a);

/// For N and H groups: the product is a group iff every phi_h is
/// multiplicative on N.
bool group_criterion(const ActionHom& a);

struct Decomposition {
    ActionHom action;
    std::vector<int> embedding;  // embedding[pair_index] = element of L
};

/// Recovers the action from an internal semidirect product: Nsub a subloop,
/// Hsub a subgroup, trivial intersection, |Nsub||Hsub| = |L|, and every
/// mixed ordered triple from Nsub u Hsub associating in L, except the
/// pattern (h, n, n') which genuine semidirect products only satisfy when
/// phi_h is multiplicative. phi_h(n) = h.(n.h^-1) with h^-1 the
/// group inverse in Hsub. The returned bijection (n,h) -> n.h is re-verified
/// to be an isomorphism from the external product onto L; any failed
/// hypothesis is reported by name.
Decomposition internal_decomposition(const CayleyTable& L, const SubsetHandle& Nsub,
                                     const SubsetHandle& Hsub);

struct PairInverses {
    std::pair<int, int> left;   // ((phi_{h^-1}(n))^-1, h^-1), left inverse in N
    std::pair<int, int> right;  // (phi_{h^-1}(n^-1), h^-1), right inverse in N
};

PairInverses pair_inverses(const ActionHom& a, int n, int h);

// Action file format (JSON):
//   {"n_table": {...}, "h_table": {...}, "images": {"0": [one-line], ...}}
// or the cyclic shorthand {"N": "Z9", "H": "Z3", "generator": "(1,2,3)"}.
std::string action_to_json(const ActionHom& a);
ActionHom action_from_json(const std::string& text);

}  // namespace loops
