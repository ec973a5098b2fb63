#pragma once

#include <string>
#include <vector>

#include "loops/action.hpp"
#include "loops/table.hpp"

namespace loops {

// Brute-force definitional subsets. These are the ground truth; the
// theorem-form variants below are cross-checks that must agree with them.
SubsetHandle commutant(const CayleyTable& t);
SubsetHandle left_nucleus(const CayleyTable& t);
SubsetHandle middle_nucleus(const CayleyTable& t);
SubsetHandle right_nucleus(const CayleyTable& t);
SubsetHandle nucleus(const CayleyTable& t);  // intersection of the three
SubsetHandle center(const CayleyTable& t);   // nucleus meet commutant

/// Fix(phi) = {n : phi_h(n) = n for all h}, as a subset of N.
SubsetHandle fix_of_action(const ActionHom& a);
/// ker(phi) = {h : phi_h = identity}, as a subset of H.
SubsetHandle kernel_of_action(const ActionHom& a);

/// i_n : x -> n.(x.n^-1) with n^-1 the right inverse. Throws if the result
/// is not a bijection (which would indicate a broken table).
Permutation inner_map(const CayleyTable& t, int n);

/// Commutant of the product by the characterization
///   {(x,y) : x in Fix(phi), y in Z(H), phi_y = i_{x^-1}}
/// with x^-1 the left inverse in N. Requires N to have the left inverse
/// property; callers fall back to the brute-force definition otherwise.
SubsetHandle commutant_via_theorem(const ActionHom& a);

/// For N and H abelian groups: {(x,y) : x in Fix(phi), y in ker(phi)}.
SubsetHandle commutant_abelian_case(const ActionHom& a);

// Nuclei of the product via the defining conditions on (x, y), quantified
// exhaustively over H and N.
SubsetHandle middle_nucleus_via_theorem(const ActionHom& a);
SubsetHandle right_nucleus_via_theorem(const ActionHom& a);
SubsetHandle left_nucleus_via_theorem(const ActionHom& a);

/// For N a group: {(x,y) : phi_y is multiplicative on N}.
SubsetHandle left_nucleus_group_form(const ActionHom& a);

/// Smallest normal subloop with associative quotient: the normal closure of
/// the subloop generated by the elements (ab.c) \ (a.bc) and (a.bc) \ (ab.c).
SubsetHandle associator_subloop(const CayleyTable& t);

/// Invariant-factor label of an abelian group table: "Z_10", "Z_3 x Z_3",
/// "trivial"; "non-abelian group of order k" or "non-associative" otherwise.
std::string abelian_iso_label(const CayleyTable& t);

/// Label for a subset of t: iso label when the subset is closed under
/// multiplication, "size k" when it is not (the commutant need not be one).
std::string subset_iso_label(const CayleyTable& t, const SubsetHandle& s);

struct StructureReport {
    int order = 0;
    SubsetHandle n_lambda, n_mu, n_rho, nucleus, commutant, center, associator;
    std::string n_lambda_label, n_mu_label, n_rho_label, nucleus_label, commutant_label,
        center_label, associator_label;
};

StructureReport analyze(const CayleyTable& t);
std::string structure_report_to_json(const StructureReport& r);
std::string structure_report_to_text(const StructureReport& r);

}  // namespace loops
