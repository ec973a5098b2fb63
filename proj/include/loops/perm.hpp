#pragma once

#include <string>
#include <vector>

namespace loops {

/// A permutation of {0,...,m-1} in one-line notation: images[i] is the image
/// of point i. One-line notation is canonical; cycle notation is an I/O
/// convenience only.
struct Permutation {
    std::vector<int> images;

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int x) const { return images[x]; }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return images < o.images; }
};

Permutation identity_perm(int degree);
bool is_permutation(const std::vector<int>& images);

/// Parses cycle notation over labels 0..degree-1. Grammar:
///   perm := cycle* ; cycle := '(' label (',' label)* ')'
/// Whitespace is ignored. A cycle body without commas is read digit by digit
/// (so "(1243)" means the cycle 1->2->4->3->1); degrees above 10 need commas.
/// Omitted labels are fixed. Throws std::invalid_argument on a label out of
/// range, a repeated label, or malformed parentheses.
Permutation parse_cycles(const std::string& text, int degree);

/// Canonical cycle string: cycles ordered by least element, each starting at
/// its least element, comma-separated labels. Identity renders as "()".
std::string format_cycles(const Permutation& p);

/// compose(p, q) maps x to p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, long k);
long perm_order(const Permutation& p);

/// Multiset of cycle lengths (fixed points included), sorted descending.
std::vector<int> cycle_type(const Permutation& p);

/// All permutations p of {0..degree-1} with p(fixed_point) = fixed_point and
/// p^n = identity, in lexicographic order of one-line notation. Each such p
/// determines the homomorphism Z_n -> Sym(degree)_{fixed_point}, 1 -> p.
/// Candidates are built cycle structure by cycle structure on the non-fixed
/// points (cycle lengths dividing n), never by walking the full symmetric
/// group.
std::vector<Permutation> enumerate_stabilizer_torsion(int degree, int fixed_point, int n);

}  // namespace loops
