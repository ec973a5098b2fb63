#pragma once

#include <string>
#include <vector>

#include "loops/isoclass.hpp"
#include "loops/structure.hpp"

namespace loops {

/// One reproduction run: rendered report plus whether any computed value
/// disagreed with the published one. Disagreements are evidence blocks in
/// the report, never a failure of the run itself.
struct ReproReport {
    std::string text;
    std::string json;
    bool discrepancy = false;
};

struct MetacyclicFamily {
    int m = 0;  // order of the normal cyclic factor
    int p = 0;  // order of the acting cyclic group
    std::vector<Permutation> generators;  // lexicographic enumeration order
    std::vector<ActionHom> actions;
    std::vector<CayleyTable> products;
};

/// All of Hom(Z_p, Sym(Z_m)_0) with their product loops, in the lexicographic
/// order of the generator permutations.
MetacyclicFamily build_metacyclic_family(int m, int p, int jobs = 1);

/// Classification report for the Z_m x| Z_p family (the `classify` command).
ReproReport classify_metacyclic(int m, int p, bool json, int jobs = 1);

/// Order-20 reproduction: 16 actions, 7 classes (3 groups), the Case I-VII
/// groupings, and the nuclei/commutant/center table for Cases IV-VII diffed
/// against the published entries.
ReproReport report_order20(bool json, int jobs = 1);

/// Order-27 reproduction: 1233 actions, 111 classes (2 groups), and the
/// structure statistics over the non-associative classes.
ReproReport report_order27(bool json, int jobs = 1);

}  // namespace loops
