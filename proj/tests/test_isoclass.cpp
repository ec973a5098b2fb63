#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "loops/action.hpp"
#include "loops/isoclass.hpp"
#include "loops/perm.hpp"
#include "loops/structure.hpp"
#include "loops/table.hpp"

using namespace loops;

namespace {

ActionHom order20_action(const std::string& gen) {
    return cyclic_action(cyclic_table(5), 4, parse_cycles(gen, 5));
}

bool is_isomorphism(const CayleyTable& t1, const CayleyTable& t2, const Permutation& f) {
    if (static_cast<int>(f.images.size()) != t1.n || t1.n != t2.n) return false;
    for (int a = 0; a < t1.n; ++a)
        for (int b = 0; b < t1.n; ++b)
            if (f.images[t1.at(a, b)] != t2.at(f.images[a], f.images[b])) return false;
    return true;
}

}  // namespace

TEST_CASE("fingerprint of a cyclic group") {
    auto fp = fingerprint(cyclic_table(20));
    CHECK(fp.order == 20);
    CHECK(fp.associative);
    CHECK(fp.commutative);
    CHECK(fp.n_lambda == 20);
    CHECK(fp.n_mu == 20);
    CHECK(fp.n_rho == 20);
    CHECK(fp.nucleus == 20);
    CHECK(fp.commutant == 20);
    CHECK(fp.center == 20);
    CHECK(fp.associating_triples == 20L * 20 * 20);
    CHECK(fp.commuting_pairs == 20L * 20);
    CHECK(fp.key() == fingerprint(cyclic_table(20)).key());
}

TEST_CASE("fingerprint is invariant under relabeling") {
    std::mt19937 rng(5);
    for (const char* g : {"(1234)", "(12)", "(14)"}) {
        auto L = product(order20_action(g));
        auto fp = fingerprint(L);
        for (int trial = 0; trial < 5; ++trial) {
            Permutation f;
            f.images.resize(20);
            for (int i = 0; i < 20; ++i) f.images[i] = i;
            std::shuffle(f.images.begin() + 1, f.images.end(), rng);
            auto fp2 = fingerprint(relabel(L, f));
            CHECK(fp == fp2);
            CHECK(fp.key() == fp2.key());
        }
    }
}

TEST_CASE("fingerprints separate non-isomorphic order-20 loops") {
    auto L5 = product(order20_action("(12)"));
    auto L6 = product(order20_action("(14)"));
    auto fpV = fingerprint(L5);
    auto fpVI = fingerprint(L6);
    // Distinct classes; the cheap invariants may or may not split them, but
    // the full search must.
    CHECK_FALSE(are_isomorphic(L5, L6).has_value());
    if (fpV == fpVI) {
        // Same bucket: the backtracker alone separates them, by exhausting
        // every candidate assignment.
        CHECK(fpV.key() == fpVI.key());
    } else {
        CHECK(fpV.key() != fpVI.key());
    }
    // The group vs non-group case splits already at the flags.
    CHECK(fingerprint(cyclic_table(20)) != fpV);
}

TEST_CASE("are_isomorphic finds and verifies witnesses") {
    auto L = product(order20_action("(1234)"));
    auto self = are_isomorphic(L, L);
    REQUIRE(self.has_value());
    CHECK(*self == identity_perm(20));

    auto M = product(order20_action("(1324)"));
    auto w = are_isomorphic(L, M);
    REQUIRE(w.has_value());
    CHECK(w->images[0] == 0);
    CHECK(is_isomorphism(L, M, *w));
    // Symmetry: the inverse witness works on the swapped pair.
    auto winv = inverse(*w);
    CHECK(is_isomorphism(M, L, winv));
    auto wback = are_isomorphic(M, L);
    REQUIRE(wback.has_value());
    CHECK(is_isomorphism(M, L, *wback));

    CHECK_FALSE(are_isomorphic(product(order20_action("(12)")),
                               product(order20_action("(14)")))
                    .has_value());
    CHECK_FALSE(are_isomorphic(cyclic_table(20), L).has_value());
}

TEST_CASE("isomorphism is relabel-stable") {
    std::mt19937 rng(11);
    auto L = product(order20_action("(12)"));
    Permutation f;
    f.images.resize(20);
    for (int i = 0; i < 20; ++i) f.images[i] = i;
    std::shuffle(f.images.begin() + 1, f.images.end(), rng);
    auto M = relabel(L, f);
    auto w = are_isomorphic(L, M);
    REQUIRE(w.has_value());
    CHECK(is_isomorphism(L, M, *w));
}

TEST_CASE("automorphism groups of small abelian groups") {
    CHECK(automorphisms(cyclic_table(5)).size() == 4);
    CHECK(automorphisms(cyclic_table(9)).size() == 6);
    CHECK(automorphisms(cyclic_table(4)).size() == 2);

    ActionHom t33;
    t33.N = cyclic_table(3);
    t33.H = cyclic_table(3);
    t33.images.assign(3, identity_perm(3));
    auto E9 = product(t33);
    auto auts = automorphisms(E9);
    CHECK(auts.size() == 48);
    // Closed under composition and inverse; all multiplicative.
    std::set<std::vector<int>> have;
    for (const auto& a : auts) {
        CHECK(is_isomorphism(E9, E9, a));
        have.insert(a.images);
    }
    CHECK(have.size() == 48);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(have.count(compose(auts[i], auts[j]).images) == 1);

    CHECK_THROWS_AS(automorphisms(product(order20_action("(1234)"))), std::invalid_argument);
}

TEST_CASE("classify partitions the order-20 family") {
    std::vector<CayleyTable> loops_in;
    for (const auto& g : enumerate_stabilizer_torsion(5, 0, 4))
        loops_in.push_back(product(cyclic_action(cyclic_table(5), 4, g)));
    auto rep = classify(loops_in);
    CHECK(rep.input_count == 16);
    CHECK(rep.class_count() == 7);
    int assoc = 0;
    std::vector<int> seen;
    for (const auto& c : rep.classes) {
        if (c.associative) ++assoc;
        CHECK(c.representative == c.members.front());
        for (int m : c.members) seen.push_back(m);
    }
    CHECK(assoc == 3);
    std::sort(seen.begin(), seen.end());
    std::vector<int> all(16);
    for (int i = 0; i < 16; ++i) all[i] = i;
    CHECK(seen == all);

    // Same partition regardless of worker count.
    auto rep4 = classify(loops_in, 4);
    REQUIRE(rep4.class_count() == 7);
    for (int i = 0; i < 7; ++i) CHECK(rep4.classes[i].members == rep.classes[i].members);

    auto single = classify({cyclic_table(6)});
    CHECK(single.class_count() == 1);
    CHECK(single.classes[0].members == std::vector<int>{0});

    CHECK_THROWS_AS(classify({cyclic_table(5), cyclic_table(6)}), std::invalid_argument);
}

TEST_CASE("classify groups the generators into the published cases") {
    auto gens = enumerate_stabilizer_torsion(5, 0, 4);
    std::vector<CayleyTable> loops_in;
    for (const auto& g : gens) loops_in.push_back(product(cyclic_action(cyclic_table(5), 4, g)));
    auto rep = classify(loops_in);

    std::vector<std::set<std::string>> cases = {
        {"()"},
        {"(1,2,4,3)", "(1,3,4,2)"},
        {"(1,4)(2,3)"},
        {"(1,2,3,4)", "(1,3,2,4)", "(1,4,3,2)", "(1,4,2,3)"},
        {"(1,2)", "(1,3)", "(2,4)", "(3,4)"},
        {"(1,4)", "(2,3)"},
        {"(1,2)(3,4)", "(1,3)(2,4)"},
    };
    std::vector<std::set<std::string>> got;
    for (const auto& c : rep.classes) {
        std::set<std::string> names;
        for (int m : c.members) names.insert(format_cycles(gens[m]));
        got.push_back(names);
    }
    for (const auto& want : cases)
        CHECK(std::find(got.begin(), got.end(), want) != got.end());
}

TEST_CASE("semidirect isomorphism criterion") {
    auto a = order20_action("(12)");
    auto self = semidirect_iso_criterion(a, a);
    REQUIRE(self.has_value());
    CHECK(self->first == identity_perm(5));
    CHECK(self->second == identity_perm(4));

    auto b = order20_action("(34)");
    auto ab = semidirect_iso_criterion(a, b);
    REQUIRE(ab.has_value());
    // alpha = (x -> 4x) conjugates (12) to (34); beta stays identity.
    CHECK(ab->first == parse_cycles("(14)(23)", 5));
    CHECK(ab->second == identity_perm(4));

    CHECK_FALSE(semidirect_iso_criterion(a, order20_action("(14)")).has_value());

    ActionHom other;
    other.N = cyclic_table(7);
    other.H = cyclic_table(4);
    other.images.assign(4, identity_perm(7));
    CHECK_THROWS_AS(semidirect_iso_criterion(a, other), std::invalid_argument);
}

TEST_CASE("criteria agree with table isomorphism across the order-20 family") {
    auto gens = enumerate_stabilizer_torsion(5, 0, 4);
    std::vector<ActionHom> acts;
    std::vector<CayleyTable> loops_in;
    for (const auto& g : gens) {
        acts.push_back(cyclic_action(cyclic_table(5), 4, g));
        loops_in.push_back(product(acts.back()));
    }
    for (size_t i = 0; i < acts.size(); ++i)
        for (size_t j = i + 1; j < acts.size(); ++j) {
            bool table_iso = are_isomorphic(loops_in[i], loops_in[j]).has_value();
            auto crit = semidirect_iso_criterion(acts[i], acts[j]);
            CHECK(table_iso == crit.has_value());
            if (crit) {
                // The induced pair map is an isomorphism of the products.
                Permutation eta;
                eta.images.resize(20);
                for (int n = 0; n < 5; ++n)
                    for (int h = 0; h < 4; ++h)
                        eta.images[acts[i].pair_index(n, h)] = acts[j].pair_index(
                            crit->first.images[n], crit->second.images[h]);
                CHECK(is_isomorphism(loops_in[i], loops_in[j], eta));
            }
            bool tk = kernel_of_action(acts[i]).size() == 1 &&
                      kernel_of_action(acts[j]).size() == 1;
            if (tk) CHECK(conjugacy_criterion(acts[i], acts[j]) == table_iso);
        }
}

TEST_CASE("conjugacy criterion basics") {
    auto a = order20_action("(1234)");
    CHECK(conjugacy_criterion(a, a));
    CHECK(conjugacy_criterion(a, order20_action("(1432)")));
    // (1243) generates the group case, (1234) the non-associative one.
    CHECK_FALSE(conjugacy_criterion(a, order20_action("(1243)")));
    // Nontrivial kernel is rejected.
    CHECK_THROWS_AS(conjugacy_criterion(order20_action("(14)(23)"), a), std::invalid_argument);
    CHECK_THROWS_AS(conjugacy_criterion(order20_action("(12)"), order20_action("(14)")),
                    std::invalid_argument);
}

TEST_CASE("isoclass report serialization") {
    std::vector<CayleyTable> loops_in;
    auto gens = enumerate_stabilizer_torsion(5, 0, 4);
    std::vector<std::string> labels;
    for (const auto& g : gens) {
        loops_in.push_back(product(cyclic_action(cyclic_table(5), 4, g)));
        labels.push_back(format_cycles(g));
    }
    auto rep = classify(loops_in);
    auto js = isoclass_report_to_json(rep, labels);
    CHECK(js.find("\"classes\"") != std::string::npos);
    CHECK(js.find("(1,2,3,4)") != std::string::npos);
    CHECK(js.find("\"input_count\": 16") != std::string::npos);
}
