#include <stdexcept>
#include <algorithm>
#include <random>

#include "doctest.h"
#include "loops/action.hpp"
#include "loops/table.hpp"

using namespace loops;

namespace {

CayleyTable order20_loop(const char* gen) {
    return product(cyclic_action(cyclic_table(5), 4, parse_cycles(gen, 5)));
}

}  // namespace

TEST_CASE("check_loop on cyclic groups") {
    LoopFlags f = check_loop(cyclic_table(4));
    CHECK(f.quasigroup);
    CHECK(f.loop);
    CHECK(f.associative);
    CHECK(f.commutative);
}

TEST_CASE("check_loop flags a non-associative product and a broken row") {
    LoopFlags f = check_loop(order20_loop("(1234)"));
    CHECK(f.loop);
    CHECK_FALSE(f.associative);

    CayleyTable bad = cyclic_table(4);
    bad.at(2, 3) = bad.at(2, 2);  // repeated entry in a row
    CHECK_FALSE(check_loop(bad).quasigroup);
}

TEST_CASE("divisions invert multiplication") {
    CayleyTable z5 = cyclic_table(5);
    CHECK(left_div(z5, 2, 0) == 3);
    for (int b = 0; b < 5; ++b) CHECK(left_div(z5, 0, b) == b);

    CayleyTable L = order20_loop("(1234)");
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> pick(0, L.n - 1);
    for (int i = 0; i < 50; ++i) {
        int x = pick(rng), a = pick(rng);
        CHECK(right_div(L, a, mul(L, x, a)) == x);
        CHECK(left_div(L, x, mul(L, x, a)) == a);
        CHECK(mul(L, x, left_div(L, x, a)) == a);
        CHECK(mul(L, right_div(L, a, x), a) == x);
    }
}

TEST_CASE("one-sided inverses") {
    CayleyTable z9 = cyclic_table(9);
    for (int a = 0; a < 9; ++a) {
        CHECK(left_inverse(z9, a) == (9 - a) % 9);
        CHECK(right_inverse(z9, a) == (9 - a) % 9);
    }
    CayleyTable L = order20_loop("(1234)");
    CHECK(left_inverse(L, 0) == 0);
    for (int a = 0; a < L.n; ++a) {
        CHECK(mul(L, left_inverse(L, a), a) == 0);
        CHECK(mul(L, a, right_inverse(L, a)) == 0);
    }
}

TEST_CASE("one-sided inverses differ in some order-20 family loops") {
    // Exhaustive scan of all 16 tables: the groups have two-sided inverses,
    // and some non-associative member separates the two sides.
    bool any_differ = false;
    for (const Permutation& g : enumerate_stabilizer_torsion(5, 0, 4)) {
        CayleyTable L = product(cyclic_action(cyclic_table(5), 4, g));
        bool differ = false;
        for (int a = 0; a < L.n; ++a)
            if (left_inverse(L, a) != right_inverse(L, a)) differ = true;
        if (check_loop(L).associative) CHECK_FALSE(differ);
        any_differ = any_differ || differ;
    }
    CHECK(any_differ);
}

TEST_CASE("left inverse property") {
    CHECK(has_left_inverse_property(cyclic_table(9)));
    CHECK(has_left_inverse_property(cyclic_table(4)));
    // Triple-scan record over the 16 order-20 loops: exactly the associative
    // ones have LIP.
    for (const Permutation& g : enumerate_stabilizer_torsion(5, 0, 4)) {
        CayleyTable L = product(cyclic_action(cyclic_table(5), 4, g));
        CHECK(has_left_inverse_property(L) == check_loop(L).associative);
    }
}

TEST_CASE("subloop_generated") {
    CayleyTable z9 = cyclic_table(9);
    CHECK(subloop_generated(z9, {}).members == std::vector<int>{0});
    CHECK(subloop_generated(z9, {3}).members == std::vector<int>{0, 3, 6});

    CayleyTable L = product(cyclic_action(cyclic_table(9), 3,
                                          enumerate_stabilizer_torsion(9, 0, 3)[5]));
    SubsetHandle s = subloop_generated(L, {10});
    CHECK(is_subloop(L, s));
    // Minimality: dropping any non-seed, non-identity element breaks closure.
    for (int drop : s.members) {
        if (drop == 0 || drop == 10) continue;
        SubsetHandle smaller;
        for (int m : s.members)
            if (m != drop) smaller.members.push_back(m);
        CHECK_FALSE(is_subloop(L, smaller));
    }
}

TEST_CASE("is_subloop / is_subgroup") {
    CayleyTable L = order20_loop("(1234)");
    CHECK(is_subloop(L, SubsetHandle{{0}}));
    CHECK(is_subgroup(L, SubsetHandle{{0}}));
    // N x {1} and {1} x H in the H-major encoding.
    SubsetHandle ncopy{{0, 1, 2, 3, 4}};
    SubsetHandle hcopy{{0, 5, 10, 15}};
    CHECK(is_subloop(L, ncopy));
    CHECK(is_subgroup(L, hcopy));
}

TEST_CASE("normality and quotients") {
    CayleyTable L = order20_loop("(1234)");
    SubsetHandle whole;
    for (int i = 0; i < L.n; ++i) whole.members.push_back(i);
    CHECK(is_normal_subloop(L, whole));
    CHECK(is_normal_subloop(L, SubsetHandle{{0}}));
    CHECK(quotient(L, whole).n == 1);
    CHECK(quotient(L, SubsetHandle{{0}}) == L);

    SubsetHandle ncopy{{0, 1, 2, 3, 4}};
    // Set-equality oracle cross-check on the three defining conditions.
    bool oracle = true;
    auto set_of = [&](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    for (int x = 0; x < L.n && oracle; ++x) {
        std::vector<int> xs, sx;
        for (int s : ncopy.members) {
            xs.push_back(L.at(x, s));
            sx.push_back(L.at(s, x));
        }
        oracle = set_of(xs) == set_of(sx);
    }
    CHECK(is_normal_subloop(L, ncopy) == oracle);
    if (is_normal_subloop(L, ncopy)) {
        CayleyTable q = quotient(L, ncopy);
        CHECK(q.n == 4);
        CHECK(check_loop(q).loop);
    }
}

TEST_CASE("translation cycle types") {
    CayleyTable z4 = cyclic_table(4);
    auto types = translation_cycle_types(z4);
    CHECK(types[0].left == std::vector<int>{1, 1, 1, 1});
    CHECK(types[0].right == std::vector<int>{1, 1, 1, 1});
    CHECK(types[1].left == std::vector<int>{4});
    CHECK(types[1].right == std::vector<int>{4});
}

TEST_CASE("translation type multiset is a relabeling invariant") {
    CayleyTable L = order20_loop("(12)");
    std::mt19937 rng(23);
    Permutation f = identity_perm(L.n);
    std::shuffle(f.images.begin() + 1, f.images.end(), rng);
    REQUIRE(f(0) == 0);

    auto a = translation_cycle_types(L);
    auto b = translation_cycle_types(relabel(L, f));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("division identities hold exhaustively on small loops") {
    for (const char* gen : {"(1234)", "(12)", "(14)(23)"}) {
        CayleyTable L = order20_loop(gen);
        for (int a = 0; a < L.n; ++a)
            for (int b = 0; b < L.n; ++b) {
                CHECK(mul(L, a, left_div(L, a, b)) == b);
                CHECK(mul(L, right_div(L, a, b), a) == b);
            }
    }
}

TEST_CASE("text and JSON round-trips are exact") {
    CayleyTable L = order20_loop("(1324)");
    CHECK(table_from_text(table_to_text(L)) == L);
    CHECK(table_from_json(table_to_json(L)) == L);
    CHECK(parse_table(table_to_text(L)) == L);
    CHECK(parse_table(table_to_json(L)) == L);
    // Byte-exactness of a full serialize-parse-serialize cycle.
    CHECK(table_to_text(table_from_text(table_to_text(L))) == table_to_text(L));
    CHECK(table_to_json(table_from_json(table_to_json(L))) == table_to_json(L));
}

TEST_CASE("parse failures") {
    CHECK_THROWS_AS(table_from_text("3\n0 1 2\n1 2"), std::invalid_argument);
    CHECK_THROWS_AS(table_from_text("2\n0 1\n1 5"), std::invalid_argument);
    CHECK_THROWS_AS(table_from_json("{\"n\": 2, \"cells\": [[0,1],[1,9]]}"),
                    std::invalid_argument);
}
