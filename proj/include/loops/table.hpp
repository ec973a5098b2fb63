#pragma once

#include <string>
#include <vector>

#include "loops/perm.hpp"

namespace loops {

/// Largest supported order; every check stays exhaustive below this bound.
inline constexpr int kMaxOrder = 64;

/// A finite binary operation on indices 0..n-1. For a loop, every row and
/// column is a permutation (Latin square) and index 0 is the two-sided
/// identity; constructors that renumber always put the identity at 0.
struct CayleyTable {
    int n = 0;
    std::vector<int> cells;  // row-major, cells[a*n + b] = a.b

    int at(int a, int b) const { return cells[a * n + b]; }
    int& at(int a, int b) { return cells[a * n + b]; }

    bool operator==(const CayleyTable&) const = default;
};

struct LoopFlags {
    bool quasigroup = false;
    bool has_identity = false;
    bool loop = false;
    bool associative = false;
    bool commutative = false;
};

/// A sorted set of element indices inside a fixed parent table.
struct SubsetHandle {
    std::vector<int> members;  // strictly increasing

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int x) const;
    bool operator==(const SubsetHandle&) const = default;
};

CayleyTable cyclic_table(int n);

LoopFlags check_loop(const CayleyTable& t);

int mul(const CayleyTable& t, int a, int b);
/// Unique x with a.x = b; throws if the row is not a permutation at b.
int left_div(const CayleyTable& t, int a, int b);
/// Unique x with x.a = b.
int right_div(const CayleyTable& t, int a, int b);

int left_inverse(const CayleyTable& t, int a);   // leftinv(a).a = 0
int right_inverse(const CayleyTable& t, int a);  // a.rightinv(a) = 0

/// leftinv(x).(x.y) = y for all x, y.
bool has_left_inverse_property(const CayleyTable& t);

/// Least subset containing seed and 0, closed under mul, left_div, right_div.
SubsetHandle subloop_generated(const CayleyTable& t, const std::vector<int>& seed);

bool is_subloop(const CayleyTable& t, const SubsetHandle& s);
bool is_subgroup(const CayleyTable& t, const SubsetHandle& s);

/// xS = Sx, (xS)y = x(Sy), (Sx)y = S(xy) as sets, for all x, y.
bool is_normal_subloop(const CayleyTable& t, const SubsetHandle& s);

/// Table of the cosets of a normal subloop; the identity coset gets index 0,
/// the rest are ordered by least element. Throws if the cosets do not
/// partition the loop or the coset product is ill-defined.
CayleyTable quotient(const CayleyTable& t, const SubsetHandle& s);

/// Restriction of the operation to a multiplication-closed subset containing
/// 0, renumbered by member rank.
CayleyTable subtable(const CayleyTable& t, const SubsetHandle& s);

struct TranslationTypes {
    std::vector<int> left;   // cycle type of y -> x.y
    std::vector<int> right;  // cycle type of y -> y.x
    bool operator==(const TranslationTypes&) const = default;
    bool operator<(const TranslationTypes& o) const {
        return left != o.left ? left < o.left : right < o.right;
    }
};

/// Per-element cycle types of the left and right translation maps.
std::vector<TranslationTypes> translation_cycle_types(const CayleyTable& t);

/// Relabels t by the bijection f (which must fix 0 for a loop to stay a
/// loop): result[f(a)][f(b)] = f(t[a][b]).
CayleyTable relabel(const CayleyTable& t, const Permutation& f);

// Plain-text format: line 1 = n, then n rows of n space-separated indices.
// JSON alternative: {"n": int, "cells": [[int]]}. Both round-trip exactly.
std::string table_to_text(const CayleyTable& t);
std::string table_to_json(const CayleyTable& t);
CayleyTable table_from_text(const std::string& text);
CayleyTable table_from_json(const std::string& text);
/// Auto-detects JSON (leading '{') vs plain text.
CayleyTable parse_table(const std::string& text);

}  // namespace loops
