#include "loops/table.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace loops {

bool SubsetHandle::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

CayleyTable cyclic_table(int n) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("order out of range");
    CayleyTable t;
    t.n = n;
    t.cells.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t.at(a, b) = (a + b) % n;
    return t;
}

static void require_well_formed(const CayleyTable& t) {
    if (t.n < 1 || t.n > kMaxOrder) throw std::invalid_argument("table order out of range");
    if (t.cells.size() != static_cast<size_t>(t.n) * t.n)
        throw std::invalid_argument("table cell count does not match order");
    for (int v : t.cells)
        if (v < 0 || v >= t.n) throw std::invalid_argument("table cell out of range");
}

LoopFlags check_loop(const CayleyTable& t) {
    require_well_formed(t);
    LoopFlags f;
    const int n = t.n;

    f.quasigroup = true;
    std::vector<char> seen(n);
    for (int a = 0; a < n && f.quasigroup; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            if (seen[t.at(a, b)]) {
                f.quasigroup = false;
                break;
            }
            seen[t.at(a, b)] = 1;
        }
    }
    for (int b = 0; b < n && f.quasigroup; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) {
            if (seen[t.at(a, b)]) {
                f.quasigroup = false;
                break;
            }
            seen[t.at(a, b)] = 1;
        }
    }

    f.has_identity = true;
    for (int a = 0; a < n; ++a)
        if (t.at(0, a) != a || t.at(a, 0) != a) {
            f.has_identity = false;
            break;
        }
    f.loop = f.quasigroup && f.has_identity;

    f.associative = true;
    for (int a = 0; a < n && f.associative; ++a)
        for (int b = 0; b < n && f.associative; ++b)
            for (int c = 0; c < n; ++c)
                if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) {
                    f.associative = false;
                    break;
                }

    f.commutative = true;
    for (int a = 0; a < n && f.commutative; ++a)
        for (int b = a + 1; b < n; ++b)
            if (t.at(a, b) != t.at(b, a)) {
                f.commutative = false;
                break;
            }
    return f;
}

int mul(const CayleyTable& t, int a, int b) {
    if (a < 0 || a >= t.n || b < 0 || b >= t.n) throw std::invalid_argument("index out of range");
    return t.at(a, b);
}

int left_div(const CayleyTable& t, int a, int b) {
    if (a < 0 || a >= t.n || b < 0 || b >= t.n) throw std::invalid_argument("index out of range");
    int found = -1;
    for (int x = 0; x < t.n; ++x)
        if (t.at(a, x) == b) {
            if (found >= 0) throw std::invalid_argument("not a quasigroup: a.x = b not unique");
            found = x;
        }
    if (found < 0) throw std::invalid_argument("not a quasigroup: a.x = b unsolvable");
    return found;
}

int right_div(const CayleyTable& t, int a, int b) {
    if (a < 0 || a >= t.n || b < 0 || b >= t.n) throw std::invalid_argument("index out of range");
    int found = -1;
    for (int x = 0; x < t.n; ++x)
        if (t.at(x, a) == b) {
            if (found >= 0) throw std::invalid_argument("not a quasigroup: x.a = b not unique");
            found = x;
        }
    if (found < 0) throw std::invalid_argument("not a quasigroup: x.a = b unsolvable");
    return found;
}

int left_inverse(const CayleyTable& t, int a) { return right_div(t, a, 0); }

int right_inverse(const CayleyTable& t, int a) { return left_div(t, a, 0); }

bool has_left_inverse_property(const CayleyTable& t) {
    for (int x = 0; x < t.n; ++x) {
        int xl = left_inverse(t, x);
        for (int y = 0; y < t.n; ++y)
            if (t.at(xl, t.at(x, y)) != y) return false;
    }
    return true;
}

SubsetHandle subloop_generated(const CayleyTable& t, const std::vector<int>& seed) {
    std::vector<char> in(t.n, 0);
    std::vector<int> work{0};
    in[0] = 1;
    for (int s : seed) {
        if (s < 0 || s >= t.n) throw std::invalid_argument("seed element out of range");
        if (!in[s]) {
            in[s] = 1;
            work.push_back(s);
        }
    }
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            work.push_back(x);
        }
    };
    // Fixpoint closure under mul and both divisions.
    for (size_t i = 0; i < work.size(); ++i) {
        int a = work[i];
        for (size_t j = 0; j <= i; ++j) {
            int b = work[j];
            add(t.at(a, b));
            add(t.at(b, a));
            add(left_div(t, a, b));
            add(left_div(t, b, a));
            add(right_div(t, a, b));
            add(right_div(t, b, a));
        }
    }
    SubsetHandle s;
    for (int x = 0; x < t.n; ++x)
        if (in[x]) s.members.push_back(x);
    return s;
}

bool is_subloop(const CayleyTable& t, const SubsetHandle& s) {
    if (!s.contains(0)) return false;
    for (int a : s.members)
        for (int b : s.members) {
            if (!s.contains(t.at(a, b))) return false;
            if (!s.contains(left_div(t, a, b))) return false;
            if (!s.contains(right_div(t, a, b))) return false;
        }
    return true;
}

bool is_subgroup(const CayleyTable& t, const SubsetHandle& s) {
    if (!is_subloop(t, s)) return false;
    for (int a : s.members)
        for (int b : s.members)
            for (int c : s.members)
                if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) return false;
    return true;
}

namespace {

std::vector<int> left_coset(const CayleyTable& t, int x, const SubsetHandle& s) {
    std::vector<int> out;
    out.reserve(s.members.size());
    for (int m : s.members) out.push_back(t.at(x, m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> right_coset(const CayleyTable& t, int x, const SubsetHandle& s) {
    std::vector<int> out;
    out.reserve(s.members.size());
    for (int m : s.members) out.push_back(t.at(m, x));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> product_set(const CayleyTable& t, const std::vector<int>& A,
                             const std::vector<int>& B) {
    std::set<int> out;
    for (int a : A)
        for (int b : B) out.insert(t.at(a, b));
    return {out.begin(), out.end()};
}

}  // namespace

bool is_normal_subloop(const CayleyTable& t, const SubsetHandle& s) {
    if (!is_subloop(t, s)) throw std::invalid_argument("not a subloop");
    const std::vector<int> S = s.members;
    for (int x = 0; x < t.n; ++x)
        if (left_coset(t, x, s) != right_coset(t, x, s)) return false;
    for (int x = 0; x < t.n; ++x) {
        std::vector<int> xS = left_coset(t, x, s);
        std::vector<int> Sx = right_coset(t, x, s);
        for (int y = 0; y < t.n; ++y) {
            std::vector<int> ys{y};
            if (product_set(t, xS, ys) != product_set(t, {x}, product_set(t, S, ys))) return false;
            if (product_set(t, Sx, ys) != product_set(t, S, {t.at(x, y)})) return false;
        }
    }
    return true;
}

CayleyTable quotient(const CayleyTable& t, const SubsetHandle& s) {
    if (!is_normal_subloop(t, s)) throw std::invalid_argument("quotient by a non-normal subset");

    // Cosets, identity coset first, then by least element.
    std::vector<int> coset_of(t.n, -1);
    std::vector<std::vector<int>> cosets;
    for (int x = 0; x < t.n; ++x) {
        if (coset_of[x] >= 0) continue;
        std::vector<int> c = left_coset(t, x, s);
        for (int m : c) {
            if (coset_of[m] >= 0) throw std::invalid_argument("cosets do not partition the loop");
            coset_of[m] = static_cast<int>(cosets.size());
        }
        cosets.push_back(std::move(c));
    }
    if (cosets.size() * s.members.size() != static_cast<size_t>(t.n))
        throw std::invalid_argument("cosets do not partition the loop");

    const int q = static_cast<int>(cosets.size());
    CayleyTable out;
    out.n = q;
    out.cells.assign(static_cast<size_t>(q) * q, -1);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            int val = -1;
            for (int a : cosets[i])
                for (int b : cosets[j]) {
                    int c = coset_of[t.at(a, b)];
                    if (val < 0)
                        val = c;
                    else if (val != c)
                        throw std::invalid_argument("coset product is ill-defined");
                }
            out.at(i, j) = val;
        }
    return out;
}

CayleyTable subtable(const CayleyTable& t, const SubsetHandle& s) {
    if (!s.contains(0)) throw std::invalid_argument("subset lacks the identity");
    const int k = s.size();
    std::vector<int> rank(t.n, -1);
    for (int i = 0; i < k; ++i) rank[s.members[i]] = i;
    CayleyTable out;
    out.n = k;
    out.cells.resize(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int p = t.at(s.members[i], s.members[j]);
            if (rank[p] < 0) throw std::invalid_argument("subset not closed under multiplication");
            out.at(i, j) = rank[p];
        }
    return out;
}

std::vector<TranslationTypes> translation_cycle_types(const CayleyTable& t) {
    std::vector<TranslationTypes> out(t.n);
    for (int x = 0; x < t.n; ++x) {
        Permutation lx, rx;
        lx.images.resize(t.n);
        rx.images.resize(t.n);
        for (int y = 0; y < t.n; ++y) {
            lx.images[y] = t.at(x, y);
            rx.images[y] = t.at(y, x);
        }
        out[x].left = cycle_type(lx);
        out[x].right = cycle_type(rx);
    }
    return out;
}

CayleyTable relabel(const CayleyTable& t, const Permutation& f) {
    if (f.degree() != t.n) throw std::invalid_argument("relabel degree mismatch");
    CayleyTable out;
    out.n = t.n;
    out.cells.resize(t.cells.size());
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b) out.at(f(a), f(b)) = f(t.at(a, b));
    return out;
}

std::string table_to_text(const CayleyTable& t) {
    std::ostringstream os;
    os << t.n << '\n';
    for (int a = 0; a < t.n; ++a) {
        for (int b = 0; b < t.n; ++b) {
            if (b) os << ' ';
            os << t.at(a, b);
        }
        os << '\n';
    }
    return os.str();
}

std::string table_to_json(const CayleyTable& t) {
    nlohmann::json j;
    j["n"] = t.n;
    auto rows = nlohmann::json::array();
    for (int a = 0; a < t.n; ++a) {
        auto row = nlohmann::json::array();
        for (int b = 0; b < t.n; ++b) row.push_back(t.at(a, b));
        rows.push_back(std::move(row));
    }
    j["cells"] = std::move(rows);
    return j.dump();
}

CayleyTable table_from_text(const std::string& text) {
    std::istringstream is(text);
    CayleyTable t;
    if (!(is >> t.n) || t.n < 1 || t.n > kMaxOrder)
        throw std::invalid_argument("bad table order");
    t.cells.resize(static_cast<size_t>(t.n) * t.n);
    for (int& v : t.cells)
        if (!(is >> v)) throw std::invalid_argument("truncated table");
    require_well_formed(t);
    return t;
}

CayleyTable table_from_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        CayleyTable t;
        t.n = j.at("n").get<int>();
        if (t.n < 1 || t.n > kMaxOrder) throw std::invalid_argument("bad table order");
        for (const auto& row : j.at("cells"))
            for (const auto& v : row) t.cells.push_back(v.get<int>());
        require_well_formed(t);
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed table JSON: ") + e.what());
    }
}

CayleyTable parse_table(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') return table_from_json(text);
    return table_from_text(text);
}

}  // namespace loops
