#include "loops/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace loops {

Permutation identity_perm(int degree) {
    Permutation p;
    p.images.resize(degree);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

bool is_permutation(const std::vector<int>& images) {
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

namespace {

std::vector<std::vector<int>> split_cycles(const std::string& text, int degree) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        size_t close = s.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in cycle notation");
        std::string body = s.substr(i + 1, close - i - 1);
        if (body.find('(') != std::string::npos)
            throw std::invalid_argument("nested '(' in cycle notation");
        std::vector<int> labels;
        if (body.find(',') != std::string::npos) {
            size_t pos = 0;
            while (pos <= body.size()) {
                size_t comma = body.find(',', pos);
                std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                              : comma - pos);
                if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
                        return std::isdigit(static_cast<unsigned char>(c));
                    }))
                    throw std::invalid_argument("bad label '" + tok + "' in cycle notation");
                labels.push_back(std::stoi(tok));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else {
            // No commas: the paper's compact style, one digit per label.
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("bad character in cycle notation");
                labels.push_back(c - '0');
            }
        }
        for (int v : labels)
            if (v < 0 || v >= degree) throw std::invalid_argument("cycle label out of range");
        if (!labels.empty()) cycles.push_back(std::move(labels));
        i = close + 1;
    }
    return cycles;
}

}  // namespace

Permutation parse_cycles(const std::string& text, int degree) {
    if (degree <= 0) throw std::invalid_argument("degree must be positive");
    Permutation p = identity_perm(degree);
    std::vector<char> seen(degree, 0);
    for (const auto& cycle : split_cycles(text, degree)) {
        for (int v : cycle) {
            if (seen[v]) throw std::invalid_argument("repeated label in cycle notation");
            seen[v] = 1;
        }
        for (size_t k = 0; k < cycle.size(); ++k)
            p.images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    return p;
}

std::string format_cycles(const Permutation& p) {
    std::string out;
    std::vector<char> done(p.degree(), 0);
    for (int start = 0; start < p.degree(); ++start) {
        if (done[start] || p(start) == start) continue;
        out.push_back('(');
        int x = start;
        bool first = true;
        do {
            if (!first) out.push_back(',');
            out += std::to_string(x);
            done[x] = 1;
            x = p(x);
            first = false;
        } while (x != start);
        out.push_back(')');
    }
    if (out.empty()) out = "()";
    return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in compose");
    Permutation r;
    r.images.resize(p.degree());
    for (int x = 0; x < p.degree(); ++x) r.images[x] = p(q(x));
    return r;
}

Permutation inverse(const Permutation& p) {
    Permutation r;
    r.images.resize(p.degree());
    for (int x = 0; x < p.degree(); ++x) r.images[p(x)] = x;
    return r;
}

Permutation power(const Permutation& p, long k) {
    Permutation base = k < 0 ? inverse(p) : p;
    unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    Permutation r = identity_perm(p.degree());
    while (e > 0) {
        if (e & 1) r = compose(r, base);
        base = compose(base, base);
        e >>= 1;
    }
    return r;
}

long perm_order(const Permutation& p) {
    long ord = 1;
    for (int len : cycle_type(p)) ord = std::lcm(ord, static_cast<long>(len));
    return ord;
}

std::vector<int> cycle_type(const Permutation& p) {
    std::vector<int> type;
    std::vector<char> done(p.degree(), 0);
    for (int start = 0; start < p.degree(); ++start) {
        if (done[start]) continue;
        int len = 0, x = start;
        do {
            done[x] = 1;
            x = p(x);
            ++len;
        } while (x != start);
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

namespace {

void torsion_rec(const std::vector<int>& divisors, std::vector<int>& images,
                 std::vector<char>& used, int degree, std::vector<Permutation>& out) {
    int s = -1;
    for (int i = 0; i < degree; ++i)
        if (!used[i]) {
            s = i;
            break;
        }
    if (s < 0) {
        out.push_back(Permutation{images});
        return;
    }
    used[s] = 1;
    for (int d : divisors) {
        if (d == 1) {
            images[s] = s;
            torsion_rec(divisors, images, used, degree, out);
            continue;
        }
        // Build every d-cycle through s: s -> a1 -> ... -> a_{d-1} -> s, with
        // the a_i drawn (ordered) from the still-free points.
        std::vector<int> cyc{s};
        auto extend = [&](auto&& self) -> void {
            if (static_cast<int>(cyc.size()) == d) {
                for (size_t k = 0; k < cyc.size(); ++k)
                    images[cyc[k]] = cyc[(k + 1) % cyc.size()];
                torsion_rec(divisors, images, used, degree, out);
                return;
            }
            for (int a = 0; a < degree; ++a) {
                if (used[a]) continue;
                used[a] = 1;
                cyc.push_back(a);
                self(self);
                cyc.pop_back();
                used[a] = 0;
            }
        };
        extend(extend);
    }
    used[s] = 0;
}

}  // namespace

std::vector<Permutation> enumerate_stabilizer_torsion(int degree, int fixed_point, int n) {
    if (fixed_point < 0 || fixed_point >= degree)
        throw std::invalid_argument("fixed_point out of range");
    if (n < 1) throw std::invalid_argument("torsion exponent must be >= 1");

    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);

    std::vector<int> images(degree, -1);
    std::vector<char> used(degree, 0);
    used[fixed_point] = 1;
    images[fixed_point] = fixed_point;

    std::vector<Permutation> out;
    torsion_rec(divisors, images, used, degree, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace loops
