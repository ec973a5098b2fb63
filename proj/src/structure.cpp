#include "loops/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace loops {

namespace {

void require_loop(const CayleyTable& t) {
    LoopFlags f = check_loop(t);
    if (!f.loop) throw std::invalid_argument("not a loop");
}

SubsetHandle from_mask(const std::vector<char>& in) {
    SubsetHandle s;
    for (int x = 0; x < static_cast<int>(in.size()); ++x)
        if (in[x]) s.members.push_back(x);
    return s;
}

SubsetHandle intersect(const SubsetHandle& a, const SubsetHandle& b) {
    SubsetHandle out;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(out.members));
    return out;
}

}  // namespace

SubsetHandle commutant(const CayleyTable& t) {
    require_loop(t);
    std::vector<char> in(t.n, 0);
    for (int a = 0; a < t.n; ++a) {
        bool ok = true;
        for (int x = 0; x < t.n && ok; ++x) ok = t.at(a, x) == t.at(x, a);
        in[a] = ok;
    }
    return from_mask(in);
}

SubsetHandle left_nucleus(const CayleyTable& t) {
    require_loop(t);
    std::vector<char> in(t.n, 0);
    for (int a = 0; a < t.n; ++a) {
        bool ok = true;
        for (int x = 0; x < t.n && ok; ++x)
            for (int y = 0; y < t.n; ++y)
                if (t.at(a, t.at(x, y)) != t.at(t.at(a, x), y)) {
                    ok = false;
                    break;
                }
        in[a] = ok;
    }
    return from_mask(in);
}

SubsetHandle middle_nucleus(const CayleyTable& t) {
    require_loop(t);
    std::vector<char> in(t.n, 0);
    for (int a = 0; a < t.n; ++a) {
        bool ok = true;
        for (int x = 0; x < t.n && ok; ++x)
            for (int y = 0; y < t.n; ++y)
                if (t.at(x, t.at(a, y)) != t.at(t.at(x, a), y)) {
                    ok = false;
                    break;
                }
        in[a] = ok;
    }
    return from_mask(in);
}

SubsetHandle right_nucleus(const CayleyTable& t) {
    require_loop(t);
    std::vector<char> in(t.n, 0);
    for (int a = 0; a < t.n; ++a) {
        bool ok = true;
        for (int x = 0; x < t.n && ok; ++x)
            for (int y = 0; y < t.n; ++y)
                if (t.at(x, t.at(y, a)) != t.at(t.at(x, y), a)) {
                    ok = false;
                    break;
                }
        in[a] = ok;
    }
    return from_mask(in);
}

SubsetHandle nucleus(const CayleyTable& t) {
    return intersect(intersect(left_nucleus(t), middle_nucleus(t)), right_nucleus(t));
}

SubsetHandle center(const CayleyTable& t) { return intersect(nucleus(t), commutant(t)); }

SubsetHandle fix_of_action(const ActionHom& a) {
    require_valid_action(a);
    std::vector<char> in(a.N.n, 0);
    for (int n = 0; n < a.N.n; ++n) {
        bool ok = true;
        for (const auto& phi : a.images)
            if (phi(n) != n) {
                ok = false;
                break;
            }
        in[n] = ok;
    }
    return from_mask(in);
}

SubsetHandle kernel_of_action(const ActionHom& a) {
    require_valid_action(a);
    Permutation id = identity_perm(a.N.n);
    std::vector<char> in(a.H.n, 0);
    for (int h = 0; h < a.H.n; ++h) in[h] = a.images[h] == id;
    return from_mask(in);
}

Permutation inner_map(const CayleyTable& t, int n) {
    require_loop(t);
    if (n < 0 || n >= t.n) throw std::invalid_argument("index out of range");
    int ninv = right_inverse(t, n);
    Permutation p;
    p.images.resize(t.n);
    for (int x = 0; x < t.n; ++x) p.images[x] = t.at(n, t.at(x, ninv));
    if (!is_permutation(p.images)) throw std::invalid_argument("inner map is not a bijection");
    return p;
}

SubsetHandle commutant_via_theorem(const ActionHom& a) {
    require_valid_action(a);
    if (!has_left_inverse_property(a.N))
        throw std::invalid_argument("N lacks the left inverse property");
    SubsetHandle fix = fix_of_action(a);
    SubsetHandle zh = center(a.H);

    SubsetHandle out;
    for (int y : zh.members) {
        for (int x : fix.members) {
            // phi_y = i_{x^-1}, x^-1 the left inverse in N.
            int xinv = left_inverse(a.N, x);
            Permutation i_xinv = inner_map(a.N, xinv);
            if (a.images[y] == i_xinv) out.members.push_back(a.pair_index(x, y));
        }
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

SubsetHandle commutant_abelian_case(const ActionHom& a) {
    require_valid_action(a);
    LoopFlags nf = check_loop(a.N), hf = check_loop(a.H);
    if (!nf.associative || !nf.commutative || !hf.commutative)
        throw std::invalid_argument("N and H must be abelian groups");
    SubsetHandle fix = fix_of_action(a);
    SubsetHandle ker = kernel_of_action(a);
    SubsetHandle out;
    for (int y : ker.members)
        for (int x : fix.members) out.members.push_back(a.pair_index(x, y));
    std::sort(out.members.begin(), out.members.end());
    return out;
}

SubsetHandle middle_nucleus_via_theorem(const ActionHom& a) {
    require_valid_action(a);
    SubsetHandle nmu_n = middle_nucleus(a.N);
    SubsetHandle out;
    for (int y = 0; y < a.H.n; ++y)
        for (int x = 0; x < a.N.n; ++x) {
            bool ok = true;
            for (int h = 0; h < a.H.n && ok; ++h) {
                const Permutation& ph = a.images[h];
                const Permutation& phy = a.images[a.H.at(h, y)];
                if (!nmu_n.contains(ph(x))) {
                    ok = false;
                    break;
                }
                for (int n = 0; n < a.N.n; ++n)
                    if (ph(a.N.at(x, a.images[y](n))) != a.N.at(ph(x), phy(n))) {
                        ok = false;
                        break;
                    }
            }
            if (ok) out.members.push_back(a.pair_index(x, y));
        }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

SubsetHandle right_nucleus_via_theorem(const ActionHom& a) {
    require_valid_action(a);
    SubsetHandle nrho_n = right_nucleus(a.N);
    SubsetHandle out;
    for (int y = 0; y < a.H.n; ++y)
        for (int x = 0; x < a.N.n; ++x) {
            bool ok = true;
            for (int h = 0; h < a.H.n && ok; ++h) {
                const Permutation& ph = a.images[h];
                if (!nrho_n.contains(ph(x))) {
                    ok = false;
                    break;
                }
                for (int hp = 0; hp < a.H.n && ok; ++hp) {
                    const Permutation& php = a.images[hp];
                    const Permutation& phhp = a.images[a.H.at(h, hp)];
                    for (int n = 0; n < a.N.n; ++n)
                        if (ph(a.N.at(n, php(x))) != a.N.at(ph(n), phhp(x))) {
                            ok = false;
                            break;
                        }
                }
            }
            if (ok) out.members.push_back(a.pair_index(x, y));
        }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

SubsetHandle left_nucleus_via_theorem(const ActionHom& a) {
    require_valid_action(a);
    SubsetHandle out;
    for (int y = 0; y < a.H.n; ++y) {
        const Permutation& py = a.images[y];
        for (int x = 0; x < a.N.n; ++x) {
            bool ok = true;
            for (int h = 0; h < a.H.n && ok; ++h) {
                const Permutation& ph = a.images[h];
                const Permutation& pyh = a.images[a.H.at(y, h)];
                for (int n = 0; n < a.N.n && ok; ++n)
                    for (int np = 0; np < a.N.n; ++np)
                        if (a.N.at(x, py(a.N.at(n, ph(np)))) !=
                            a.N.at(a.N.at(x, py(n)), pyh(np))) {
                            ok = false;
                            break;
                        }
            }
            if (ok) out.members.push_back(a.pair_index(x, y));
        }
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

SubsetHandle left_nucleus_group_form(const ActionHom& a) {
    require_valid_action(a);
    LoopFlags nf = check_loop(a.N);
    if (!nf.associative) throw std::invalid_argument("N is not a group");
    SubsetHandle out;
    for (int y = 0; y < a.H.n; ++y) {
        const Permutation& py = a.images[y];
        bool aut = true;
        for (int n1 = 0; n1 < a.N.n && aut; ++n1)
            for (int n2 = 0; n2 < a.N.n; ++n2)
                if (py(a.N.at(n1, n2)) != a.N.at(py(n1), py(n2))) {
                    aut = false;
                    break;
                }
        if (aut)
            for (int x = 0; x < a.N.n; ++x) out.members.push_back(a.pair_index(x, y));
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

SubsetHandle associator_subloop(const CayleyTable& t) {
    require_loop(t);
    // Any normal subloop with associative quotient contains every element
    // d with (a.bc).d = ab.c or (ab.c).d = a.bc, so start from their closure.
    std::vector<int> seeds;
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b)
            for (int c = 0; c < t.n; ++c) {
                int u = t.at(t.at(a, b), c);
                int v = t.at(a, t.at(b, c));
                if (u != v) {
                    seeds.push_back(left_div(t, v, u));
                    seeds.push_back(left_div(t, u, v));
                }
            }
    SubsetHandle base = subloop_generated(t, seeds);

    // Walk the lattice of subloops above the base, smallest first, and return
    // the first one that is normal with an associative quotient. The whole
    // loop always qualifies, so this terminates.
    std::set<std::vector<int>> seen{base.members};
    std::vector<SubsetHandle> frontier{base};
    while (true) {
        std::sort(frontier.begin(), frontier.end(),
                  [](const SubsetHandle& a, const SubsetHandle& b) {
                      return a.size() != b.size() ? a.size() < b.size() : a.members < b.members;
                  });
        std::vector<SubsetHandle> next;
        for (const SubsetHandle& s : frontier) {
            if (is_normal_subloop(t, s) && check_loop(quotient(t, s)).associative) return s;
            for (int x = 0; x < t.n; ++x) {
                if (s.contains(x)) continue;
                std::vector<int> gen = s.members;
                gen.push_back(x);
                SubsetHandle bigger = subloop_generated(t, gen);
                if (seen.insert(bigger.members).second) next.push_back(bigger);
            }
        }
        frontier = std::move(next);
    }
}

std::string abelian_iso_label(const CayleyTable& t) {
    if (t.n == 1) return "trivial";
    LoopFlags f = check_loop(t);
    if (!f.loop || !f.associative) return "non-associative";
    if (!f.commutative) return "non-abelian group of order " + std::to_string(t.n);

    // Invariant factors, largest first: an element of maximal order spans a
    // direct summand; recurse on the quotient.
    std::vector<int> factors;
    CayleyTable g = t;
    while (g.n > 1) {
        int best = 0;
        long best_ord = 1;
        for (int x = 1; x < g.n; ++x) {
            long ord = 1;
            int y = x;
            while (y != 0) {
                y = g.at(y, x);
                ++ord;
            }
            if (ord > best_ord) {
                best_ord = ord;
                best = x;
            }
        }
        factors.push_back(static_cast<int>(best_ord));
        g = quotient(g, subloop_generated(g, {best}));
    }
    std::string label;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) label += " x ";
        label += "Z_" + std::to_string(factors[i]);
    }
    return label;
}

std::string subset_iso_label(const CayleyTable& t, const SubsetHandle& s) {
    if (s.size() == 1) return "trivial";
    bool closed = s.contains(0);
    for (int a : s.members)
        for (int b : s.members)
            if (closed && !s.contains(t.at(a, b))) closed = false;
    if (!closed) return "size " + std::to_string(s.size());
    return abelian_iso_label(subtable(t, s));
}

StructureReport analyze(const CayleyTable& t) {
    require_loop(t);
    StructureReport r;
    r.order = t.n;
    r.n_lambda = left_nucleus(t);
    r.n_mu = middle_nucleus(t);
    r.n_rho = right_nucleus(t);
    r.nucleus = intersect(intersect(r.n_lambda, r.n_mu), r.n_rho);
    r.commutant = commutant(t);
    r.center = intersect(r.nucleus, r.commutant);
    r.associator = associator_subloop(t);
    r.n_lambda_label = subset_iso_label(t, r.n_lambda);
    r.n_mu_label = subset_iso_label(t, r.n_mu);
    r.n_rho_label = subset_iso_label(t, r.n_rho);
    r.nucleus_label = subset_iso_label(t, r.nucleus);
    r.commutant_label = subset_iso_label(t, r.commutant);
    r.center_label = subset_iso_label(t, r.center);
    r.associator_label = subset_iso_label(t, r.associator);
    return r;
}

std::string structure_report_to_json(const StructureReport& r) {
    nlohmann::json j;
    j["order"] = r.order;
    auto put = [&](const char* name, const SubsetHandle& s, const std::string& label) {
        j[name] = {{"members", s.members}, {"size", s.size()}, {"iso_label", label}};
    };
    put("n_lambda", r.n_lambda, r.n_lambda_label);
    put("n_mu", r.n_mu, r.n_mu_label);
    put("n_rho", r.n_rho, r.n_rho_label);
    put("nucleus", r.nucleus, r.nucleus_label);
    put("commutant", r.commutant, r.commutant_label);
    put("center", r.center, r.center_label);
    put("associator", r.associator, r.associator_label);
    return j.dump(2);
}

std::string structure_report_to_text(const StructureReport& r) {
    std::ostringstream os;
    os << "loop of order " << r.order << "\n";
    auto row = [&](const char* name, const SubsetHandle& s, const std::string& label) {
        os << "  " << name << ": size " << s.size() << " (" << label << ")  {";
        for (size_t i = 0; i < s.members.size(); ++i) {
            if (i) os << ",";
            os << s.members[i];
        }
        os << "}\n";
    };
    row("N_lambda ", r.n_lambda, r.n_lambda_label);
    row("N_rho    ", r.n_rho, r.n_rho_label);
    row("N_mu     ", r.n_mu, r.n_mu_label);
    row("N        ", r.nucleus, r.nucleus_label);
    row("C        ", r.commutant, r.commutant_label);
    row("Z        ", r.center, r.center_label);
    row("associator", r.associator, r.associator_label);
    return os.str();
}

}  // namespace loops
