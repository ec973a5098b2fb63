#include "loops/isoclass.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <atomic>

#include "json.hpp"
#include "loops/structure.hpp"

namespace loops {

std::string Fingerprint::key() const {
    std::ostringstream os;
    os << order << '|' << associative << commutative << '|' << n_lambda << ',' << n_mu << ','
       << n_rho << ',' << nucleus << ',' << commutant << ',' << center << '|'
       << associating_triples << '|' << commuting_pairs << '|';
    for (const auto& tt : translation_types) {
        for (int v : tt.left) os << v << '.';
        os << '/';
        for (int v : tt.right) os << v << '.';
        os << ';';
    }
    return os.str();
}

Fingerprint fingerprint(const CayleyTable& t) {
    LoopFlags f = check_loop(t);
    if (!f.loop) throw std::invalid_argument("not a loop");
    Fingerprint fp;
    fp.order = t.n;
    fp.associative = f.associative;
    fp.commutative = f.commutative;
    fp.n_lambda = left_nucleus(t).size();
    fp.n_mu = middle_nucleus(t).size();
    fp.n_rho = right_nucleus(t).size();
    SubsetHandle nuc = nucleus(t);
    SubsetHandle com = commutant(t);
    fp.nucleus = nuc.size();
    fp.commutant = com.size();
    SubsetHandle z;
    std::set_intersection(nuc.members.begin(), nuc.members.end(), com.members.begin(),
                          com.members.end(), std::back_inserter(z.members));
    fp.center = z.size();
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b)
            for (int c = 0; c < t.n; ++c)
                if (t.at(t.at(a, b), c) == t.at(a, t.at(b, c))) ++fp.associating_triples;
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b)
            if (t.at(a, b) == t.at(b, a)) ++fp.commuting_pairs;
    fp.translation_types = translation_cycle_types(t);
    std::sort(fp.translation_types.begin(), fp.translation_types.end());
    return fp;
}

namespace {

// Per-element local invariant classes, shared between the two tables so class
// ids are comparable. Any isomorphism must map an element onto one of the
// same class.
std::vector<int> local_classes(const CayleyTable& t, std::map<std::string, int>& interner) {
    std::vector<TranslationTypes> tt = translation_cycle_types(t);
    SubsetHandle nl = left_nucleus(t), nm = middle_nucleus(t), nr = right_nucleus(t),
                 co = commutant(t);
    std::vector<int> cls(t.n);
    for (int x = 0; x < t.n; ++x) {
        std::ostringstream os;
        for (int v : tt[x].left) os << v << '.';
        os << '/';
        for (int v : tt[x].right) os << v << '.';
        os << '|' << nl.contains(x) << nm.contains(x) << nr.contains(x) << co.contains(x);
        auto [it, _] = interner.emplace(os.str(), static_cast<int>(interner.size()));
        cls[x] = it->second;
    }
    return cls;
}

struct IsoSearch {
    const CayleyTable& A;
    const CayleyTable& B;
    std::vector<int> clsA, clsB;
    std::vector<int> f, finv;            // -1 = unassigned
    std::vector<int> trail;              // assigned a-indices, for undo

    IsoSearch(const CayleyTable& a, const CayleyTable& b) : A(a), B(b) {
        std::map<std::string, int> interner;
        clsA = local_classes(A, interner);
        clsB = local_classes(B, interner);
        f.assign(A.n, -1);
        finv.assign(A.n, -1);
    }

    bool assign(int a, int b) {
        if (f[a] >= 0) return f[a] == b;
        if (finv[b] >= 0 || clsA[a] != clsB[b]) return false;
        f[a] = b;
        finv[b] = a;
        trail.push_back(a);
        // Propagate f(a.c) = b.f(c) and f(c.a) = f(c).b over everything
        // already assigned; contradictions bubble up as failure.
        for (int c = 0; c < A.n; ++c) {
            if (f[c] < 0) continue;
            if (!assign(A.at(a, c), B.at(b, f[c]))) return false;
            if (!assign(A.at(c, a), B.at(f[c], b))) return false;
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail.size() > mark) {
            int a = trail.back();
            trail.pop_back();
            finv[f[a]] = -1;
            f[a] = -1;
        }
    }

    // Depth-first over the least unassigned element; candidate images in
    // ascending order for determinism. When `collect` is given, enumerates
    // every completion instead of stopping at the first.
    bool search(std::vector<Permutation>* collect) {
        int a = -1;
        for (int i = 0; i < A.n; ++i)
            if (f[i] < 0) {
                a = i;
                break;
            }
        if (a < 0) {
            if (collect) {
                collect->push_back(Permutation{f});
                return false;  // keep enumerating
            }
            return true;
        }
        for (int b = 0; b < B.n; ++b) {
            if (finv[b] >= 0 || clsA[a] != clsB[b]) continue;
            size_t mark = trail.size();
            if (assign(a, b) && search(collect)) return true;
            undo(mark);
        }
        return false;
    }
};

bool verify_witness(const CayleyTable& A, const CayleyTable& B, const Permutation& w) {
    if (w.degree() != A.n || A.n != B.n || w(0) != 0) return false;
    for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < A.n; ++b)
            if (w(A.at(a, b)) != B.at(w(a), w(b))) return false;
    return true;
}

}  // namespace

std::optional<Permutation> are_isomorphic(const CayleyTable& t1, const CayleyTable& t2) {
    if (t1.n != t2.n) return std::nullopt;
    if (fingerprint(t1).key() != fingerprint(t2).key()) return std::nullopt;
    IsoSearch s(t1, t2);
    {
        std::map<int, int> histA, histB;
        for (int c : s.clsA) ++histA[c];
        for (int c : s.clsB) ++histB[c];
        if (histA != histB) return std::nullopt;
    }
    size_t mark = s.trail.size();
    if (!s.assign(0, 0)) return std::nullopt;
    (void)mark;
    if (!s.search(nullptr)) return std::nullopt;
    Permutation w{s.f};
    if (!verify_witness(t1, t2, w)) throw std::logic_error("iso search produced a bad witness");
    return w;
}

std::vector<Permutation> automorphisms(const CayleyTable& g) {
    LoopFlags f = check_loop(g);
    if (!f.loop || !f.associative) throw std::invalid_argument("not a group");
    IsoSearch s(g, g);
    std::vector<Permutation> out;
    if (s.assign(0, 0)) s.search(&out);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::pair<Permutation, Permutation>> semidirect_iso_criterion(const ActionHom& a,
                                                                            const ActionHom& b) {
    if (a.N != b.N || a.H != b.H) throw std::invalid_argument("actions must share N and H");
    require_valid_action(a);
    require_valid_action(b);
    std::vector<Permutation> autN = automorphisms(a.N);  // throws unless N is a group
    std::vector<Permutation> autH = automorphisms(a.H);
    for (const Permutation& alpha : autN) {
        Permutation alpha_inv = inverse(alpha);
        for (const Permutation& beta : autH) {
            bool ok = true;
            for (int h = 0; h < a.H.n && ok; ++h)
                ok = compose(compose(alpha, a.images[h]), alpha_inv) == b.images[beta(h)];
            if (!ok) continue;
            // Induced pair map, verified against the product tables.
            Permutation eta;
            eta.images.resize(a.N.n * a.H.n);
            for (int h = 0; h < a.H.n; ++h)
                for (int n = 0; n < a.N.n; ++n)
                    eta.images[a.pair_index(n, h)] = b.pair_index(alpha(n), beta(h));
            if (!verify_witness(product(a), product(b), eta))
                throw std::logic_error("criterion pair does not induce an isomorphism");
            return std::make_pair(alpha, beta);
        }
    }
    return std::nullopt;
}

bool conjugacy_criterion(const ActionHom& a, const ActionHom& b) {
    if (a.N != b.N || a.H != b.H) throw std::invalid_argument("actions must share N and H");
    require_valid_action(a);
    require_valid_action(b);
    Permutation id = identity_perm(a.N.n);
    for (int h = 1; h < a.H.n; ++h)
        if (a.images[h] == id || b.images[h] == id)
            throw std::invalid_argument("conjugacy criterion needs trivial kernels");

    std::vector<Permutation> target(b.images);
    std::sort(target.begin(), target.end());
    for (const Permutation& alpha : automorphisms(a.N)) {
        Permutation alpha_inv = inverse(alpha);
        std::vector<Permutation> conj;
        conj.reserve(a.images.size());
        for (const Permutation& p : a.images) conj.push_back(compose(compose(alpha, p), alpha_inv));
        std::sort(conj.begin(), conj.end());
        if (conj == target) return true;
    }
    return false;
}

IsoClassReport classify(const std::vector<CayleyTable>& loops_in, int jobs) {
    IsoClassReport report;
    report.input_count = static_cast<int>(loops_in.size());
    if (loops_in.empty()) return report;
    for (const auto& t : loops_in)
        if (t.n != loops_in.front().n) throw std::invalid_argument("mixed orders in classify");

    std::vector<Fingerprint> fps(loops_in.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (size_t i = 0; i < loops_in.size(); ++i) fps[i] = fingerprint(loops_in[i]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (size_t i = next++; i < loops_in.size(); i = next++)
                    fps[i] = fingerprint(loops_in[i]);
            });
        for (auto& th : pool) th.join();
    }

    // Sequential fold in input order keeps representatives deterministic.
    std::map<std::string, std::vector<int>> buckets;  // fp key -> class indices
    for (int i = 0; i < report.input_count; ++i) {
        std::vector<int>& bucket = buckets[fps[i].key()];
        int home = -1;
        for (int ci : bucket) {
            int rep = report.classes[ci].representative;
            if (are_isomorphic(loops_in[rep], loops_in[i])) {
                home = ci;
                break;
            }
        }
        if (home < 0) {
            IsoClass cls;
            cls.representative = i;
            cls.fp = fps[i];
            cls.associative = fps[i].associative;
            bucket.push_back(static_cast<int>(report.classes.size()));
            report.classes.push_back(std::move(cls));
            home = static_cast<int>(report.classes.size()) - 1;
        }
        report.classes[home].members.push_back(i);
    }
    return report;
}

std::string isoclass_report_to_json(const IsoClassReport& r,
                                    const std::vector<std::string>& input_labels) {
    nlohmann::json j;
    j["input_count"] = r.input_count;
    j["class_count"] = r.class_count();
    auto classes = nlohmann::json::array();
    for (const auto& c : r.classes) {
        nlohmann::json jc;
        jc["representative"] = c.representative;
        if (!input_labels.empty()) jc["representative_label"] = input_labels[c.representative];
        jc["members"] = c.members;
        jc["member_count"] = c.members.size();
        jc["associative"] = c.associative;
        jc["fingerprint"] = {{"n_lambda", c.fp.n_lambda},
                             {"n_mu", c.fp.n_mu},
                             {"n_rho", c.fp.n_rho},
                             {"nucleus", c.fp.nucleus},
                             {"commutant", c.fp.commutant},
                             {"center", c.fp.center},
                             {"associating_triples", c.fp.associating_triples},
                             {"commuting_pairs", c.fp.commuting_pairs}};
        classes.push_back(std::move(jc));
    }
    j["classes"] = std::move(classes);
    return j.dump(2);
}

}  // namespace loops
