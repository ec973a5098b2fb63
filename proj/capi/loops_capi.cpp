#include "loops.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "loops/action.hpp"
#include "loops/isoclass.hpp"
#include "loops/perm.hpp"
#include "loops/reports.hpp"
#include "loops/structure.hpp"
#include "loops/table.hpp"

struct loops_table {
    loops::CayleyTable t;
};

struct loops_action {
    loops::ActionHom a;
};

namespace {

thread_local std::string g_last_error = "";

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
loops_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return LOOPS_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LOOPS_ERR_INTERNAL;
    }
}

loops_status read_file(const char* path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        g_last_error = std::string("cannot read ") + path;
        return LOOPS_ERR_IO;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return LOOPS_OK;
}

}  // namespace

extern "C" {

const char* loops_last_error(void) { return g_last_error.c_str(); }

void loops_string_free(char* s) { delete[] s; }
void loops_table_free(loops_table* t) { delete t; }
void loops_action_free(loops_action* a) { delete a; }

loops_status loops_table_parse(const char* text, loops_table** out) {
    return guarded([&] {
        *out = new loops_table{loops::parse_table(text)};
        return LOOPS_OK;
    });
}

loops_status loops_table_read_file(const char* path, loops_table** out) {
    std::string text;
    if (loops_status st = read_file(path, text); st != LOOPS_OK) return st;
    return loops_table_parse(text.c_str(), out);
}

loops_status loops_table_cyclic(int n, loops_table** out) {
    return guarded([&] {
        *out = new loops_table{loops::cyclic_table(n)};
        return LOOPS_OK;
    });
}

int loops_table_order(const loops_table* t) { return t->t.n; }

loops_status loops_table_check(const loops_table* t, int* quasigroup, int* has_identity, int* loop,
                               int* associative, int* commutative) {
    return guarded([&] {
        loops::LoopFlags f = loops::check_loop(t->t);
        if (quasigroup) *quasigroup = f.quasigroup;
        if (has_identity) *has_identity = f.has_identity;
        if (loop) *loop = f.loop;
        if (associative) *associative = f.associative;
        if (commutative) *commutative = f.commutative;
        return LOOPS_OK;
    });
}

loops_status loops_table_render(const loops_table* t, int format_json, char** out_text) {
    return guarded([&] {
        *out_text = dup_string(format_json ? loops::table_to_json(t->t)
                                           : loops::table_to_text(t->t));
        return LOOPS_OK;
    });
}

loops_status loops_action_parse(const char* text, loops_action** out) {
    return guarded([&] {
        *out = new loops_action{loops::action_from_json(text)};
        return LOOPS_OK;
    });
}

loops_status loops_action_read_file(const char* path, loops_action** out) {
    std::string text;
    if (loops_status st = read_file(path, text); st != LOOPS_OK) return st;
    return loops_action_parse(text.c_str(), out);
}

loops_status loops_action_product(const loops_action* a, loops_table** out) {
    return guarded([&] {
        *out = new loops_table{loops::product(a->a)};
        return LOOPS_OK;
    });
}

loops_status loops_analyze(const loops_table* t, int format_json, char** out_report) {
    return guarded([&] {
        loops::StructureReport r = loops::analyze(t->t);
        *out_report = dup_string(format_json ? loops::structure_report_to_json(r)
                                             : loops::structure_report_to_text(r));
        return LOOPS_OK;
    });
}

loops_status loops_iso(const loops_table* t1, const loops_table* t2, int* iso,
                       char** witness_cycles) {
    return guarded([&] {
        auto w = loops::are_isomorphic(t1->t, t2->t);
        *iso = w.has_value();
        if (witness_cycles) *witness_cycles = w ? dup_string(loops::format_cycles(*w)) : nullptr;
        return LOOPS_OK;
    });
}

loops_status loops_enumerate_stabilizer_torsion(int degree, int fixed_point, int n,
                                                char** out_lines) {
    return guarded([&] {
        std::string text;
        for (const auto& p : loops::enumerate_stabilizer_torsion(degree, fixed_point, n)) {
            text += loops::format_cycles(p);
            text += '\n';
        }
        *out_lines = dup_string(text);
        return LOOPS_OK;
    });
}

loops_status loops_classify_metacyclic(int m, int p, int format_json, int jobs,
                                       char** out_report) {
    return guarded([&] {
        loops::ReproReport r = loops::classify_metacyclic(m, p, format_json, jobs);
        *out_report = dup_string(format_json ? r.json : r.text);
        return LOOPS_OK;
    });
}

loops_status loops_report_order20(int format_json, int jobs, char** out_report, int* discrepancy) {
    return guarded([&] {
        loops::ReproReport r = loops::report_order20(format_json, jobs);
        *out_report = dup_string(format_json ? r.json : r.text);
        if (discrepancy) *discrepancy = r.discrepancy;
        return LOOPS_OK;
    });
}

loops_status loops_report_order27(int format_json, int jobs, char** out_report, int* discrepancy) {
    return guarded([&] {
        loops::ReproReport r = loops::report_order27(format_json, jobs);
        *out_report = dup_string(format_json ? r.json : r.text);
        if (discrepancy) *discrepancy = r.discrepancy;
        return LOOPS_OK;
    });
}

}  // extern "C"
