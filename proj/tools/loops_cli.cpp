// Command-line front end over the C API. Exit codes: 0 success, 1 validation
// failure, 2 discrepancy against the published values (report still written).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "loops.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitDiscrepancy = 2;

struct StringDeleter {
    void operator()(char* s) const { loops_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct TableDeleter {
    void operator()(loops_table* t) const { loops_table_free(t); }
};
using Table = std::unique_ptr<loops_table, TableDeleter>;

struct ActionDeleter {
    void operator()(loops_action* a) const { loops_action_free(a); }
};
using Action = std::unique_ptr<loops_action, ActionDeleter>;

int fail(const char* what) {
    std::cerr << "error: " << what << ": " << loops_last_error() << "\n";
    return kExitInvalid;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitInvalid;
    }
    out << text;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite loops from semidirect products: construction, structure, classification"};
    app.require_subcommand(1);
    // --h is a domain flag (order of the acting group), so help is long-only.
    app.set_help_flag("--help", "print help");

    std::string in_path, in2_path, out_path, format = "text", generator;
    int m = 0, h = 0, jobs = 1;

    auto add_io = [&](CLI::App* cmd, bool with_in2 = false) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--out", out_path, "output path (stdout when omitted)");
        cmd->add_option("--format", format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_in2) cmd->add_option("--in2", in2_path, "second input file")->required();
    };

    auto* check = app.add_subcommand("check", "validate a Cayley table file and print its flags");
    check->add_option("--in", in_path, "table file")->required();
    add_io(check);

    auto* build = app.add_subcommand("build", "construct a semidirect product from an action");
    build->add_option("--in", in_path, "action file (JSON)");
    build->add_option("--n", m, "order of the normal cyclic factor");
    build->add_option("--h", h, "order of the acting cyclic group");
    build->add_option("--generator", generator, "generator image, cycle notation");
    add_io(build);

    auto* analyze = app.add_subcommand("analyze", "nuclei, commutant, center, associator");
    analyze->add_option("--in", in_path, "table file")->required();
    add_io(analyze);

    auto* iso = app.add_subcommand("iso", "test two tables for isomorphism");
    iso->add_option("--in", in_path, "first table file")->required();
    add_io(iso, true);

    auto* enumerate = app.add_subcommand("enumerate", "generator permutations for Z_m x| Z_h");
    enumerate->add_option("--n", m, "order of the normal cyclic factor")->required();
    enumerate->add_option("--h", h, "order of the acting cyclic group")->required();
    add_io(enumerate);

    auto* classify = app.add_subcommand("classify", "classify the Z_m x| Z_h family");
    classify->add_option("--n", m, "order of the normal cyclic factor")->required();
    classify->add_option("--h", h, "order of the acting cyclic group")->required();
    classify->add_option("--jobs", jobs, "worker count");
    add_io(classify);

    auto* rep20 = app.add_subcommand("report-order20", "full order-20 reproduction");
    rep20->add_option("--jobs", jobs, "worker count");
    add_io(rep20);

    auto* rep27 = app.add_subcommand("report-order27", "full order-27 reproduction");
    rep27->add_option("--jobs", jobs, "worker count");
    add_io(rep27);

    CLI11_PARSE(app, argc, argv);
    const int json = format == "json";

    if (check->parsed()) {
        loops_table* raw = nullptr;
        if (loops_table_read_file(in_path.c_str(), &raw) != LOOPS_OK) return fail("check");
        Table t(raw);
        int quasigroup, identity, loop, assoc, comm;
        if (loops_table_check(t.get(), &quasigroup, &identity, &loop, &assoc, &comm) != LOOPS_OK)
            return fail("check");
        std::string text;
        if (json) {
            text = std::string("{\"order\": ") + std::to_string(loops_table_order(t.get())) +
                   ", \"quasigroup\": " + (quasigroup ? "true" : "false") +
                   ", \"has_identity\": " + (identity ? "true" : "false") +
                   ", \"loop\": " + (loop ? "true" : "false") +
                   ", \"associative\": " + (assoc ? "true" : "false") +
                   ", \"commutative\": " + (comm ? "true" : "false") + "}";
        } else {
            text = "order: " + std::to_string(loops_table_order(t.get())) +
                   "\nquasigroup: " + (quasigroup ? "yes" : "no") +
                   "\nhas_identity: " + (identity ? "yes" : "no") +
                   "\nloop: " + (loop ? "yes" : "no") +
                   "\nassociative: " + (assoc ? "yes" : "no") +
                   "\ncommutative: " + (comm ? "yes" : "no") + "\n";
        }
        int rc = emit(text, out_path);
        return rc != kExitOk ? rc : (loop ? kExitOk : kExitInvalid);
    }

    if (build->parsed()) {
        loops_action* araw = nullptr;
        if (!in_path.empty()) {
            if (loops_action_read_file(in_path.c_str(), &araw) != LOOPS_OK) return fail("build");
        } else {
            if (m <= 0 || h <= 0 || generator.empty()) {
                std::cerr << "error: build needs --in or all of --n, --h, --generator\n";
                return kExitInvalid;
            }
            std::string shorthand = "{\"N\": \"Z" + std::to_string(m) + "\", \"H\": \"Z" +
                                    std::to_string(h) + "\", \"generator\": \"" + generator +
                                    "\"}";
            if (loops_action_parse(shorthand.c_str(), &araw) != LOOPS_OK) return fail("build");
        }
        Action a(araw);
        loops_table* traw = nullptr;
        if (loops_action_product(a.get(), &traw) != LOOPS_OK) return fail("build");
        Table t(traw);
        char* text = nullptr;
        if (loops_table_render(t.get(), json, &text) != LOOPS_OK) return fail("build");
        CString holder(text);
        return emit(holder.get(), out_path);
    }

    if (analyze->parsed()) {
        loops_table* raw = nullptr;
        if (loops_table_read_file(in_path.c_str(), &raw) != LOOPS_OK) return fail("analyze");
        Table t(raw);
        char* text = nullptr;
        if (loops_analyze(t.get(), json, &text) != LOOPS_OK) return fail("analyze");
        CString holder(text);
        return emit(holder.get(), out_path);
    }

    if (iso->parsed()) {
        loops_table *raw1 = nullptr, *raw2 = nullptr;
        if (loops_table_read_file(in_path.c_str(), &raw1) != LOOPS_OK) return fail("iso");
        Table t1(raw1);
        if (loops_table_read_file(in2_path.c_str(), &raw2) != LOOPS_OK) return fail("iso");
        Table t2(raw2);
        int isomorphic = 0;
        char* witness = nullptr;
        if (loops_iso(t1.get(), t2.get(), &isomorphic, &witness) != LOOPS_OK) return fail("iso");
        CString holder(witness);
        std::string text;
        if (json)
            text = std::string("{\"isomorphic\": ") + (isomorphic ? "true" : "false") +
                   (isomorphic ? std::string(", \"witness\": \"") + holder.get() + "\"" : "") + "}";
        else
            text = isomorphic ? std::string("isomorphic, witness ") + holder.get()
                              : "not isomorphic";
        return emit(text, out_path);
    }

    if (enumerate->parsed()) {
        char* text = nullptr;
        if (loops_enumerate_stabilizer_torsion(m, 0, h, &text) != LOOPS_OK)
            return fail("enumerate");
        CString holder(text);
        return emit(holder.get(), out_path);
    }

    if (classify->parsed()) {
        char* text = nullptr;
        if (loops_classify_metacyclic(m, h, json, jobs, &text) != LOOPS_OK)
            return fail("classify");
        CString holder(text);
        return emit(holder.get(), out_path);
    }

    if (rep20->parsed() || rep27->parsed()) {
        char* text = nullptr;
        int discrepancy = 0;
        loops_status st = rep20->parsed()
                              ? loops_report_order20(json, jobs, &text, &discrepancy)
                              : loops_report_order27(json, jobs, &text, &discrepancy);
        if (st != LOOPS_OK) return fail("report");
        CString holder(text);
        int rc = emit(holder.get(), out_path);
        if (rc != kExitOk) return rc;
        return discrepancy ? kExitDiscrepancy : kExitOk;
    }

    return kExitInvalid;
}
