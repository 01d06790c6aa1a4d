// Command-line front end; talks to the library exclusively through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prs.h"

namespace {

struct FieldHandle {
    prs_field* f = nullptr;
    ~FieldHandle() { prs_field_destroy(f); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { prs_string_free(s); }
};

int fail(prs_status st) {
    std::cerr << "error: " << prs_last_error() << "\n";
    return int(st);
}

// Emits the text/JSON report on stdout; when csv_path is nonempty, also
// fetches the CSV rendering and writes it there.
template <class Emit>
int emit_report(bool json, const std::string& csv_path, Emit&& emit) {
    OwnedString rep;
    prs_status st = emit(json ? PRS_FORMAT_JSON : PRS_FORMAT_TEXT, &rep.s);
    if (rep.s) std::cout << rep.s;
    if (st != PRS_OK && !rep.s) return fail(st);
    if (st != PRS_OK) {
        std::cerr << "error: " << prs_last_error() << "\n";
        return int(st);
    }
    if (!csv_path.empty()) {
        OwnedString csv;
        prs_status cst = emit(PRS_FORMAT_CSV, &csv.s);
        if (cst != PRS_OK) return fail(cst);
        std::ofstream out(csv_path);
        if (!out) {
            std::cerr << "error: cannot write " << csv_path << "\n";
            return int(PRS_ERR_USAGE);
        }
        out << csv.s;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projective Reed-Solomon deep hole toolkit"};
    app.set_version_flag("--version", std::string(prs_version()));
    app.require_subcommand(1);

    long p = 0;
    int m = 1, k = 0, dim = 0;
    bool json = false;
    std::string csv_path, mode = "classify";
    std::vector<long> point;
    prs_options opts{0, 0};

    auto add_field_flags = [&](CLI::App* cmd) {
        cmd->add_option("-p,--prime", p, "characteristic (prime)")->required();
        cmd->add_option("-m,--degree", m, "extension degree (q = p^m)")
            ->default_val(1);
        cmd->add_flag("--json", json, "emit the JSON report");
        cmd->add_option("--csv", csv_path, "write the class table as CSV to FILE");
    };
    auto add_bound_flags = [&](CLI::App* cmd) {
        cmd->add_option("--max-points", opts.max_points,
                        "enumeration bound on projective points (0 = default)");
        cmd->add_option("--threads", opts.threads, "worker cap (0 = one worker)");
    };

    CLI::App* c_field = app.add_subcommand("field", "field order, modulus, element table");
    add_field_flags(c_field);

    CLI::App* c_code = app.add_subcommand("code", "generator/parity-check description of PRS(k)");
    add_field_flags(c_code);
    c_code->add_option("-k,--dimension", k, "code dimension")->required();

    CLI::App* c_rho = app.add_subcommand("covering-radius", "covering radius of PRS(k)");
    add_field_flags(c_rho);
    c_rho->add_option("-k,--dimension", k, "code dimension")->required();
    add_bound_flags(c_rho);

    CLI::App* c_dh = app.add_subcommand("deep-holes", "deep hole classes of PRS(k)");
    add_field_flags(c_dh);
    c_dh->add_option("-k,--dimension", k, "code dimension")->required();
    c_dh->add_option("--mode", mode, "enumerate | families | classify | orbits")
        ->default_val("classify");
    add_bound_flags(c_dh);

    CLI::App* c_orb = app.add_subcommand("orbits", "group orbit of a projective point");
    add_field_flags(c_orb);
    c_orb->add_option("-n,--dim", dim, "ambient dimension m of P^{m-1}")->required();
    c_orb->add_option("--point", point,
                      "homogeneous coordinates (default (0:..:0:1:0))");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return int(PRS_ERR_USAGE);
    }

    FieldHandle F;
    if (prs_status st = prs_field_create(p, m, &F.f); st != PRS_OK) return fail(st);

    if (c_field->parsed())
        return emit_report(json, csv_path, [&](prs_format fmt, char** rep) {
            return prs_field_info(F.f, fmt, rep);
        });

    if (c_code->parsed())
        return emit_report(json, csv_path, [&](prs_format fmt, char** rep) {
            prs_code* code = nullptr;
            prs_status st = prs_code_create(F.f, k, &code);
            if (st != PRS_OK) return st;
            st = prs_code_info(code, fmt, rep);
            prs_code_destroy(code);
            return st;
        });

    if (c_rho->parsed())
        return emit_report(json, csv_path, [&](prs_format fmt, char** rep) {
            int rho = -1;
            return prs_covering_radius(F.f, k, &opts, fmt, &rho, rep);
        });

    if (c_dh->parsed())
        return emit_report(json, csv_path, [&](prs_format fmt, char** rep) {
            return prs_deep_holes(F.f, k, mode.c_str(), &opts, fmt, rep);
        });

    // orbits
    return emit_report(json, csv_path, [&](prs_format fmt, char** rep) {
        return prs_orbit(F.f, dim, point.empty() ? nullptr : point.data(),
                         point.size(), fmt, rep);
    });
}
