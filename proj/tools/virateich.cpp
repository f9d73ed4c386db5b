// Command-line front end: verification suites, Hill-potential computations,
// CSV emission.  Exit codes: 0 success, 1 computational/suite failure,
// 2 usage or schema error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "virateich/coframe.hpp"
#include "virateich/hill.hpp"
#include "virateich/json_io.hpp"
#include "virateich/suites.hpp"
#include "virateich/teich.hpp"
#include "virateich/trumpet.hpp"

namespace {

using namespace virateich;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("VIRATEICH_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw SchemaError("VIRATEICH_SEED", "not an unsigned integer");
        }
    }
    return 7;
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

struct CommonOpts {
    int n = 256;
    int trials = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double tol_scale = 1.0;

    SuiteOptions suite_options() const {
        SuiteOptions o;
        o.n = n;
        o.trials = trials;
        o.seed = seed_set ? seed : default_seed();
        o.tol_scale = tol_scale;
        return o;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n, "grid size (power of two >= 64)");
    cmd->add_option("--trials", o.trials, "trials per check (0 = per-check defaults)");
    cmd->add_option("--seed", o.seed, "PRNG seed (fallback: VIRATEICH_SEED, then 7)")
        ->each([&o](const std::string&) { o.seed_set = true; });
    cmd->add_option("--tol-scale", o.tol_scale, "multiplies all tolerance gates");
}

void check_grid_size(int n) {
    if (n < 64 || !power_of_two(n))
        throw SchemaError("--n", "must be a power of two >= 64, got " + std::to_string(n));
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& columns) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << header << "\n";
    const std::size_t rows = columns.empty() ? 0 : columns[0].size();
    char buf[64];
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g", columns[c][r]);
            out << (c ? "," : "") << buf;
        }
        out << "\n";
    }
}

std::vector<double> grid_x(int n) { return PeriodicFn::grid(n); }

int run_verify(const std::string& suite, const CommonOpts& common, const std::string& json_out) {
    check_grid_size(common.n);
    const SuiteOptions opts = common.suite_options();
    std::vector<SuiteReport> reports;
    if (suite == "all") {
        reports = run_all(opts);
    } else {
        reports.push_back(run_suite(suite, opts));
    }
    for (const SuiteReport& r : reports) print_report(r, std::cout);
    if (!json_out.empty()) io::save_file(json_out, report_json(reports));
    for (const SuiteReport& r : reports)
        if (!r.passed()) return kExitFailure;
    return kExitOk;
}

int run_hill(const std::string& action, const std::string& input, const std::string& diffeo,
             const std::string& out, const std::string& csv) {
    const io::json in = io::load_file(input);
    if (action == "from_asu" || action == "ds_normalize") {
        const BoundaryConnection A = io::decode_connection(in, "input");
        if (action == "from_asu") {
            const HillPotential T = hill_from_asu(A);
            io::save_file(out, io::encode(T.T));
            if (!csv.empty()) write_csv(csv, "x,T", {grid_x(T.T.size()), T.T.values()});
        } else {
            auto [h, T] = ds_normalize(A);
            io::save_file(out, io::json{{"h", io::encode(h)}, {"T", io::encode(T.T)}});
            if (!csv.empty()) write_csv(csv, "x,T", {grid_x(T.T.size()), T.T.values()});
        }
        return kExitOk;
    }
    if (action == "transform") {
        if (diffeo.empty()) throw SchemaError("--diffeo", "required for the transform action");
        const HillPotential T{io::decode_periodic_fn(in, "input").with_weight(2)};
        const DiffeoLift F = io::decode_diffeo(io::load_file(diffeo), "diffeo");
        const HillPotential R = act_on_hill(F, T);
        io::save_file(out, io::encode(R.T));
        if (!csv.empty()) write_csv(csv, "x,T", {grid_x(R.T.size()), R.T.values()});
        return kExitOk;
    }
    // monodromy
    const HillPotential T{io::decode_periodic_fn(in, "input").with_weight(2)};
    io::save_file(out, io::encode(monodromy(T)));
    return kExitOk;
}

int run_emit(const std::string& kind, const std::string& input, const std::string& out) {
    const io::json in = io::load_file(input);
    if (kind == "darboux") {
        const TrumpetPoint p = io::decode_trumpet_point(in, "input");
        const PeriodicFn u = darboux_u(p);
        write_csv(out, "x,u", {grid_x(u.size()), u.values()});
        return kExitOk;
    }
    if (kind == "boundary_moment") {
        const FNPoint p = io::decode_fn_point(in, "input");
        const std::vector<HillPotential> mom = boundary_moment(p);
        if (mom.empty()) throw PreconditionError("boundary_moment: point has no boundary");
        std::string header = "x";
        std::vector<std::vector<double>> cols{grid_x(mom[0].T.size())};
        for (std::size_t j = 0; j < mom.size(); ++j) {
            header += ",moment_" + std::to_string(j + 1);
            cols.push_back(mom[j].T.values());
        }
        write_csv(out, header, cols);
        return kExitOk;
    }
    // curvature_table: {"kind", "nx", "y"|{"y0","ratio","ny"}, "ell"?, "T"?}
    const std::string fkind = in.value("kind", std::string());
    ExampleCoframe kinde;
    if (fkind == "half_plane") kinde = ExampleCoframe::half_plane;
    else if (fkind == "disk") kinde = ExampleCoframe::disk;
    else if (fkind == "cylinder") kinde = ExampleCoframe::cylinder;
    else if (fkind == "fefferman_graham") kinde = ExampleCoframe::fefferman_graham;
    else throw SchemaError("input.kind", "expected one of half_plane, disk, cylinder, fefferman_graham");
    if (!in.contains("nx") || !in["nx"].is_number_integer())
        throw SchemaError("input.nx", "expected an integer");
    const int nx = in["nx"].get<int>();
    std::vector<double> y;
    if (in.contains("y") && in["y"].is_array()) {
        y = in["y"].get<std::vector<double>>();
    } else if (in.contains("y") && in["y"].is_object()) {
        const auto& jy = in["y"];
        y = geometric_heights(jy.value("y0", 0.01), jy.value("ratio", 1.15), jy.value("ny", 24));
    } else {
        throw SchemaError("input.y", "expected an array of heights or {y0, ratio, ny}");
    }
    const double ell = in.value("ell", 1.0);
    std::optional<PeriodicFn> T;
    if (in.contains("T")) T = io::decode_periodic_fn(in["T"], "input.T");
    const CoframeGrid C = make_example_coframe(kinde, nx, y, ell, T ? &*T : nullptr);
    const StructureResiduals sr = structure_residuals(C);
    const Grid2D mult = connection_curvature(C);
    std::vector<double> xs, ys, r1, r2, K, mu;
    for (int j = 0; j < sr.K.ny(); ++j)
        for (int i = 0; i < nx; ++i) {
            xs.push_back(static_cast<double>(i) / nx);
            ys.push_back(y[static_cast<std::size_t>(j)]);
            r1.push_back(sr.r1.at(j, i));
            r2.push_back(sr.r2.at(j, i));
            K.push_back(sr.K.at(j, i));
            mu.push_back(mult.at(j, i));
        }
    write_csv(out, "x,y,r1,r2,K,curvature_multiplier", {xs, ys, r1, r2, K, mu});
    return kExitOk;
}

void write_suite_csv(const std::string& path, const SuiteReport& rep) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << "check,max_residual,tolerance,trials,pass\n";
    char buf[64];
    for (const CheckResult& c : rep.checks) {
        std::snprintf(buf, sizeof(buf), "%.17g", c.max_residual);
        out << '"' << c.name << "\"," << buf << ",";
        std::snprintf(buf, sizeof(buf), "%.17g", c.tolerance);
        out << buf << "," << c.trials << "," << (c.pass ? "true" : "false") << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"virateich: numerical checks for boundary Virasoro geometry"};
    app.require_subcommand(1);

    // verify
    CommonOpts vopts;
    std::string suite = "all";
    std::string json_out;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "all, diffeo, hill, coframe, trumpet, wolpert, groupoid")
        ->check(CLI::IsMember({"all", "diffeo", "hill", "coframe", "trumpet", "wolpert",
                               "groupoid"}));
    add_common(verify, vopts);
    verify->add_option("--json-out", json_out, "write the machine-readable report here");

    // hill
    std::string hill_action, hill_input, hill_diffeo, hill_out, hill_csv;
    CLI::App* hill = app.add_subcommand("hill", "Hill-potential computations");
    hill->add_option("action", hill_action, "from_asu, transform, monodromy, ds_normalize")
        ->required()
        ->check(CLI::IsMember({"from_asu", "transform", "monodromy", "ds_normalize"}));
    hill->add_option("--input", hill_input, "input JSON")->required();
    hill->add_option("--diffeo", hill_diffeo, "diffeomorphism JSON (transform only)");
    hill->add_option("--out", hill_out, "output JSON")->required();
    hill->add_option("--csv", hill_csv, "optional CSV companion (x, T(x))");

    // emit
    std::string emit_kind, emit_input, emit_out;
    CLI::App* emit = app.add_subcommand("emit", "emit CSV tables");
    emit->add_option("kind", emit_kind, "darboux, boundary_moment, curvature_table")
        ->required()
        ->check(CLI::IsMember({"darboux", "boundary_moment", "curvature_table"}));
    emit->add_option("--input", emit_input, "input JSON")->required();
    emit->add_option("--out", emit_out, "output CSV")->required();
    emit->footer("CSV columns: darboux -> x,u | boundary_moment -> x,moment_1..moment_r | "
                 "curvature_table -> x,y,r1,r2,K,curvature_multiplier");

    // trumpet verify
    CommonOpts topts;
    CLI::App* trumpet = app.add_subcommand("trumpet", "trumpet moduli space commands");
    CLI::App* tverify = trumpet->add_subcommand("verify", "residual table for the trumpet form");
    add_common(tverify, topts);
    trumpet->require_subcommand(1);

    // groupoid verify
    CommonOpts gopts;
    std::string gcsv;
    CLI::App* groupoid = app.add_subcommand("groupoid", "groupoid 2-form commands");
    CLI::App* gverify = groupoid->add_subcommand("verify", "residual table for the groupoid form");
    add_common(gverify, gopts);
    gverify->add_option("--csv", gcsv, "write residuals as CSV");
    groupoid->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return run_verify(suite, vopts, json_out);
        if (*hill) return run_hill(hill_action, hill_input, hill_diffeo, hill_out, hill_csv);
        if (*emit) return run_emit(emit_kind, emit_input, emit_out);
        if (*trumpet) {
            check_grid_size(topts.n);
            const SuiteReport rep = run_suite("trumpet", topts.suite_options());
            print_report(rep, std::cout);
            return rep.passed() ? kExitOk : kExitFailure;
        }
        if (*groupoid) {
            check_grid_size(gopts.n);
            const SuiteReport rep = run_suite("groupoid", gopts.suite_options());
            print_report(rep, std::cout);
            if (!gcsv.empty()) write_suite_csv(gcsv, rep);
            return rep.passed() ? kExitOk : kExitFailure;
        }
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
