// Acceptance gate: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion.  Exit 0 iff all pass.
//
// Usage: acceptance [path-to-cli]
// The CLI path is needed for the determinism criterion; without it that
// criterion fails.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "virateich/suites.hpp"

using namespace virateich;

namespace {

struct Criterion {
    int index;
    std::string name;
    bool pass = true;
    double worst = 0.0;
    double gate = 0.0;
    std::string detail;
};

const CheckResult& find_check(const std::vector<SuiteReport>& reports, const std::string& suite,
                              const std::string& name) {
    for (const SuiteReport& r : reports) {
        if (r.suite != suite) continue;
        for (const CheckResult& c : r.checks)
            if (c.name == name) return c;
    }
    std::fprintf(stderr, "acceptance: missing check %s/%s\n", suite.c_str(), name.c_str());
    std::exit(2);
}

Criterion from_checks(int idx, std::string name, const std::vector<SuiteReport>& reports,
                      std::initializer_list<std::pair<const char*, const char*>> keys) {
    Criterion c{idx, std::move(name), true, 0.0, 0.0, {}};
    for (const auto& [suite, check] : keys) {
        const CheckResult& res = find_check(reports, suite, check);
        c.pass = c.pass && res.pass;
        if (res.max_residual >= c.worst) {
            c.worst = res.max_residual;
            c.gate = res.tolerance;
        }
    }
    return c;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Criterion determinism(int idx, const std::string& cli) {
    Criterion c{idx, "determinism: identical seeded reports, full suite exits 0", true, 0.0, 0.0, {}};
    if (cli.empty()) {
        c.pass = false;
        c.detail = "no CLI path given";
        return c;
    }
    const std::string out1 = "acceptance_report_1.json";
    const std::string out2 = "acceptance_report_2.json";
    const std::string base = "\"" + cli + "\" verify --suite all --n 256 --seed 7 --json-out ";
    const int rc1 = std::system((base + out1 + " > acceptance_cli_1.log 2>&1").c_str());
    const int rc2 = std::system((base + out2 + " > acceptance_cli_2.log 2>&1").c_str());
    if (rc1 != 0 || rc2 != 0) {
        c.pass = false;
        c.detail = "CLI exited nonzero";
        return c;
    }
    const std::string a = slurp(out1), b = slurp(out2);
    if (a.empty() || a != b) {
        c.pass = false;
        c.detail = "reports differ";
        return c;
    }
    c.detail = std::to_string(a.size()) + " byte report, byte-identical";
    return c;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    SuiteOptions opts; // n = 256, per-check default trials, seed 7
    const std::vector<SuiteReport> reports = run_all(opts);

    std::vector<Criterion> criteria;
    criteria.push_back(from_checks(1, "model potentials exact (disk 1/4, trumpet -l^2/4)",
                                   reports,
                                   {{"hill", "model potentials (disk 1/4, trumpet -l^2/4)"}}));
    criteria.push_back(from_checks(2, "structure equations, K=-1, flat connection on models",
                                   reports,
                                   {{"coframe", "model coframes: structure equations"},
                                    {"coframe", "model coframes: Gauss curvature -1"},
                                    {"coframe", "model coframes: flat connection"}}));
    criteria.push_back(from_checks(3, "two Hill-potential routes agree on u=0 data", reports,
                                   {{"coframe", "two Hill routes on u=0 data"}}));
    criteria.push_back(from_checks(4, "normal-form oracle pair, idempotence, equivariance",
                                   reports,
                                   {{"hill", "normal form vs direct formula"},
                                    {"hill", "normalization is idempotent"},
                                    {"hill", "splitting gauge equivariance"}}));
    criteria.push_back(from_checks(5, "cocycle/action law, trace invariance, neck recovery",
                                   reports,
                                   {{"diffeo", "schwarzian cocycle"},
                                    {"diffeo", "hill action composition law"},
                                    {"hill", "monodromy trace invariance"},
                                    {"hill", "neck length recovery"}}));
    criteria.push_back(from_checks(6, "trumpet moment maps and exactness", reports,
                                   {{"trumpet", "diffeomorphism moment map"},
                                    {"trumpet", "circle moment map"},
                                    {"trumpet", "exactness"}}));
    criteria.push_back(from_checks(7, "Darboux equalities and nondegeneracy", reports,
                                   {{"trumpet", "darboux and Fourier forms agree"},
                                    {"trumpet", "truncated form is nondegenerate"}}));
    criteria.push_back(from_checks(8, "Wolpert block form and Diff-invariance", reports,
                                   {{"wolpert", "interior Darboux block is exactly 1/2"},
                                    {"wolpert", "disjoint curves pair to zero"},
                                    {"wolpert", "omega invariance under the boundary action"}}));
    criteria.push_back(from_checks(9, "groupoid trivializations and slice restriction", reports,
                                   {{"groupoid", "left and right trivializations agree"},
                                    {"groupoid", "slice restriction reproduces the trumpet form"}}));
    criteria.push_back(determinism(10, cli));

    int failed = 0;
    for (const Criterion& c : criteria) {
        if (!c.pass) ++failed;
        if (c.detail.empty())
            std::printf("[%2d] %s  %s (worst residual %.3e, gate %.1e)\n", c.index,
                        c.pass ? "PASS" : "FAIL", c.name.c_str(), c.worst, c.gate);
        else
            std::printf("[%2d] %s  %s (%s)\n", c.index, c.pass ? "PASS" : "FAIL", c.name.c_str(),
                        c.detail.c_str());
    }
    std::printf("acceptance: %d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
