// gk-local: closed-form archimedean constants, local torus integrals, and the
// verification suites, with machine-readable JSON output.
//
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage error.

#include "gklocal/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

void even_weight_or_throw(int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("weights must be even and >= 2");
}

std::string default_report_path() {
    if (const char* dir = std::getenv("GKLOCAL_REPORT_DIR")) {
        return (std::filesystem::path(dir) / "report.json").string();
    }
    return "report.json";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric archimedean local constants"};
    app.require_subcommand(1);

    // constant -------------------------------------------------------------
    auto* constant = app.add_subcommand("constant", "global constant from place data");
    std::vector<std::string> place_args;
    constant->add_option("--place", place_args,
                         "place spec: real-split:k=2,m=0[,lambda=1][,match|nomatch] | "
                         "complex-split:kid=4,kc=2,mid=1,mc=0[,match|nomatch] | "
                         "nonsplit:k=4,m=1")
        ->required()
        ->expected(-1);

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "real | complex | constants | all")->required();
    gk::SuiteOptions opts;
    verify->add_option("--max-k", opts.max_k, "largest weight in the grids (even)");
    verify->add_option("--tol", opts.tol, "relative tolerance for quadrature checks");
    verify->add_option("--seed", opts.seed, "seed for the randomized checks");
    verify->add_option("--jobs", opts.jobs, "worker threads (0: all cores)");
    std::string out_path;
    verify->add_option("--out", out_path,
                       "report file (default: $GKLOCAL_REPORT_DIR/report.json)");

    // integral ---------------------------------------------------------------
    auto* integral = app.add_subcommand("integral", "local torus integral");
    auto* ireal = integral->add_subcommand("real", "real place");
    int rk = 4, rm = 0, rlambda = 1, rchi = 1;
    bool rnum = false;
    double rtol = 1e-8;
    ireal->add_option("--k", rk, "weight (even, >= 2)")->required();
    ireal->add_option("--m", rm, "torus exponent");
    ireal->add_option("--lambda", rlambda, "extension sign (+1/-1)");
    ireal->add_option("--chi", rchi, "chi(-1) (+1/-1)");
    ireal->add_flag("--numeric", rnum, "also run the quadrature oracle");
    ireal->add_option("--tol", rtol, "quadrature tolerance");
    auto* icplx = integral->add_subcommand("complex", "complex place");
    int ck_id = 2, ck_c = 2, cm_id = 0, cm_c = 0, cmode = 0;
    bool cnum = false;
    double ctol = 1e-6;
    icplx->add_option("--k-id", ck_id, "weight at the identity embedding")->required();
    icplx->add_option("--k-c", ck_c, "weight at the conjugate embedding")->required();
    icplx->add_option("--m-id", cm_id, "torus exponent (identity)");
    icplx->add_option("--m-c", cm_c, "torus exponent (conjugate)");
    icplx->add_option("--chi-mode", cmode, "circle mode of the locally constant character");
    icplx->add_flag("--numeric", cnum, "also run the quadrature oracle");
    icplx->add_option("--tol", ctol, "quadrature tolerance");
    integral->require_subcommand(1);

    // table ----------------------------------------------------------------
    auto* table = app.add_subcommand("table", "closed-form constants over a weight grid");
    bool treal = false, tcplx = false, tnon = false;
    int tmax = 6;
    std::string tformat = "csv";
    table->add_flag("--real", treal, "real split rows");
    table->add_flag("--complex", tcplx, "complex split rows");
    table->add_flag("--nonsplit", tnon, "nonsplit rows");
    table->add_option("--max-k", tmax, "largest weight (even)");
    table->add_option("--format", tformat, "csv | md");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*constant) {
            std::vector<gk::PlaceSpec> places;
            for (auto& s : place_args) places.push_back(gk::parse_place_spec(s));
            std::cout << gk::constant_payload(places).dump(2) << "\n";
            return 0;
        }

        if (*verify) {
            even_weight_or_throw(opts.max_k);
            std::vector<std::string> names;
            if (suite == "all") {
                names = gk::suite_names();
            } else {
                names = {suite};
            }
            std::vector<gk::VerificationReport> reps;
            for (auto& n : names) reps.push_back(gk::run_suite(n, opts));
            gk::json merged;
            bool ok = true;
            if (reps.size() == 1) {
                merged = reps[0].to_json();
                ok = reps[0].all_pass();
            } else {
                gk::VerificationReport combined;
                combined.suite = "all";
                combined.opts = opts;
                combined.timestamp = reps[0].timestamp;
                for (auto& r : reps) {
                    combined.cases.insert(combined.cases.end(), r.cases.begin(), r.cases.end());
                    ok = ok && r.all_pass();
                }
                merged = combined.to_json();
            }
            std::string path = out_path.empty() ? default_report_path() : out_path;
            std::ofstream f(path);
            if (!f) {
                std::cerr << "cannot write report to " << path << "\n";
                return 2;
            }
            f << merged.dump(2) << "\n";
            std::cout << "cases: " << merged["summary"]["pass"] << " pass, "
                      << merged["summary"]["fail"] << " fail, " << merged["summary"]["skipped"]
                      << " skipped\nreport: " << path << "\n";
            return ok ? 0 : 1;
        }

        if (*integral) {
            gk::QuadConfig cfg;
            if (*ireal) {
                cfg.rtol = rtol;
                std::cout << gk::integral_real_payload(rk, rlambda, rchi, rm, rnum, cfg).dump(2)
                          << "\n";
            } else {
                cfg.rtol = ctol;
                std::cout << gk::integral_complex_payload(ck_id, ck_c, cmode, cm_id, cm_c, cnum,
                                                          cfg)
                                 .dump(2)
                          << "\n";
            }
            return 0;
        }

        if (*table) {
            if (!treal && !tcplx && !tnon)
                throw std::invalid_argument("select at least one of --real/--complex/--nonsplit");
            even_weight_or_throw(tmax);
            auto rows = gk::constant_table(treal, tcplx, tnon, tmax);
            std::cout << gk::render_table(rows, tformat);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
