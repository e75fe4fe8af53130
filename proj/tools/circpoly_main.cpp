// Batch front end: ingest a weight, build the polynomial systems, run
// verification suites, and write deterministic CSV/JSON tables.

#include "CLI11.hpp"

#include <complex>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "circpoly/bridge.hpp"
#include "circpoly/moments.hpp"
#include "circpoly/opuc.hpp"
#include "circpoly/otp.hpp"
#include "circpoly/report.hpp"
#include "circpoly/verify.hpp"
#include "circpoly/weights.hpp"
#include "circpoly/zeros.hpp"

namespace fs = std::filesystem;
using namespace circpoly;

namespace {

struct Options {
    std::string preset;
    std::string weight_file;
    int n_max = 6;
    double tol = 1e-9;
    std::size_t quad_cap = std::size_t{1} << 20;
    std::uint64_t seed = 12345;
    std::string out_dir = ".";
    std::string format = "csv";
};

WeightSpec load_weight(const Options& opt) {
    if (!opt.weight_file.empty()) {
        std::ifstream f(opt.weight_file);
        if (!f) throw std::runtime_error("cannot read weight file: " + opt.weight_file);
        std::ostringstream ss;
        ss << f.rdbuf();
        return validate_weight(weight_from_json(ss.str()), opt.quad_cap);
    }
    return validate_weight(preset_weight(opt.preset.empty() ? "lebesgue" : opt.preset),
                           opt.quad_cap);
}

std::string write_table(const Options& opt, const std::string& stem, const Table& t,
                        const std::vector<std::pair<std::string, Cell>>& meta) {
    fs::create_directories(opt.out_dir);
    const std::string path =
        (fs::path(opt.out_dir) / (stem + "." + opt.format)).string();
    write_text_file(path, opt.format == "json" ? render_json(t, meta) : render_csv(t));
    return path;
}

double quad_tol(const Options& opt) { return std::min(1e-13, opt.tol); }

int cmd_moments(const Options& opt) {
    const WeightSpec w = load_weight(opt);
    const MomentTable m = trig_moments(w, opt.n_max, quad_tol(opt), opt.quad_cap);
    Table t;
    t.columns = {"k", "re", "im"};
    for (int k = 0; k <= m.n_max; ++k) {
        const cplx c = m.moment(k);
        t.rows.push_back({int_cell(k), num_cell(c.real()), num_cell(c.imag())});
    }
    const std::string path = write_table(opt, "moments", t,
                                         {{"weight", text_cell(w.name)},
                                          {"n_max", int_cell(opt.n_max)}});
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int cmd_verify(const Options& opt, const std::string& suite) {
    const WeightSpec w = load_weight(opt);
    RunParams params;
    params.n_max = opt.n_max;
    params.tol = opt.tol;
    params.quad_cap = opt.quad_cap;
    params.seed = opt.seed;
    const SuiteResult res = run_suite(suite, w, params);

    Table t;
    t.columns = {"name", "residual", "threshold", "direction", "pass", "note"};
    for (const CheckResult& c : res.checks) {
        t.rows.push_back({text_cell(c.name), num_cell(c.residual), num_cell(c.threshold),
                          text_cell(c.lower_bound ? "lower" : "upper"),
                          bool_cell(c.pass), text_cell(c.note)});
    }
    const std::string path = write_table(opt, "verify_" + suite, t,
                                         {{"suite", text_cell(res.suite)},
                                          {"weight", text_cell(res.weight_name)},
                                          {"n_max", int_cell(opt.n_max)},
                                          {"tol", num_cell(opt.tol)},
                                          {"seed", int_cell(static_cast<long long>(opt.seed))},
                                          {"pass", bool_cell(res.pass)}});
    for (const CheckResult& c : res.checks)
        std::printf("[%s] %s residual=%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    fmt17(c.residual).c_str());
    std::printf("wrote %s\n", path.c_str());
    if (!res.pass) {
        for (const CheckResult& c : res.checks)
            if (!c.pass) std::fprintf(stderr, "contract violated: %s\n", c.name.c_str());
        return 1;
    }
    return 0;
}

int cmd_tabulate(const Options& opt, const std::string& what) {
    const WeightSpec w = load_weight(opt);
    std::string path;
    if (what == "otp") {
        const MomentTable m = trig_moments(w, 2 * opt.n_max, quad_tol(opt), opt.quad_cap);
        Table t;
        t.columns = {"family", "n", "a", "b", "beta"};
        for (OtpFamily fam : {OtpFamily::first, OtpFamily::second}) {
            const OtpSystem sys = gram_schmidt(m, fam, opt.n_max);
            const char* label = fam == OtpFamily::first ? "first" : "second";
            for (int n = 0; n <= opt.n_max; ++n) {
                const auto nn = static_cast<std::size_t>(n);
                t.rows.push_back({text_cell(label), int_cell(n), num_cell(sys.a[nn]),
                                  num_cell(sys.b[nn]), num_cell(sys.beta[nn])});
            }
        }
        path = write_table(opt, "otp", t, {{"weight", text_cell(w.name)}});
    } else if (what == "opuc") {
        const MomentTable m = trig_moments(w, opt.n_max, quad_tol(opt), opt.quad_cap);
        const OpucSystem sys = build_opuc(m, opt.n_max);
        Table t;
        // kappa_next pairs alpha_n with the norm constant it produces.
        t.columns = {"n", "alpha_re", "alpha_im", "alpha_abs", "kappa_next"};
        for (int n = 0; n < opt.n_max; ++n) {
            const auto nn = static_cast<std::size_t>(n);
            t.rows.push_back({int_cell(n), num_cell(sys.alpha[nn].real()),
                              num_cell(sys.alpha[nn].imag()),
                              num_cell(std::abs(sys.alpha[nn])),
                              num_cell(sys.kappa[nn + 1])});
        }
        path = write_table(opt, "opuc", t, {{"weight", text_cell(w.name)}});
    } else if (what == "zeros") {
        const MomentTable m = trig_moments(w, 2 * opt.n_max + 2, quad_tol(opt), opt.quad_cap);
        const OtpSystem sys = gram_schmidt(m, OtpFamily::first, opt.n_max);
        Table t;
        t.columns = {"polynomial", "n", "j", "angle", "residual"};
        for (int n = 1; n <= opt.n_max; ++n) {
            for (OtpKind kind : {OtpKind::sigma, OtpKind::pi}) {
                const ZeroSet zs =
                    trig_zeros(kind == OtpKind::sigma ? sys.sigma(n) : sys.pi(n));
                const char* label = kind == OtpKind::sigma ? "sigma" : "pi";
                for (std::size_t j = 0; j < zs.angles.size(); ++j)
                    t.rows.push_back({text_cell(label), int_cell(n),
                                      int_cell(static_cast<long long>(j)),
                                      num_cell(zs.angles[j]), num_cell(zs.residuals[j])});
            }
        }
        path = write_table(opt, "zeros", t, {{"weight", text_cell(w.name)}});
    } else {
        throw std::invalid_argument("unknown table: " + what);
    }
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal trigonometric / circle polynomial toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // shared options may follow the subcommand name
    app.set_config("--config", "", "read options from a config file (flags win)");

    Options opt;
    auto* preset = app.add_option("--preset", opt.preset,
                                  "built-in weight: lebesgue|cosine|asymmetric|expcos|bernstein");
    auto* wfile = app.add_option("--weight", opt.weight_file, "weight spec JSON file");
    preset->excludes(wfile);
    wfile->excludes(preset);
    app.add_option("--n-max", opt.n_max, "order bound (default 6)");
    app.add_option("--tol", opt.tol, "residual contract, in (0, 1e-3] (default 1e-9)");
    app.add_option("--quad-cap", opt.quad_cap, "quadrature node cap (default 2^20)");
    app.add_option("--seed", opt.seed, "sample-point seed (default 12345)");
    app.add_option("--out", opt.out_dir, "output directory (default .)");
    app.add_option("--format", opt.format, "csv|json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* sub_moments = app.add_subcommand("moments", "write the moment table");
    auto* sub_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    sub_verify->add_option("suite", suite, "bridge|cd|recurrence|rhp|zeros|asymptotics|all")
        ->check(CLI::IsMember({"bridge", "cd", "recurrence", "rhp", "zeros",
                               "asymptotics", "all"}));
    auto* sub_tab = app.add_subcommand("tabulate", "write coefficient/zero tables");
    std::string what = "otp";
    sub_tab->add_option("what", what, "otp|opuc|zeros")
        ->check(CLI::IsMember({"otp", "opuc", "zeros"}));

    CLI11_PARSE(app, argc, argv);

    if (opt.n_max < 1) {
        std::fprintf(stderr, "error: --n-max must be >= 1\n");
        return 2;
    }
    if (!(opt.tol > 0.0) || opt.tol > 1e-3) {
        std::fprintf(stderr, "error: --tol must lie in (0, 1e-3]\n");
        return 2;
    }

    try {
        if (sub_moments->parsed()) return cmd_moments(opt);
        if (sub_verify->parsed()) return cmd_verify(opt, suite);
        if (sub_tab->parsed()) return cmd_tabulate(opt, what);
        std::fprintf(stderr, "error: no subcommand\n");
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
