#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <superjack/disk_cache.hpp>
#include <superjack/error.hpp>
#include <superjack/json_io.hpp>
#include <superjack/verify.hpp>

namespace {

using namespace superjack;
using nlohmann::json;

constexpr std::uint64_t kBoundSeed = 20240719ULL;
constexpr int kBoundPoints = 50;

struct Options {
    int n = 0;
    int m = 0;
    int degree = 0;
    std::string lambda;
    std::string theta = "symbolic";
    std::string format = "json";
    std::string cache_dir;
};

// SUPERJACK_CACHE_DIR takes precedence over the flag; the default is a
// dot-directory in the working tree.
std::string resolve_cache_dir(const Options& opt) {
    if (const char* env = std::getenv("SUPERJACK_CACHE_DIR")) return env;
    if (!opt.cache_dir.empty()) return opt.cache_dir;
    return ".superjack-cache";
}

DiskCache& cache_for(const Options& opt) {
    static DiskCache cache{resolve_cache_dir(opt)};
    return cache;
}

void install_jack_store(const Options& opt) {
    DiskCache& cache = cache_for(opt);
    JackStore store;
    store.load = [&cache](const Partition& lambda) -> std::optional<SymFunc> {
        const auto payload = cache.load("jack|" + to_string(lambda) + "|monomial");
        if (!payload) return std::nullopt;
        return symfunc_from_json(*payload);
    };
    store.save = [&cache](const Partition& lambda, const SymFunc& f) {
        cache.store("jack|" + to_string(lambda) + "|monomial", to_json(f));
    };
    set_jack_store(std::move(store));
}

std::optional<Rational> parse_theta_option(const std::string& text) {
    if (text == "symbolic") return std::nullopt;
    return parse_rational(text);
}

SymFunc specialized(const SymFunc& f, const Rational& v, const ThetaGuard& guard) {
    SymFunc out(f.basis());
    for (const auto& [lambda, c] : f.terms()) out.add_term(lambda, ThetaFunction(c.specialize(v, guard)));
    return out;
}

MPoly specialized(const MPoly& p, const Rational& v, const ThetaGuard& guard) {
    MPoly out(p.n(), p.m());
    for (const auto& [e, c] : p.terms()) out.add_term(e, ThetaFunction(c.specialize(v, guard)));
    return out;
}

GramReport specialized(const GramReport& rep, const Rational& v, const ThetaGuard& guard) {
    GramReport out = rep;
    for (auto& row : out.matrix)
        for (auto& entry : row) entry = ThetaFunction(entry.specialize(v, guard));
    for (auto& entry : out.expected_diagonal) entry = ThetaFunction(entry.specialize(v, guard));
    return out;
}

void emit(const std::string& text) {
    std::fputs(text.c_str(), stdout);
    if (text.empty() || text.back() != '\n') std::fputc('\n', stdout);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_jack(const Options& opt) {
    install_jack_store(opt);
    const Partition lambda = parse_partition(opt.lambda);
    SymFunc f = jack(lambda);
    if (const auto v = parse_theta_option(opt.theta)) f = specialized(f, *v, ThetaGuard::nonpositive_excluded());
    emit(opt.format == "csv" ? to_csv(f) : to_json(f));
    return 0;
}

int run_superjack(const Options& opt, bool hermite) {
    install_jack_store(opt);
    const Partition lambda = parse_partition(opt.lambda);
    MPoly p(opt.n, opt.m);
    const std::string key = (hermite ? std::string("hermite|") : std::string("superjack|")) + to_string(lambda) +
                            "|" + std::to_string(opt.n) + "|" + std::to_string(opt.m);
    if (const auto payload = cache_for(opt).load(key)) {
        p = mpoly_from_json(*payload);
    } else {
        p = hermite ? super_hermite(lambda, opt.n, opt.m) : super_jack(lambda, opt.n, opt.m).poly;
        cache_for(opt).store(key, to_json(p));
    }
    if (const auto v = parse_theta_option(opt.theta))
        p = specialized(p, *v, ThetaGuard::fat_hook_excluded(opt.n, opt.m));
    emit(opt.format == "csv" ? to_csv(p) : to_json(p));
    return 0;
}

int run_gram(const Options& opt, bool hermite) {
    install_jack_store(opt);
    GramReport rep = hermite ? hermite_gram(opt.n, opt.m, opt.degree) : gram_matrix(opt.n, opt.m, opt.degree);
    if (const auto v = parse_theta_option(opt.theta))
        rep = specialized(rep, *v, ThetaGuard::fat_hook_excluded(opt.n, opt.m));
    emit(opt.format == "csv" ? to_csv(rep) : to_json(rep));
    return rep.pass ? 0 : 1;
}

int run_eigen(const Options& opt) {
    install_jack_store(opt);
    const Partition lambda = parse_partition(opt.lambda);
    const int rmax = opt.degree > 0 ? opt.degree : 3;
    const auto theta_value = parse_theta_option(opt.theta);
    json values = json::array();
    std::string csv = "r,value\n";
    for (int r = 1; r <= rmax; ++r) {
        ThetaFunction ev = trig_eigenvalue(lambda, r, opt.n, opt.m);
        if (theta_value)
            ev = ThetaFunction(ev.specialize(*theta_value, ThetaGuard::fat_hook_excluded(opt.n, opt.m)));
        values.push_back({{"r", r}, {"value", to_string(ev)}});
        csv += std::to_string(r) + "," + to_string(ev) + "\n";
    }
    const json out = {{"n", opt.n}, {"m", opt.m}, {"lambda", lambda.parts()}, {"eigenvalues", values}};
    emit(opt.format == "csv" ? csv : out.dump());
    return 0;
}

void require_symbolic(const Options& opt, const std::string& command) {
    if (opt.theta != "symbolic")
        throw error(errc::invalid_argument, command + " runs exactly over Q(theta); drop --theta");
}

int run_kernel_check(const Options& opt) {
    install_jack_store(opt);
    require_symbolic(opt, "kernel-check");
    json results = json::array();
    std::string csv = "lambda,in_fat_hook,vanishes,ok\n";
    bool pass = true;
    for (int d = 0; d <= opt.degree; ++d)
        for (const auto& lambda : enumerate_partitions(d)) {
            const bool inside = in_fat_hook(lambda, opt.n, opt.m);
            const bool vanishes = super_jack(lambda, opt.n, opt.m).poly.is_zero();
            const bool ok = inside != vanishes;
            pass = pass && ok;
            results.push_back(
                {{"lambda", lambda.parts()}, {"in_fat_hook", inside}, {"vanishes", vanishes}, {"ok", ok}});
            csv += "\"" + to_string(lambda) + "\"," + (inside ? "true" : "false") + "," +
                   (vanishes ? "true" : "false") + "," + (ok ? "true" : "false") + "\n";
        }
    const json out = {{"n", opt.n}, {"m", opt.m}, {"degree", opt.degree}, {"results", results}, {"pass", pass}};
    emit(opt.format == "csv" ? csv : out.dump());
    return pass ? 0 : 1;
}

int run_reproducing_check(const Options& opt) {
    install_jack_store(opt);
    require_symbolic(opt, "reproducing-check");
    json results = json::array();
    std::string csv = "lambda,ok\n";
    bool pass = true;
    for (int d = 0; d <= opt.degree; ++d)
        for (const auto& mu : enumerate_partitions(d, opt.n, opt.m)) {
            const bool ok = reproducing_check(mu, opt.n, opt.m);
            pass = pass && ok;
            results.push_back({{"lambda", mu.parts()}, {"ok", ok}});
            csv += "\"" + to_string(mu) + "\"," + (ok ? "true" : "false") + "\n";
        }
    const json out = {{"n", opt.n}, {"m", opt.m}, {"degree", opt.degree}, {"results", results}, {"pass", pass}};
    emit(opt.format == "csv" ? csv : out.dump());
    return pass ? 0 : 1;
}

int run_bound_check(const Options& opt) {
    install_jack_store(opt);
    const auto theta_value = parse_theta_option(opt.theta);
    if (!theta_value)
        throw error(errc::invalid_argument, "bound-check needs a rational --theta value (numeric mode)");
    json results = json::array();
    std::string csv = "lambda,worst_ratio,ok\n";
    bool pass = true;
    for (int d = 0; d <= opt.degree; ++d)
        for (const auto& lambda : enumerate_partitions(d, opt.n, opt.m)) {
            const BoundReport rep = bound_check(lambda, opt.n, opt.m, *theta_value, kBoundPoints, kBoundSeed);
            pass = pass && rep.pass;
            results.push_back(
                {{"lambda", lambda.parts()}, {"worst_ratio", format_double(rep.worst_ratio)}, {"ok", rep.pass}});
            csv += "\"" + to_string(lambda) + "\"," + format_double(rep.worst_ratio) + "," +
                   (rep.pass ? "true" : "false") + "\n";
        }
    const json out = {{"n", opt.n},         {"m", opt.m},             {"degree", opt.degree},
                      {"theta", opt.theta}, {"points", kBoundPoints}, {"results", results},
                      {"pass", pass}};
    emit(opt.format == "csv" ? csv : out.dump());
    return pass ? 0 : 1;
}

int run_verify_all(const Options& opt) {
    install_jack_store(opt);
    require_symbolic(opt, "verify-all");
    const std::vector<CheckResult> checks = verify_suite(opt.n, opt.m, opt.degree);
    bool pass = true;
    json rows = json::array();
    std::string csv = "check,pass,detail\n";
    for (const auto& c : checks) {
        pass = pass && c.pass;
        rows.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        csv += "\"" + c.name + "\"," + (c.pass ? "true" : "false") + ",\"" + c.detail + "\"\n";
    }
    const json out = {{"n", opt.n}, {"m", opt.m}, {"degree", opt.degree}, {"checks", rows}, {"pass", pass}};
    emit(opt.format == "csv" ? csv : out.dump());
    return pass ? 0 : 1;
}

int report_error(const char* kind, const std::string& message) {
    const json out = {{"error", kind}, {"message", message}};
    emit(out.dump());
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Jack / super-Jack / super-Hermite constructions and verifications"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd, bool with_nm, bool with_lambda, bool with_degree) {
        if (with_nm) {
            cmd->add_option("--n", opt.n, "x-variable count")->required();
            cmd->add_option("--m", opt.m, "y-variable count")->required();
        }
        if (with_lambda) cmd->add_option("--lambda", opt.lambda, "partition, e.g. 3,1,1")->required();
        if (with_degree) cmd->add_option("--degree", opt.degree, "degree / weight bound")->required();
        cmd->add_option("--theta", opt.theta, "symbolic (default) or a rational p/q");
        cmd->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--cache-dir", opt.cache_dir, "coefficient cache directory");
    };

    CLI::App* jack_cmd = app.add_subcommand("jack", "Jack symmetric function in the monomial basis");
    add_common(jack_cmd, false, true, false);
    CLI::App* superjack_cmd = app.add_subcommand("superjack", "super-Jack polynomial SP_lambda");
    add_common(superjack_cmd, true, true, false);
    CLI::App* hermite_cmd = app.add_subcommand("hermite", "super-Hermite polynomial SH_lambda");
    add_common(hermite_cmd, true, true, false);
    CLI::App* gram_cmd = app.add_subcommand("gram", "Gram matrix of SP_lambda under the bilinear form");
    add_common(gram_cmd, true, false, true);
    CLI::App* hgram_cmd = app.add_subcommand("hermite-gram", "Gram data for SH_lambda via the isometry");
    add_common(hgram_cmd, true, false, true);
    CLI::App* eigen_cmd = app.add_subcommand("eigen", "trigonometric integral eigenvalues on SP_lambda");
    add_common(eigen_cmd, true, true, false);
    eigen_cmd->add_option("--degree", opt.degree, "highest operator order (default 3)");
    CLI::App* kernel_cmd = app.add_subcommand("kernel-check", "phi kernel against fat-hook membership");
    add_common(kernel_cmd, true, false, true);
    CLI::App* repr_cmd = app.add_subcommand("reproducing-check", "reproducing kernel identity per degree");
    add_common(repr_cmd, true, false, true);
    CLI::App* bound_cmd = app.add_subcommand("bound-check", "numeric growth bound on SP_lambda");
    add_common(bound_cmd, true, false, true);
    CLI::App* verify_cmd = app.add_subcommand("verify-all", "run the full invariant suite");
    add_common(verify_cmd, true, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(jack_cmd)) return run_jack(opt);
        if (app.got_subcommand(superjack_cmd)) return run_superjack(opt, false);
        if (app.got_subcommand(hermite_cmd)) return run_superjack(opt, true);
        if (app.got_subcommand(gram_cmd)) return run_gram(opt, false);
        if (app.got_subcommand(hgram_cmd)) return run_gram(opt, true);
        if (app.got_subcommand(eigen_cmd)) return run_eigen(opt);
        if (app.got_subcommand(kernel_cmd)) return run_kernel_check(opt);
        if (app.got_subcommand(repr_cmd)) return run_reproducing_check(opt);
        if (app.got_subcommand(bound_cmd)) return run_bound_check(opt);
        if (app.got_subcommand(verify_cmd)) return run_verify_all(opt);
    } catch (const error& e) {
        report_error(e.code_name(), e.what());
        return e.code() == errc::invalid_argument ? 2 : 1;
    } catch (const std::exception& e) {
        return report_error("internal", e.what());
    }
    return 2;
}
