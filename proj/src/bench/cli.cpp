#include <swag/bench/experiment.hpp>
#include <swag/errors.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace swag::bench {

namespace {

enum ExitStatus : int { kOk = 0, kFailure = 1, kUsage = 2, kInput = 3, kVerification = 4 };

// Default throughput runs target about 10^7 operations.
std::uint64_t default_rounds(Mode mode, Measure measure) {
    if (measure == Measure::Latency) return 1'000'000;
    constexpr std::uint64_t kOps = 10'000'000;
    return mode == Mode::Dynamic ? kOps * 2 / 3 : kOps / 3 + 1;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot open output file '" + path + "'");
    return f;
}

void write_combine_profile(std::ostream& os, const OpReport& r) {
    const bool with_evictions = !r.round_evictions.empty();
    os << (with_evictions ? "round,combines,evictions\n" : "round,combines\n");
    for (std::size_t i = 0; i < r.round_combines.size(); ++i) {
        os << i << ',' << r.round_combines[i];
        if (with_evictions) os << ',' << r.round_evictions[i];
        os << '\n';
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sliding-window aggregation benchmark"};
    app.name("swagbench");

    ExperimentConfig cfg;
    std::string algo = std::string(to_string(cfg.algo));
    std::string monoid = std::string(to_string(cfg.monoid));
    std::string mode = std::string(to_string(cfg.mode));
    std::string profile_path;
    bool throughput = false;
    bool latency = false;

    app.add_option("--algo", algo, "two-stacks | two-stacks-lite | daba | daba-lite | recalc")
        ->capture_default_str();
    app.add_option("--monoid", monoid, "sum | geomean | bloom | maxcount | concat")
        ->capture_default_str();
    app.add_option("--mode", mode, "static | dynamic | event")->capture_default_str();
    auto* wexp = app.add_option("--window-exp", cfg.window_exp, "window size n = 2^k (static, dynamic)")
                     ->capture_default_str();
    auto* tau = app.add_option("--tau-ms", cfg.tau_ms, "event-time horizon in milliseconds (event)")
                    ->capture_default_str();
    auto* rounds = app.add_option("--rounds", cfg.rounds, "rounds to run");
    app.add_option("--seed", cfg.seed, "seed for synthetic data")->capture_default_str();
    app.add_option("--out", cfg.out_path,
                   "latency: per-round samples CSV; throughput: summary CSV");
    app.add_option("--profile", profile_path, "per-round combine counts CSV (latency mode)");
    app.add_flag("--verify", cfg.verify, "check queries against a recalculating oracle");
    app.add_option("--verify-every", cfg.verify_every, "rounds between verification checkpoints")
        ->capture_default_str();
    auto* lat = app.add_flag("--latency", latency, "sample latency per round (default)");
    auto* thr = app.add_flag("--throughput", throughput, "time the whole run only");
    lat->excludes(thr);
    app.add_flag("--per-op", cfg.per_op, "additionally sample latency of each operation");
    auto* input = app.add_option("--input", cfg.input_path, "timestamp_ms,value CSV (event mode)");
    app.add_flag("--input-header", cfg.input_has_header, "skip the first line of --input");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "swagbench: " << e.what() << '\n';
        return kUsage;
    }

    cfg.algo = parse_algo(algo);
    cfg.monoid = parse_monoid(monoid);
    cfg.mode = parse_mode(mode);
    cfg.measure = throughput ? Measure::Throughput : Measure::Latency;
    if (cfg.mode == Mode::Event && wexp->count() > 0) {
        throw UsageError("--window-exp does not apply to event mode; use --tau-ms");
    }
    if (cfg.mode != Mode::Event && (tau->count() > 0 || input->count() > 0)) {
        throw UsageError("--tau-ms and --input apply only to event mode");
    }
    if (rounds->count() == 0) cfg.rounds = default_rounds(cfg.mode, cfg.measure);
    cfg.validate();

    const auto records = load_records(cfg);
    const OpReport report = run_experiment(cfg, records);

    if (!cfg.out_path.empty()) {
        auto f = open_output(cfg.out_path);
        if (cfg.measure == Measure::Latency) {
            write_samples_csv(f, report);
        } else {
            write_summary_header(f);
            write_summary_row(f, report);
        }
    }
    if (!profile_path.empty()) {
        auto f = open_output(profile_path);
        write_combine_profile(f, report);
    }
    write_summary_header(out);
    write_summary_row(out, report);
    write_human_summary(err, report);
    return kOk;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        return run(argc, argv, out, err);
    } catch (const UsageError& e) {
        err << "swagbench: usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConfigurationError& e) {
        err << "swagbench: usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        err << "swagbench: input error: " << e.what() << '\n';
        return kInput;
    } catch (const VerificationError& e) {
        err << "swagbench: verification failed: " << e.what() << '\n';
        return kVerification;
    } catch (const std::exception& e) {
        err << "swagbench: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace swag::bench
