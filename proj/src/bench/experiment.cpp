#include <swag/bench/experiment.hpp>
#include <swag/bench/runner.hpp>
#include <swag/daba.hpp>
#include <swag/daba_lite.hpp>
#include <swag/engine.hpp>
#include <swag/monoids.hpp>
#include <swag/two_stacks.hpp>
#include <swag/two_stacks_lite.hpp>

#include <fstream>
#include <span>

namespace swag::bench {

namespace {

template <template <Monoid> class EngineT, Monoid M>
OpReport run_mode(const ExperimentConfig& cfg, const M& m,
                  const std::vector<TimestampedRecord>& records) {
    RunOptions opt;
    opt.measure = cfg.measure;
    opt.window = cfg.window_size();
    opt.tau_ms = cfg.tau_ms;
    opt.rounds = cfg.rounds;
    opt.verify = cfg.verify;
    opt.verify_every = cfg.verify_every;
    opt.per_op = cfg.per_op;
    switch (cfg.mode) {
    case Mode::Static: return run_static<EngineT>(m, opt, cfg.seed);
    case Mode::Dynamic: return run_dynamic<EngineT>(m, opt, cfg.seed);
    case Mode::Event: return run_event<EngineT>(m, opt, std::span(records));
    }
    throw UsageError("unknown mode");
}

template <Monoid M>
OpReport run_algo(const ExperimentConfig& cfg, const M& m,
                  const std::vector<TimestampedRecord>& records) {
    switch (cfg.algo) {
    case Algo::TwoStacks: return run_mode<TwoStacks>(cfg, m, records);
    case Algo::TwoStacksLite: return run_mode<TwoStacksLite>(cfg, m, records);
    case Algo::Daba: return run_mode<Daba>(cfg, m, records);
    case Algo::DabaLite: return run_mode<DabaLite>(cfg, m, records);
    case Algo::Recalc: return run_mode<RecalcOracle>(cfg, m, records);
    }
    throw UsageError("unknown algorithm");
}

} // namespace

OpReport run_experiment(const ExperimentConfig& cfg, const std::vector<TimestampedRecord>& records) {
    cfg.validate();
    OpReport r = [&] {
        switch (cfg.monoid) {
        case MonoidKind::Sum: return run_algo(cfg, SumMonoid{}, records);
        case MonoidKind::GeoMean: return run_algo(cfg, GeoMeanMonoid{}, records);
        case MonoidKind::Bloom: return run_algo(cfg, BloomMonoid{}, records);
        case MonoidKind::MaxCount: return run_algo(cfg, MaxCountMonoid<>{}, records);
        case MonoidKind::Concat: return run_algo(cfg, ConcatMonoid{}, records);
        }
        throw UsageError("unknown monoid");
    }();
    r.algo = to_string(cfg.algo);
    r.monoid = to_string(cfg.monoid);
    return r;
}

std::vector<TimestampedRecord> load_records(const ExperimentConfig& cfg) {
    if (cfg.mode != Mode::Event) return {};
    if (cfg.input_path.empty()) return gen_synthetic_records(cfg.seed, cfg.rounds);
    std::ifstream in(cfg.input_path);
    if (!in) throw InputError("cannot open input file '" + cfg.input_path + "'");
    return read_records_csv(in, cfg.input_has_header);
}

} // namespace swag::bench
