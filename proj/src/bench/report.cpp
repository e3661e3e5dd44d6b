#include <swag/bench/report.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swag::bench {

std::int64_t percentile(std::span<const std::int64_t> samples, double p) {
    if (samples.empty()) throw std::invalid_argument("percentile of an empty sample set");
    if (p < 0.0 || p > 100.0) throw std::invalid_argument("percentile outside [0, 100]");
    const auto n = samples.size();
    auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * static_cast<double>(n)));
    rank = std::clamp<std::size_t>(rank, 1, n);
    std::vector<std::int64_t> scratch(samples.begin(), samples.end());
    auto nth = scratch.begin() + static_cast<std::ptrdiff_t>(rank - 1);
    std::nth_element(scratch.begin(), nth, scratch.end());
    return *nth;
}

LatencySummary summarize(std::span<const std::int64_t> samples) {
    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    return LatencySummary{*lo, percentile(samples, 50.0), percentile(samples, 99.0),
                          percentile(samples, 99.99), *hi};
}

std::optional<LatencySummary> OpReport::latency_summary() const {
    if (latency_ns.size() <= warmup_rounds) return std::nullopt;
    return summarize(std::span(latency_ns).subspan(warmup_rounds));
}

void write_summary_header(std::ostream& os) {
    os << "algo,monoid,n,ops_per_sec,avg_ins_combines,max_ins_combines,"
          "avg_evi_combines,max_evi_combines\n";
}

void write_summary_row(std::ostream& os, const OpReport& r) {
    os << r.algo << ',' << r.monoid << ',' << r.n << ',' << static_cast<std::uint64_t>(r.ops_per_sec())
       << ',' << r.insert.average() << ',' << r.insert.max << ',' << r.evict.average() << ','
       << r.evict.max << '\n';
}

namespace {
const char* op_name(OpKind k) {
    switch (k) {
    case OpKind::Insert: return "insert";
    case OpKind::Evict: return "evict";
    case OpKind::Query: return "query";
    }
    return "?";
}
} // namespace

void write_samples_csv(std::ostream& os, const OpReport& r) {
    if (!r.op_samples.empty()) {
        os << "round,op,latency_ns\n";
        for (const auto& s : r.op_samples) {
            os << s.round << ',' << op_name(s.op) << ',' << s.latency_ns << '\n';
        }
        return;
    }
    os << "round,latency_ns\n";
    for (std::size_t i = 0; i < r.latency_ns.size(); ++i) os << i << ',' << r.latency_ns[i] << '\n';
}

void write_human_summary(std::ostream& os, const OpReport& r) {
    os << r.algo << '/' << r.monoid << " n=" << r.n << " rounds=" << r.rounds
       << " ops/s=" << static_cast<std::uint64_t>(r.ops_per_sec())
       << " combines(avg/max) ins=" << r.insert.average() << '/' << r.insert.max
       << " evi=" << r.evict.average() << '/' << r.evict.max
       << " qry=" << r.query.average() << '/' << r.query.max;
    if (auto l = r.latency_summary()) {
        os << " latency_ns min=" << l->min << " p50=" << l->median << " p99=" << l->p99
           << " p99.99=" << l->p9999 << " max=" << l->max;
    }
    if (r.verified_checkpoints > 0) os << " verified=" << r.verified_checkpoints;
    os << '\n';
}

} // namespace swag::bench
