#include <swag/bench/records.hpp>

#include <swag/bench/config.hpp>

#include <charconv>
#include <string>
#include <string_view>

namespace swag::bench {

std::vector<std::uint64_t> gen_synthetic(std::uint64_t seed, std::size_t count) {
    SyntheticSource src(seed);
    std::vector<std::uint64_t> out(count);
    for (auto& v : out) v = src.next();
    return out;
}

std::vector<TimestampedRecord> gen_synthetic_records(std::uint64_t seed, std::size_t count) {
    SyntheticSource src(seed);
    std::vector<TimestampedRecord> out;
    out.reserve(count);
    std::int64_t t = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t r = src.next();
        if (i > 0) {
            std::int64_t gap = 5 + static_cast<std::int64_t>(r % 11);
            if ((r >> 20) % 10'000 == 0) gap = 1'000 + static_cast<std::int64_t>((r >> 40) % 59'001);
            t += gap;
        }
        out.push_back({t, 1.0 + static_cast<double>(src.next() % 100'000) / 100.0});
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_line(std::size_t line, const std::string& why) {
    throw InputError("input line " + std::to_string(line) + ": " + why);
}

} // namespace

std::vector<TimestampedRecord> read_records_csv(std::istream& in, bool has_header) {
    std::vector<TimestampedRecord> out;
    std::string line;
    std::size_t lineno = 0;
    if (has_header && std::getline(in, line)) ++lineno;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view text = trim(line);
        if (text.empty()) continue;
        const auto comma = text.find(',');
        if (comma == std::string_view::npos) bad_line(lineno, "expected 'timestamp_ms,value'");
        const std::string_view ts_text = trim(text.substr(0, comma));
        const std::string_view val_text = trim(text.substr(comma + 1));

        TimestampedRecord rec;
        auto [tp, tec] = std::from_chars(ts_text.data(), ts_text.data() + ts_text.size(),
                                         rec.timestamp_ms);
        if (tec != std::errc{} || tp != ts_text.data() + ts_text.size()) {
            bad_line(lineno, "timestamp '" + std::string(ts_text) + "' is not an integer");
        }
        auto [vp, vec] = std::from_chars(val_text.data(), val_text.data() + val_text.size(),
                                         rec.value);
        if (vec != std::errc{} || vp != val_text.data() + val_text.size()) {
            bad_line(lineno, "value '" + std::string(val_text) + "' is not a number");
        }
        if (!out.empty() && rec.timestamp_ms < out.back().timestamp_ms) {
            bad_line(lineno, "timestamp " + std::to_string(rec.timestamp_ms)
                                 + " is older than the previous record");
        }
        out.push_back(rec);
    }
    return out;
}

} // namespace swag::bench
