#include <swag/bench/config.hpp>

#include <array>
#include <utility>

namespace swag::bench {

namespace {

constexpr std::array<std::pair<std::string_view, Algo>, 5> kAlgos{{
    {"two-stacks", Algo::TwoStacks},
    {"two-stacks-lite", Algo::TwoStacksLite},
    {"daba", Algo::Daba},
    {"daba-lite", Algo::DabaLite},
    {"recalc", Algo::Recalc},
}};

constexpr std::array<std::pair<std::string_view, MonoidKind>, 5> kMonoids{{
    {"sum", MonoidKind::Sum},
    {"geomean", MonoidKind::GeoMean},
    {"bloom", MonoidKind::Bloom},
    {"maxcount", MonoidKind::MaxCount},
    {"concat", MonoidKind::Concat},
}};

constexpr std::array<std::pair<std::string_view, Mode>, 3> kModes{{
    {"static", Mode::Static},
    {"dynamic", Mode::Dynamic},
    {"event", Mode::Event},
}};

template <typename Table, typename E>
std::string_view name_of(const Table& table, E value) {
    for (const auto& [name, v] : table) {
        if (v == value) return name;
    }
    return "?";
}

template <typename Table>
auto lookup(const Table& table, std::string_view s, const char* what) {
    for (const auto& [name, v] : table) {
        if (name == s) return v;
    }
    std::string msg = std::string("unknown ") + what + " '" + std::string(s) + "' (expected one of:";
    for (const auto& entry : table) msg += " " + std::string(entry.first);
    throw UsageError(msg + ")");
}

} // namespace

std::string_view to_string(Algo a) { return name_of(kAlgos, a); }
std::string_view to_string(MonoidKind m) { return name_of(kMonoids, m); }
std::string_view to_string(Mode m) { return name_of(kModes, m); }

Algo parse_algo(std::string_view s) { return lookup(kAlgos, s, "algorithm"); }
MonoidKind parse_monoid(std::string_view s) { return lookup(kMonoids, s, "monoid"); }
Mode parse_mode(std::string_view s) { return lookup(kModes, s, "mode"); }

void ExperimentConfig::validate() const {
    if (rounds < 1) throw UsageError("--rounds must be at least 1");
    if (window_exp < 0 || window_exp > 30) throw UsageError("--window-exp must be in [0, 30]");
    if (tau_ms < 0) throw UsageError("--tau-ms must be nonnegative");
    if (verify_every < 1) throw UsageError("verification interval must be at least 1");
    if (!input_path.empty() && mode != Mode::Event) {
        throw UsageError("--input is only meaningful with --mode event");
    }
}

} // namespace swag::bench
