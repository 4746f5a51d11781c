#pragma once

// Q-sequence start-point study: mother generation starts versus the Pinn
// block starts, exact percentage deviations at both, and detection of the
// indices where large oscillations of T(n) - n/2 resume after a quiet
// stretch.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "genseq.hpp"

namespace metafib {

/// Exact percentage num/den, already scaled by 100.  Rendering rounds
/// half-up at two decimals; nothing upstream ever goes through floating
/// point.
struct Percent {
    std::int64_t num = 0;  // nonnegative
    std::int64_t den = 1;

    /// Hundredths of a percent, rounded half-up.
    std::int64_t hundredths() const {
        const __int128 h = (static_cast<__int128>(num) * 200 + den) / (static_cast<__int128>(den) * 2);
        return static_cast<std::int64_t>(h);
    }

    std::string two_decimals() const {
        const std::int64_t h = hundredths();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld.%02lld", static_cast<long long>(h / 100),
                      static_cast<long long>(h % 100));
        return buf;
    }

    bool operator==(const Percent& o) const {
        return static_cast<__int128>(num) * o.den == static_cast<__int128>(o.num) * den;
    }
};

/// Knobs of the transition detector.  The detector has no published
/// algorithm to follow, so the parameters are explicit and always reported
/// alongside results.
struct TransitionParams {
    Index window = 64;              // minimum quiet-run length
    double quiet_threshold = 0.004; // |2T(n) - n| / n below this counts as quiet
    double spike_factor = 0.02;     // first later index above this is the transition
};

namespace detail {

inline std::uint64_t isqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > x) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace detail

/// Start point of Pinn generation g: the eleven block starts found by eye,
/// then floor(2^(g-1/2)) in exact integer arithmetic.
inline Index pinn_start(Gen g) {
    if (g < 1) throw ArgumentError("pinn_start: generation must be >= 1");
    static constexpr std::array<Index, 11> kByEye = {1, 3, 6, 12, 23, 48, 96, 192, 384, 768, 1522};
    if (g <= 11) return kByEye[static_cast<std::size_t>(g - 1)];
    if (g > 31) throw ArgumentError("pinn_start: generation " + std::to_string(g) +
                                    " exceeds the 64-bit range of the formula");
    return static_cast<Index>(detail::isqrt(std::uint64_t{1} << (2 * static_cast<unsigned>(g) - 1)));
}

/// Absolute percent change |T(idx) - T(idx-1)| / T(idx-1) * 100, exact.
inline Percent deviation(const SequenceTable& t, Index idx) {
    if (idx < 2 || idx > t.size())
        throw ArgumentError("deviation: index " + std::to_string(idx) + " outside [2, " +
                            std::to_string(t.size()) + "]");
    const Value prev = t[idx - 1];
    const Value cur = t[idx];
    return Percent{100 * std::llabs(cur - prev), prev};
}

/// Quiet stretches are maximal runs of length >= window on which
/// |2T(n) - n| / n stays below quiet_threshold; for each one, the first
/// later index pushing past spike_factor is emitted.  Output is sorted and
/// deduplicated.
inline std::vector<Index> detect_transitions(const SequenceTable& t,
                                             const TransitionParams& params = {}) {
    if (params.window < 2 || params.quiet_threshold <= 0 || params.spike_factor <= 0)
        throw ArgumentError("detect_transitions: window must be >= 2 and thresholds positive");
    const Index len = t.size();
    if (params.window > len)
        throw ArgumentError("detect_transitions: window " + std::to_string(params.window) +
                            " exceeds table length " + std::to_string(len));
    const auto rel_dev = [&](Index n) {
        const __int128 d = static_cast<__int128>(2) * t[n] - n;
        const double mag = static_cast<double>(d < 0 ? -d : d);
        return mag / static_cast<double>(n);
    };

    std::vector<std::pair<Index, Index>> quiet_runs;
    Index run_start = 0;
    for (Index n = 1; n <= len + 1; ++n) {
        const bool quiet = n <= len && rel_dev(n) < params.quiet_threshold;
        if (quiet && !run_start) run_start = n;
        if (!quiet && run_start) {
            if (n - run_start >= params.window) quiet_runs.emplace_back(run_start, n - 1);
            run_start = 0;
        }
    }

    std::vector<Index> out;
    for (const auto& [lo, hi] : quiet_runs) {
        for (Index n = hi + 1; n <= len; ++n) {
            if (rel_dev(n) > params.spike_factor) {
                if (out.empty() || out.back() != n) out.push_back(n);
                break;
            }
        }
    }
    return out;
}

struct ComparisonRow {
    Gen g = 0;
    Index alpha_maternal = 0;
    Index alpha_pinn = 0;
    std::optional<Percent> dev_maternal;  // absent for g = 1 (no predecessor)
    std::optional<Percent> dev_pinn;
    std::optional<Index> transition;      // nearest detected transition, if any
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;  // ascending g
    TransitionParams params;
    Index horizon = 0;
};

/// Assembles, per generation, the mother start (spot 1), the Pinn start,
/// both deviations, and the nearest detected transition between the previous
/// start and the generation's end.
inline ComparisonTable build_comparison(const SequenceTable& t, Gen g_max,
                                        const TransitionParams& params = {}) {
    if (g_max < 1) throw ArgumentError("build_comparison: g_max must be >= 1");
    const GenerationPartition part =
        partition(generation_sequence(spot_trace(t, 1), t.spec.r()));

    ComparisonTable table;
    table.params = params;
    table.horizon = t.size();
    const std::vector<Index> transitions = detect_transitions(t, params);

    for (Gen g = 1; g <= g_max; ++g) {
        const GenerationRecord* rec = part.find(g);
        if (!rec)
            throw ArgumentError("build_comparison: generation " + std::to_string(g) +
                                " is not reached within horizon " + std::to_string(t.size()) +
                                "; extend the table");
        ComparisonRow row;
        row.g = g;
        row.alpha_maternal = rec->alpha;
        row.alpha_pinn = pinn_start(g);
        if (row.alpha_pinn > t.size())
            throw ArgumentError("build_comparison: horizon " + std::to_string(t.size()) +
                                " is below the Pinn start " + std::to_string(row.alpha_pinn) +
                                " for generation " + std::to_string(g));
        if (row.alpha_maternal >= 2) row.dev_maternal = deviation(t, row.alpha_maternal);
        if (row.alpha_pinn >= 2) row.dev_pinn = deviation(t, row.alpha_pinn);

        const Index lo = g == 1 ? 0 : part.find(g - 1)->alpha;
        const Index hi = rec->beta;
        std::optional<Index> best;
        for (Index tr : transitions) {
            if (tr <= lo || tr > hi) continue;
            if (!best || std::llabs(tr - rec->alpha) < std::llabs(*best - rec->alpha)) best = tr;
        }
        row.transition = best;
        table.rows.push_back(row);
    }
    return table;
}

inline std::string to_csv(const ComparisonTable& table) {
    std::string out = "g,alpha_maternal,alpha_pinn,dev_maternal_pct,dev_pinn_pct,transition\n";
    for (const ComparisonRow& r : table.rows) {
        out += std::to_string(r.g) + ',' + std::to_string(r.alpha_maternal) + ',' +
               std::to_string(r.alpha_pinn) + ',';
        if (r.dev_maternal) out += r.dev_maternal->two_decimals();
        out += ',';
        if (r.dev_pinn) out += r.dev_pinn->two_decimals();
        out += ',';
        if (r.transition) out += std::to_string(*r.transition);
        out += '\n';
    }
    return out;
}

inline std::string to_text(const ComparisonTable& table) {
    std::ostringstream os;
    os << "# horizon=" << table.horizon << " window=" << table.params.window
       << " quiet=" << table.params.quiet_threshold << " spike=" << table.params.spike_factor
       << "\n";
    char line[160];
    std::snprintf(line, sizeof line, "%4s %16s %12s %14s %10s %12s\n", "g", "alpha_maternal",
                  "alpha_pinn", "dev_maternal%", "dev_pinn%", "transition");
    os << line;
    for (const ComparisonRow& r : table.rows) {
        std::snprintf(line, sizeof line, "%4lld %16lld %12lld %14s %10s %12s\n",
                      static_cast<long long>(r.g), static_cast<long long>(r.alpha_maternal),
                      static_cast<long long>(r.alpha_pinn),
                      r.dev_maternal ? r.dev_maternal->two_decimals().c_str() : "-",
                      r.dev_pinn ? r.dev_pinn->two_decimals().c_str() : "-",
                      r.transition ? std::to_string(*r.transition).c_str() : "-");
        os << line;
    }
    return os.str();
}

}  // namespace metafib
