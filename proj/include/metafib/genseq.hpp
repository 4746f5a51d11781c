#pragma once

// Spot sequences and the generation structure they induce.
//
// For spot p, the generation sequence M_p follows the spot recursion
// M_p(n) = M_p(S_p(n)) + 1 with M_p(n) = 1 over the initial conditions.
// Grouping indices by generation number yields a partition whose blocks are
// intervals exactly when no generation is fragmented.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "engine.hpp"

namespace metafib {

/// Values of one spot function over (r, computed_len].
struct SpotTrace {
    int spot = 1;               // p, 1-based
    Index first = 1;            // first index carrying a value (r + 1)
    std::vector<Index> values;  // values[i] = S_p(first + i), each in [1, n-1]

    bool empty() const { return values.empty(); }
    Index last() const { return first + static_cast<Index>(values.size()) - 1; }
    Index operator()(Index n) const { return values[static_cast<std::size_t>(n - first)]; }
};

/// Generation numbers M_p(1..size()), 1-based with a zero sentinel.
struct GenerationSequence {
    int spot = 1;
    std::vector<Gen> values{0};

    Index size() const { return static_cast<Index>(values.size()) - 1; }
    Gen operator()(Index n) const { return values[static_cast<std::size_t>(n)]; }
};

struct GenerationRecord {
    Gen g = 0;
    Index alpha = 0;          // first index with generation number g
    Index beta = 0;           // last observed index with generation number g
    bool fragmented = false;  // member set != [alpha, beta]
    bool complete = false;    // false for the horizon-truncated last generation
};

struct GenerationPartition {
    std::vector<GenerationRecord> records;  // ascending g
    bool interval_structure = true;         // no complete generation fragmented

    const GenerationRecord* find(Gen g) const {
        auto it = std::lower_bound(records.begin(), records.end(), g,
                                   [](const GenerationRecord& r, Gen x) { return r.g < x; });
        return (it != records.end() && it->g == g) ? &*it : nullptr;
    }
};

/// True iff the segment is nondecreasing with successive differences 0 or 1.
inline bool is_slow(std::span<const std::int64_t> segment) {
    if (segment.size() < 2)
        throw ArgumentError("is_slow: range must contain at least two entries");
    for (std::size_t i = 1; i < segment.size(); ++i) {
        const std::int64_t d = segment[i] - segment[i - 1];
        if (d < 0 || d > 1) return false;
    }
    return true;
}

/// Inclusive 1-based window [lo, hi] of a sentinel-fronted array.
inline bool is_slow(const std::vector<std::int64_t>& one_based, Index lo, Index hi) {
    const Index len = static_cast<Index>(one_based.size()) - 1;
    if (lo < 1 || hi > len || lo >= hi)
        throw ArgumentError("is_slow: bad range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] for length " + std::to_string(len));
    return is_slow(std::span<const std::int64_t>(one_based.data() + lo,
                                                 static_cast<std::size_t>(hi - lo + 1)));
}

inline bool is_slow(const SequenceTable& t) { return is_slow(t.values, 1, t.size()); }
inline bool is_slow(const SpotTrace& tr) { return is_slow(std::span<const Index>(tr.values)); }
inline bool is_slow(const GenerationSequence& m) { return is_slow(m.values, 1, m.size()); }

inline SpotTrace spot_trace(const SequenceTable& t, int spot) {
    const int count = spot_count(t.spec);
    if (spot < 1 || spot > count)
        throw ArgumentError("spot_trace: spot " + std::to_string(spot) + " outside [1, " +
                            std::to_string(count) + "]");
    const Index r = t.spec.r();
    const Index len = t.size();
    SpotTrace tr;
    tr.spot = spot;
    tr.first = r + 1;
    if (len <= r) return tr;
    tr.values.reserve(static_cast<std::size_t>(len - r));
    if (t.spec.family == Family::Homogeneous) {
        const SpotParam p = t.spec.spots[static_cast<std::size_t>(spot - 1)];
        for (Index n = r + 1; n <= len; ++n)
            tr.values.push_back(n - p.offset - t[n - p.lag]);
    } else {
        const int depth = t.spec.compose_depth;
        for (Index n = r + 1; n <= len; ++n) {
            Index x = n - 1;  // intermediates validated during evaluation
            for (int j = 0; j < depth; ++j) x = t[x];
            tr.values.push_back(spot == 1 ? n - x : x);
        }
    }
    return tr;
}

/// One forward pass; each term needs a single lookup of an earlier term.
inline GenerationSequence generation_sequence(const SpotTrace& trace, Index r) {
    if (r < 1 || trace.first != r + 1)
        throw ArgumentError("generation_sequence: trace does not start right after the " +
                            std::to_string(r) + " initial conditions");
    GenerationSequence m;
    m.spot = trace.spot;
    const Index len = trace.empty() ? r : trace.last();
    m.values.assign(static_cast<std::size_t>(len) + 1, 1);
    m.values[0] = 0;
    for (Index n = r + 1; n <= len; ++n)
        m.values[static_cast<std::size_t>(n)] = m.values[static_cast<std::size_t>(trace(n))] + 1;
    return m;
}

/// Groups indices by generation number.  Fragmentation is decided by an exact
/// membership count; the last generation present is marked incomplete since
/// its true end may lie past the horizon, and it is left out of the
/// interval-structure verdict.
inline GenerationPartition partition(const GenerationSequence& gen) {
    const Index len = gen.size();
    if (len < 1) throw ArgumentError("partition: empty generation sequence");
    Gen gmax = 0;
    for (Index n = 1; n <= len; ++n) gmax = std::max(gmax, gen(n));
    std::vector<Index> alpha(static_cast<std::size_t>(gmax) + 1, 0);
    std::vector<Index> beta(static_cast<std::size_t>(gmax) + 1, 0);
    std::vector<Index> count(static_cast<std::size_t>(gmax) + 1, 0);
    for (Index n = 1; n <= len; ++n) {
        const auto g = static_cast<std::size_t>(gen(n));
        if (!alpha[g]) alpha[g] = n;
        beta[g] = n;
        ++count[g];
    }
    GenerationPartition part;
    for (Gen g = 1; g <= gmax; ++g) {
        const auto i = static_cast<std::size_t>(g);
        if (!count[i]) continue;
        GenerationRecord rec;
        rec.g = g;
        rec.alpha = alpha[i];
        rec.beta = beta[i];
        rec.fragmented = (beta[i] - alpha[i] + 1 != count[i]);
        rec.complete = (g != gmax);
        if (rec.complete && rec.fragmented) part.interval_structure = false;
        part.records.push_back(rec);
    }
    return part;
}

}  // namespace metafib
