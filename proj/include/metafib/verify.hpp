#pragma once

// Executable checks for the published regularities of the individual
// sequences, plus the generic structure properties every slow spot induces.
// A check never throws on a falsified claim; it records the first failing
// index in its report.  Argument errors (horizon too small, bad parameters)
// do throw.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "genseq.hpp"

namespace metafib {

struct CheckFailure {
    Index index = 0;
    std::string expected;
    std::string actual;
};

/// Outcome of one suite of claims over a finite index range.
struct CheckReport {
    std::string name;
    Index range_lo = 1;
    Index range_hi = 0;
    bool passed = true;
    std::optional<CheckFailure> first_failure;
    std::vector<std::string> notes;

    void fail(Index index, std::string expected, std::string actual) {
        if (first_failure) return;
        passed = false;
        first_failure = CheckFailure{index, std::move(expected), std::move(actual)};
    }
    void note(std::string text) { notes.push_back(std::move(text)); }
};

inline std::string to_text(const CheckReport& rep) {
    std::string line = rep.passed ? "PASS " : "FAIL ";
    line += rep.name + " [" + std::to_string(rep.range_lo) + ", " + std::to_string(rep.range_hi) + "]";
    if (rep.first_failure)
        line += " at " + std::to_string(rep.first_failure->index) + ": expected " +
                rep.first_failure->expected + ", actual " + rep.first_failure->actual;
    for (const std::string& n : rep.notes) line += "\n  note: " + n;
    return line;
}

inline nlohmann::json to_json(const CheckReport& rep) {
    nlohmann::json j{{"name", rep.name},
                     {"range", {rep.range_lo, rep.range_hi}},
                     {"passed", rep.passed},
                     {"notes", rep.notes}};
    if (rep.first_failure)
        j["first_failure"] = {{"index", rep.first_failure->index},
                              {"expected", rep.first_failure->expected},
                              {"actual", rep.first_failure->actual}};
    else
        j["first_failure"] = nullptr;
    return j;
}

/// Exponent of the largest power of two dividing n.
inline int nu2(Value n) {
    if (n < 1) throw ArgumentError("nu2: argument must be positive");
    return std::countr_zero(static_cast<std::uint64_t>(n));
}

/// Fibonacci-type ladder E(n) = E(n-1) + E(n-step) with all-ones start;
/// 1-based with a zero sentinel.  step = 2 gives the Fibonacci numbers.
inline std::vector<Value> aux_sequence(int step, Index n_max) {
    if (step < 1) throw ArgumentError("aux_sequence: step must be >= 1");
    if (n_max < 1) throw ArgumentError("aux_sequence: n_max must be >= 1");
    std::vector<Value> e(static_cast<std::size_t>(n_max) + 1, 1);
    e[0] = 0;
    for (Index n = step + 1; n <= n_max; ++n)
        e[static_cast<std::size_t>(n)] = detail::checked_add(
            e[static_cast<std::size_t>(n - 1)], e[static_cast<std::size_t>(n - step)]);
    return e;
}

/// Every ladder entry not exceeding limit.
inline std::vector<Value> aux_sequence_upto(int step, Value limit) {
    if (step < 1) throw ArgumentError("aux_sequence_upto: step must be >= 1");
    if (limit < 1) throw ArgumentError("aux_sequence_upto: limit must be >= 1");
    std::vector<Value> e{0};
    for (int i = 0; i < step; ++i) e.push_back(1);
    while (true) {
        const std::size_t n = e.size();
        const Value next = detail::checked_add(e[n - 1], e[n - static_cast<std::size_t>(step)]);
        if (next > limit) break;
        e.push_back(next);
    }
    return e;
}

namespace detail {

inline std::optional<Index> first_non_slow(const std::vector<std::int64_t>& one_based, Index lo,
                                           Index hi) {
    for (Index n = lo + 1; n <= hi; ++n) {
        const std::int64_t d = one_based[static_cast<std::size_t>(n)] -
                               one_based[static_cast<std::size_t>(n - 1)];
        if (d < 0 || d > 1) return n;
    }
    return std::nullopt;
}

inline std::string interval_text(Index lo, Index hi) {
    return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

inline Index pow2(int g) { return Index{1} << g; }

}  // namespace detail

/// Conolly sequence (0,1,1,2): each value n >= 2 occurs exactly nu2(2n)
/// times, mother generations sit at [2^(g-1)+1, 2^g], and the sequence value
/// halves the index at powers of two.
inline CheckReport check_conolly(const SequenceTable& table, int gen_max) {
    using detail::pow2;
    if (gen_max < 2) throw ArgumentError("check_conolly: gen_max must be >= 2");
    const Index len = table.size();
    if (len < pow2(gen_max) + 1)
        throw ArgumentError("check_conolly: horizon " + std::to_string(len) +
                            " is below the required " + std::to_string(pow2(gen_max) + 1));
    CheckReport rep;
    rep.name = "conolly";
    rep.range_hi = len;
    if (table.terminated()) {
        rep.fail(*table.terminated_at, "no termination", "terminated");
        return rep;
    }
    if (auto bad = detail::first_non_slow(table.values, 1, len)) {
        rep.fail(*bad, "slow step", "difference outside {0, 1}");
        return rep;
    }

    // value frequencies; the two all-one initial conditions put value 1
    // outside the rule, so counting starts at 2
    const Value top = table[len];
    std::vector<Index> count(static_cast<std::size_t>(top) + 1, 0);
    for (Index n = 1; n <= len; ++n) ++count[static_cast<std::size_t>(table[n])];
    for (Value v = 2; v < top; ++v) {
        const Index expected = nu2(2 * v);
        if (count[static_cast<std::size_t>(v)] != expected)
            rep.fail(v, "value occurs " + std::to_string(expected) + " times",
                     std::to_string(count[static_cast<std::size_t>(v)]) + " occurrences");
    }
    rep.note("value 1 occurs " + std::to_string(count[1]) +
             " times; the initial conditions sit outside the frequency rule");
    rep.note("frequencies checked for values 2.." + std::to_string(top - 1));

    const GenerationPartition part = partition(generation_sequence(spot_trace(table, 1), 2));
    for (Gen g = 2; g <= gen_max; ++g) {
        const GenerationRecord* rec = part.find(g);
        if (!rec || !rec->complete || rec->fragmented || rec->alpha != pow2(static_cast<int>(g) - 1) + 1 ||
            rec->beta != pow2(static_cast<int>(g))) {
            rep.fail(g, "mother generation " +
                            detail::interval_text(pow2(static_cast<int>(g) - 1) + 1, pow2(static_cast<int>(g))),
                     rec ? detail::interval_text(rec->alpha, rec->beta) +
                               (rec->fragmented ? " fragmented" : "")
                         : "generation absent");
        }
    }

    for (int g = 1; g <= gen_max; ++g) {
        const Index n = pow2(g);
        if (table[n] != pow2(g - 1) || table[n - 1] != pow2(g - 1))
            rep.fail(n, "T(2^g) = T(2^g - 1) = " + std::to_string(pow2(g - 1)),
                     std::to_string(table[n]) + " / " + std::to_string(table[n - 1]));
    }
    return rep;
}

/// Conway sequence: octave starts map onto previous octave starts
/// (A(2^m) = 2^(m-1)), the value 2^(m-1) fills exactly the m indices ending
/// at 2^m, 2A(n) >= n with equality only at powers of two, and mother
/// generations start at 2^(g-1)+1.
inline CheckReport check_conway_octaves(const SequenceTable& table, int m_max) {
    using detail::pow2;
    if (m_max < 2) throw ArgumentError("check_conway_octaves: m_max must be >= 2");
    const Index len = table.size();
    if (len < pow2(m_max + 1))
        throw ArgumentError("check_conway_octaves: horizon " + std::to_string(len) +
                            " is below the required " + std::to_string(pow2(m_max + 1)));
    CheckReport rep;
    rep.name = "conway-octaves";
    rep.range_hi = len;
    if (table.terminated()) {
        rep.fail(*table.terminated_at, "no termination", "terminated");
        return rep;
    }
    if (auto bad = detail::first_non_slow(table.values, 1, len)) {
        rep.fail(*bad, "slow step", "difference outside {0, 1}");
        return rep;
    }

    for (int m = 1; m <= m_max; ++m)
        if (table[pow2(m)] != pow2(m - 1))
            rep.fail(pow2(m), "A(2^m) = " + std::to_string(pow2(m - 1)),
                     std::to_string(table[pow2(m)]));

    // the value 2^(m-1) occupies exactly [2^m - m + 1, 2^m]; with slow growth
    // the endpoints and their outer neighbours pin the whole run
    for (int m = 2; m <= m_max; ++m) {
        const Value v = pow2(m - 1);
        const Index lo = pow2(m) - m + 1;
        const Index hi = pow2(m);
        if (table[lo] != v || table[hi] != v || table[lo - 1] != v - 1 || table[hi + 1] != v + 1)
            rep.fail(hi, "value " + std::to_string(v) + " exactly on " + detail::interval_text(lo, hi),
                     "run boundary mismatch (" + std::to_string(table[lo - 1]) + "," +
                         std::to_string(table[lo]) + ".." + std::to_string(table[hi]) + "," +
                         std::to_string(table[hi + 1]) + ")");
    }

    for (Index n = 1; n <= len; ++n) {
        const Value d = 2 * table[n] - n;
        if (d < 0 || (d == 0 && !std::has_single_bit(static_cast<std::uint64_t>(n))))
            rep.fail(n, "2A(n) > n away from powers of two", "2A(n) - n = " + std::to_string(d));
    }

    const GenerationPartition part = partition(generation_sequence(spot_trace(table, 1), 2));
    for (Gen g = 1; g <= m_max + 1; ++g) {
        const GenerationRecord* rec = part.find(g);
        const Index want_alpha = g == 1 ? 1 : pow2(static_cast<int>(g) - 1) + 1;
        if (!rec || rec->alpha != want_alpha) {
            rep.fail(g, "mother generation starts at " + std::to_string(want_alpha),
                     rec ? std::to_string(rec->alpha) : "generation absent");
            continue;
        }
        if (g <= m_max && (!rec->complete || rec->fragmented || rec->beta != pow2(static_cast<int>(g))))
            rep.fail(g, "mother generation " + detail::interval_text(want_alpha, pow2(static_cast<int>(g))),
                     detail::interval_text(rec->alpha, rec->beta) +
                         (rec->fragmented ? " fragmented" : ""));
    }
    return rep;
}

namespace detail {

inline RecursionSpec newman_spec(int r) {
    RecursionSpec s;
    s.family = Family::ConwayFamily;
    s.compose_depth = 1;
    s.initial_conditions.assign(static_cast<std::size_t>(r) + 1, 1);
    return s;
}

inline RecursionSpec grytczuk_spec(int k) {
    RecursionSpec s;
    s.family = Family::ConwayFamily;
    s.compose_depth = k;
    s.initial_conditions = {1, 1};
    return s;
}

constexpr Index kMaxInternalHorizon = Index{1} << 24;

}  // namespace detail

/// Newman-Conway family f_r (r+1 all-one initial conditions): slow, pinned to
/// the step-r ladder by f(E_n) = f(E_n - 1) = E_(n-r), with mother
/// generations starting at E_(2r+g-2) + 1.
inline CheckReport check_newman_conway(int r, int gen_max) {
    if (r < 2) throw ArgumentError("check_newman_conway: r must be >= 2 (r = 1 is the conway preset)");
    if (gen_max < 2) throw ArgumentError("check_newman_conway: gen_max must be >= 2");
    const Index top_idx = 2 * static_cast<Index>(r) + gen_max - 1;
    const std::vector<Value> e = aux_sequence(r, top_idx);
    const Index horizon = e[static_cast<std::size_t>(top_idx)] + 2;
    if (horizon > detail::kMaxInternalHorizon)
        throw ArgumentError("check_newman_conway: gen_max " + std::to_string(gen_max) +
                            " needs horizon " + std::to_string(horizon) + "; reduce it");
    const SequenceTable table = evaluate(detail::newman_spec(r), horizon);
    CheckReport rep;
    rep.name = "newman-conway r=" + std::to_string(r);
    rep.range_hi = horizon;
    if (table.terminated()) {
        rep.fail(*table.terminated_at, "no termination", "terminated");
        return rep;
    }
    if (auto bad = detail::first_non_slow(table.values, 1, horizon)) {
        rep.fail(*bad, "slow step", "difference outside {0, 1}");
        return rep;
    }

    const std::vector<Value> ladder = aux_sequence_upto(r, horizon);
    const auto lsize = static_cast<Index>(ladder.size()) - 1;
    for (Index n = r + 1; n <= lsize; ++n) {
        const Value en = ladder[static_cast<std::size_t>(n)];
        const Value want = ladder[static_cast<std::size_t>(n - r)];
        if (table[en] != want || table[en - 1] != want)
            rep.fail(en, "f(E_n) = f(E_n - 1) = " + std::to_string(want),
                     std::to_string(table[en]) + " / " + std::to_string(table[en - 1]));
    }

    const GenerationPartition part =
        partition(generation_sequence(spot_trace(table, 1), table.spec.r()));
    for (Gen g = 2; g <= gen_max; ++g) {
        const Index want = e[static_cast<std::size_t>(2 * r + g - 2)] + 1;
        const GenerationRecord* rec = part.find(g);
        if (!rec || !rec->complete || rec->fragmented || rec->alpha != want)
            rep.fail(g, "mother generation starts at " + std::to_string(want),
                     rec ? std::to_string(rec->alpha) + (rec->fragmented ? " (fragmented)" : "")
                         : "generation absent");
    }
    if (const GenerationRecord* rec = part.find(2); rec && rec->alpha != r + 2)
        rep.fail(2, "second generation starts at r + 2 = " + std::to_string(r + 2),
                 std::to_string(rec->alpha));
    return rep;
}

/// Composition family with depth k >= 2 and two all-one initial conditions:
/// slow, the last occurrence of ladder value E_n is at index E_(n+1), the
/// k-fold composition collapses E_n - 1 to E_(n-k), and mother generations
/// start at E_(k+g-1) + 1.
inline CheckReport check_grytczuk(int k, int gen_max) {
    if (k < 2) throw ArgumentError("check_grytczuk: k must be >= 2 (k = 1 is the conway preset)");
    if (gen_max < 2) throw ArgumentError("check_grytczuk: gen_max must be >= 2");
    const Index top_idx = static_cast<Index>(k) + gen_max;
    const std::vector<Value> e = aux_sequence(k, top_idx);
    const Index horizon = e[static_cast<std::size_t>(top_idx)] + 2;
    if (horizon > detail::kMaxInternalHorizon)
        throw ArgumentError("check_grytczuk: gen_max " + std::to_string(gen_max) + " needs horizon " +
                            std::to_string(horizon) + "; reduce it");
    const SequenceTable table = evaluate(detail::grytczuk_spec(k), horizon);
    CheckReport rep;
    rep.name = "grytczuk k=" + std::to_string(k);
    rep.range_hi = horizon;
    if (table.terminated()) {
        rep.fail(*table.terminated_at, "no termination", "terminated");
        return rep;
    }
    if (auto bad = detail::first_non_slow(table.values, 1, horizon)) {
        rep.fail(*bad, "slow step", "difference outside {0, 1}");
        return rep;
    }

    const std::vector<Value> ladder = aux_sequence_upto(k, horizon);
    const auto lsize = static_cast<Index>(ladder.size()) - 1;
    for (Index n = k + 2; n <= lsize; ++n) {
        const Value at = ladder[static_cast<std::size_t>(n)];
        const Value want = ladder[static_cast<std::size_t>(n - 1)];
        if (table[at] != want)
            rep.fail(at, "A(E_n) = " + std::to_string(want), std::to_string(table[at]));
        if (at + 1 <= horizon && table[at + 1] != want + 1)
            rep.fail(at + 1, "value " + std::to_string(want) + " ends at index " + std::to_string(at),
                     "still " + std::to_string(table[at + 1]) + " one past it");
    }
    for (Index n = k + 1; n <= lsize; ++n) {
        const Value at = ladder[static_cast<std::size_t>(n)] - 1;
        const Value want = ladder[static_cast<std::size_t>(n - k)];
        const Index got = compose(table, at, k);
        if (got != want)
            rep.fail(at, "k-fold composition of E_n - 1 gives " + std::to_string(want),
                     std::to_string(got));
    }

    const GenerationPartition part = partition(generation_sequence(spot_trace(table, 1), 2));
    for (Gen g = 2; g <= gen_max; ++g) {
        const Index want = e[static_cast<std::size_t>(k + g - 1)] + 1;
        const GenerationRecord* rec = part.find(g);
        if (!rec || !rec->complete || rec->fragmented || rec->alpha != want)
            rep.fail(g, "mother generation starts at " + std::to_string(want),
                     rec ? std::to_string(rec->alpha) + (rec->fragmented ? " (fragmented)" : "")
                         : "generation absent");
    }
    return rep;
}

namespace detail {

// First 50 values of the (1,2,2,1) sequence with three all-one initial
// conditions.
inline constexpr Value kMuOpening[50] = {
    1,  1,  1,  2,  2,  2,  3,  3,  4,  4,  4,  5,  5,  6,  7,  7,  7,  8,  8,  8,
    9,  9,  10, 11, 11, 11, 13, 12, 14, 13, 14, 15, 15, 15, 16, 16, 16, 17, 17, 18,
    19, 19, 19, 21, 20, 22, 21, 22, 24, 24};

}  // namespace detail

/// mu sequence (1,2,2,1): tabulated opening, powers of two hit exactly three
/// times consecutively with pinned neighbours, and a slow mother structure
/// with generation g on [2^(g-1)+g, 2^g+g].
inline CheckReport check_mu(Index n_max) {
    using detail::pow2;
    if (n_max < 50) throw ArgumentError("check_mu: n_max must be >= 50");
    const SequenceTable table = evaluate(parse_spec("mu"), n_max);
    CheckReport rep;
    rep.name = "mu";
    rep.range_hi = table.size();
    if (table.terminated()) {
        rep.fail(*table.terminated_at, "mu defined at every index", "terminated");
        return rep;
    }
    const Index len = table.size();

    for (Index n = 1; n <= 50; ++n)
        if (table[n] != detail::kMuOpening[static_cast<std::size_t>(n - 1)])
            rep.fail(n, std::to_string(detail::kMuOpening[static_cast<std::size_t>(n - 1)]),
                     std::to_string(table[n]));

    Value top = 0;
    for (Index n = 1; n <= len; ++n) top = std::max(top, table[n]);
    std::vector<Index> count(static_cast<std::size_t>(top) + 2, 0);
    std::vector<Index> first(static_cast<std::size_t>(top) + 2, 0);
    std::vector<Index> last(static_cast<std::size_t>(top) + 2, 0);
    for (Index n = 1; n <= len; ++n) {
        const auto v = static_cast<std::size_t>(table[n]);
        if (!first[v]) first[v] = n;
        last[v] = n;
        ++count[v];
    }

    // powers of two with two full generations of margin before the horizon
    int contained_powers = 0;
    for (int j = 0; pow2(j + 2) <= len; ++j) {
        const Value v = pow2(j);
        const auto vi = static_cast<std::size_t>(v);
        ++contained_powers;
        if (count[vi] != 3 || last[vi] - first[vi] != 2) {
            rep.fail(v, "power of two hit exactly three times consecutively",
                     std::to_string(count[vi]) + " occurrences on " +
                         detail::interval_text(first[vi], last[vi]));
            continue;
        }
        if (j == 0) continue;  // nothing precedes the all-one opening run
        const Index s = first[vi];
        const Index ed = last[vi];
        if (table[s - 1] != v - 1 || table[s - 2] != v - 1)
            rep.fail(s, "at least two copies of " + std::to_string(v - 1) + " right before the run",
                     std::to_string(table[s - 2]) + ", " + std::to_string(table[s - 1]));
        const auto wi = static_cast<std::size_t>(v + 1);
        if (count[wi] != 2 || first[wi] != ed + 1 || last[wi] != ed + 2)
            rep.fail(ed + 1, "exactly two copies of " + std::to_string(v + 1) + " right after the run",
                     std::to_string(count[wi]) + " occurrences on " +
                         detail::interval_text(first[wi], last[wi]));
    }
    rep.note("power-of-two runs checked for " + std::to_string(contained_powers) +
             " powers inside the horizon");

    const GenerationSequence mother = generation_sequence(spot_trace(table, 1), 3);
    if (auto bad = detail::first_non_slow(mother.values, 1, len)) {
        rep.fail(*bad, "slow mother step", "difference outside {0, 1}");
        return rep;
    }
    const GenerationPartition part = partition(mother);
    for (const GenerationRecord& rec : part.records) {
        if (rec.g < 3 || !rec.complete) continue;
        const int g = static_cast<int>(rec.g);
        const Index want_alpha = pow2(g - 1) + g;
        const Index want_beta = pow2(g) + g;
        if (rec.alpha != want_alpha || rec.beta != want_beta || rec.fragmented) {
            rep.fail(rec.g, "mother generation " + detail::interval_text(want_alpha, want_beta),
                     detail::interval_text(rec.alpha, rec.beta) +
                         (rec.fragmented ? " fragmented" : ""));
            continue;
        }
        const Value at_start = pow2(g - 2) + 1;
        const Value at_end = pow2(g - 1);
        if (table[rec.alpha] != at_start || first[static_cast<std::size_t>(at_start)] != rec.alpha)
            rep.fail(rec.alpha, "generation starts at the first occurrence of " + std::to_string(at_start),
                     "value " + std::to_string(table[rec.alpha]) + ", first occurrence at " +
                         std::to_string(first[static_cast<std::size_t>(at_start)]));
        if (table[rec.beta] != at_end || last[static_cast<std::size_t>(at_end)] != rec.beta)
            rep.fail(rec.beta, "generation ends at the last occurrence of " + std::to_string(at_end),
                     "value " + std::to_string(table[rec.beta]) + ", last occurrence at " +
                         std::to_string(last[static_cast<std::size_t>(at_end)]));
    }
    rep.note("regularities hold over the first " + std::to_string(len) +
             " terms; nothing is claimed past the horizon");
    return rep;
}

/// Generic structure properties of each slow spot: the induced generation
/// sequence is slow, its blocks are abutting intervals with pinned starts,
/// the spot maps block endpoints onto the previous block's endpoints, and
/// each start is the first index mapped onto the previous start.  Spots that
/// are not slow-growing are reported as skipped, not failed.
inline std::vector<CheckReport> structure_reports(const SequenceTable& table,
                                                  const std::string& label) {
    std::vector<CheckReport> out;
    const Index r = table.spec.r();
    const Index len = table.size();
    for (int p = 1; p <= spot_count(table.spec); ++p) {
        const std::string base = label + ".spot" + std::to_string(p);
        const SpotTrace trace = spot_trace(table, p);
        if (trace.values.size() < 2) {
            CheckReport skip;
            skip.name = base;
            skip.range_hi = len;
            skip.note("trace shorter than two entries; nothing to check");
            out.push_back(std::move(skip));
            continue;
        }
        if (!is_slow(trace)) {
            CheckReport skip;
            skip.name = base;
            skip.range_hi = len;
            skip.note("spot sequence is not slow-growing; structure properties are vacuous here");
            out.push_back(std::move(skip));
            continue;
        }

        const GenerationSequence m = generation_sequence(trace, r);
        const GenerationPartition part = partition(m);

        CheckReport slow_rep;
        slow_rep.name = base + ".generation-slow";
        slow_rep.range_hi = len;
        if (auto bad = detail::first_non_slow(m.values, 1, len))
            slow_rep.fail(*bad, "slow step", "difference outside {0, 1}");
        out.push_back(std::move(slow_rep));

        CheckReport iv;
        iv.name = base + ".interval-structure";
        iv.range_hi = len;
        bool gap_free = true;
        for (std::size_t i = 0; i < part.records.size(); ++i)
            if (part.records[i].g != static_cast<Gen>(i) + 1) {
                iv.fail(static_cast<Index>(i) + 1, "generation numbers form an initial interval",
                        "gap before " + std::to_string(part.records[i].g));
                gap_free = false;
            }
        if (!gap_free) {
            out.push_back(std::move(iv));
            continue;  // block indexing below relies on gap-free numbering
        }
        const auto& recs = part.records;
        const auto alpha = [&](Gen g) { return recs[static_cast<std::size_t>(g) - 1].alpha; };
        const auto beta = [&](Gen g) { return recs[static_cast<std::size_t>(g) - 1].beta; };
        const Gen gmax = recs.empty() ? 0 : recs.back().g;

        if (alpha(1) != 1) iv.fail(1, "generation 1 starts at 1", std::to_string(alpha(1)));
        if (gmax >= 2 && alpha(2) != r + 1)
            iv.fail(2, "generation 2 starts at r + 1 = " + std::to_string(r + 1),
                    std::to_string(alpha(2)));
        for (const GenerationRecord& rec : recs) {
            if (!rec.complete) continue;
            if (rec.fragmented)
                iv.fail(rec.g, "interval generation", "fragmented generation");
            if (rec.g + 1 <= gmax && rec.beta != alpha(rec.g + 1) - 1)
                iv.fail(rec.g, "consecutive generations abut",
                        "beta = " + std::to_string(rec.beta) + ", next alpha = " +
                            std::to_string(alpha(rec.g + 1)));
        }
        out.push_back(std::move(iv));

        // The spot lands inside generation 1 from the start of generation 2,
        // but only from generation 3 onward must it hit the exact start.
        CheckReport em;
        em.name = base + ".endpoint-mapping";
        em.range_hi = len;
        for (Gen g = 2; g + 1 <= gmax; ++g)
            if (trace(alpha(g + 1)) != alpha(g))
                em.fail(alpha(g + 1), "spot maps the start onto " + std::to_string(alpha(g)),
                        std::to_string(trace(alpha(g + 1))));
        for (Gen g = 1; g + 1 <= gmax; ++g) {
            if (!recs[static_cast<std::size_t>(g)].complete) break;
            if (trace(beta(g + 1)) != beta(g))
                em.fail(beta(g + 1), "spot maps the end onto " + std::to_string(beta(g)),
                        std::to_string(trace(beta(g + 1))));
        }
        out.push_back(std::move(em));

        CheckReport mini;
        mini.name = base + ".start-minimality";
        mini.range_hi = len;
        std::vector<Index> first_hit(static_cast<std::size_t>(len) + 1, 0);
        for (Index n = r + 1; n <= len; ++n) {
            const auto s = static_cast<std::size_t>(trace(n));
            if (!first_hit[s]) first_hit[s] = n;
        }
        for (Gen g = 2; g + 1 <= gmax; ++g)
            if (first_hit[static_cast<std::size_t>(alpha(g))] != alpha(g + 1))
                mini.fail(alpha(g), "first index mapped onto this start is " +
                                        std::to_string(alpha(g + 1)),
                          std::to_string(first_hit[static_cast<std::size_t>(alpha(g))]));
        out.push_back(std::move(mini));
    }
    return out;
}

}  // namespace metafib
