#pragma once

// Memoized evaluation of a RecursionSpec.
//
// Terms are computed in increasing n.  For n past the initial conditions,
// every lookup index and every spot value must land in [1, n-1]; the first
// violation stops evaluation and is recorded in terminated_at (termination is
// data, not an error).  For the conway family the composition T^k(n-1) is
// unrolled into k successive lookups, each intermediate result held to the
// same [1, n-1] rule; an out-of-range lookup argument in the homogeneous
// family (n - b_p outside [1, n-1]) terminates identically, since the spot
// value is undefined without it.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "spec.hpp"

namespace metafib {

/// Computed values T(1..size()).  values is 1-based with a zero sentinel in
/// slot 0 so that values[n] is T(n).
struct SequenceTable {
    RecursionSpec spec;
    std::vector<Value> values{0};
    std::optional<Index> terminated_at;

    Index size() const { return static_cast<Index>(values.size()) - 1; }
    bool terminated() const { return terminated_at.has_value(); }

    Value operator[](Index n) const { return values[static_cast<std::size_t>(n)]; }

    Value value(Index n) const {
        if (n < 1 || n > size())
            throw ArgumentError("value: index " + std::to_string(n) + " outside computed range [1, " +
                                std::to_string(size()) + "]");
        return values[static_cast<std::size_t>(n)];
    }

    bool operator==(const SequenceTable&) const = default;
};

namespace detail {

inline Value checked_add(Value a, Value b) {
    Value out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("64-bit overflow while summing sequence values");
    return out;
}

/// Appends terms up to n_max, or stops early and records terminated_at.
inline void advance(SequenceTable& t, Index n_max) {
    auto& v = t.values;
    v.reserve(static_cast<std::size_t>(n_max) + 1);
    if (t.spec.family == Family::Homogeneous) {
        const auto& spots = t.spec.spots;
        for (Index n = t.size() + 1; n <= n_max; ++n) {
            Value sum = 0;
            for (const SpotParam& p : spots) {
                const Index look = n - p.lag;
                if (look < 1 || look >= n) { t.terminated_at = n; return; }
                const Index s = n - p.offset - v[static_cast<std::size_t>(look)];
                if (s < 1 || s >= n) { t.terminated_at = n; return; }
                sum = checked_add(sum, v[static_cast<std::size_t>(s)]);
            }
            v.push_back(sum);
        }
    } else {
        const int depth = t.spec.compose_depth;
        for (Index n = t.size() + 1; n <= n_max; ++n) {
            Index x = n - 1;
            bool dead = false;
            for (int j = 0; j < depth; ++j) {
                if (x < 1 || x >= n) { dead = true; break; }
                x = v[static_cast<std::size_t>(x)];
            }
            if (dead || x < 1 || x >= n) { t.terminated_at = n; return; }
            const Index s1 = n - x;  // in [1, n-1] because x is
            v.push_back(checked_add(v[static_cast<std::size_t>(s1)], v[static_cast<std::size_t>(x)]));
        }
    }
}

}  // namespace detail

inline SequenceTable evaluate(const RecursionSpec& spec, Index n_max) {
    validate_spec(spec);
    if (n_max < spec.r())
        throw ArgumentError("evaluate: n_max = " + std::to_string(n_max) + " must cover the " +
                            std::to_string(spec.r()) + " initial conditions");
    SequenceTable t;
    t.spec = spec;
    t.values.reserve(static_cast<std::size_t>(n_max) + 1);
    t.values.insert(t.values.end(), spec.initial_conditions.begin(), spec.initial_conditions.end());
    detail::advance(t, n_max);
    return t;
}

/// depth-fold composition T(T(...T(n)...)).  Every value used as a lookup
/// index must lie inside the computed range; the final value is returned
/// unchecked.  depth = 0 is the identity.
inline Index compose(const SequenceTable& t, Index n, int depth) {
    if (depth < 0) throw ArgumentError("compose: depth must be >= 0");
    Index x = n;
    const int hops = depth > 0 ? depth : 1;  // depth 0 still validates n itself
    for (int j = 0; j < hops; ++j) {
        if (x < 1 || x > t.size())
            throw RangeError("compose: value " + std::to_string(x) + " at depth " + std::to_string(j) +
                             " is outside the computed range [1, " + std::to_string(t.size()) + "]");
        if (j < depth) x = t.values[static_cast<std::size_t>(x)];
    }
    return x;
}

/// Continues evaluation; the prefix is identical to the input table.
inline SequenceTable extend(const SequenceTable& t, Index new_n_max) {
    if (t.terminated())
        throw StateError("extend: table terminated at index " + std::to_string(*t.terminated_at));
    if (new_n_max <= t.size())
        throw ArgumentError("extend: new_n_max = " + std::to_string(new_n_max) +
                            " does not exceed the computed length " + std::to_string(t.size()));
    SequenceTable out = t;
    detail::advance(out, new_n_max);
    return out;
}

}  // namespace metafib
