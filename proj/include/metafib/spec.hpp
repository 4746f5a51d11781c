#pragma once

// Recursion specifications for two families of nested ("meta-Fibonacci")
// recurrences.
//
// The homogeneous family sums k self-referencing terms,
//
//     T(n) = sum over p of  T(n - a_p - T(n - b_p)),   p = 1..k,
//
// and is written  homog:a1,b1,...,ak,bk;ic=v1,...,vr
//
// The conway family composes the sequence with itself k times,
//
//     T(n) = T(n - T^k(n-1)) + T(T^k(n-1)),
//
// and is written  conway:k;ic=v1,...,vr
//
// Named presets (case-insensitive): conolly, conway, q, v, mu, newman:r,
// grytczuk:k.  A JSON object form is accepted as well:
//
//     {"family":"homog","params":[0,1,0,2],"ic":[1,1]}
//     {"family":"conway","k":2,"ic":[1,1]}

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace metafib {

using Value = std::int64_t;
using Index = std::int64_t;
using Gen = std::int64_t;

enum class Family { Homogeneous, ConwayFamily };

/// One summand of a homogeneous recursion: T(n - offset - T(n - lag)).
/// Written as the pair "offset,lag" in the spec string.
struct SpotParam {
    Value offset = 0;
    Value lag = 0;
    bool operator==(const SpotParam&) const = default;
};

struct RecursionSpec {
    Family family = Family::Homogeneous;
    std::vector<SpotParam> spots;       // homogeneous summands; k = spots.size()
    int compose_depth = 1;              // conway-family composition depth k
    std::vector<Value> initial_conditions;

    /// Number of initial conditions (the r in T(1)..T(r)).
    Index r() const { return static_cast<Index>(initial_conditions.size()); }

    bool operator==(const RecursionSpec&) const = default;
};

/// Number of spot functions: k for the homogeneous family, always 2 for the
/// conway family (index spot n - T^k(n-1) and value spot T^k(n-1)).
inline int spot_count(const RecursionSpec& spec) {
    return spec.family == Family::Homogeneous ? static_cast<int>(spec.spots.size()) : 2;
}

inline void validate_spec(const RecursionSpec& spec) {
    if (spec.family == Family::Homogeneous) {
        if (spec.spots.empty())
            throw ValidationError("homogeneous recursion needs at least one offset,lag pair");
        for (const SpotParam& p : spec.spots)
            if (p.offset < 0 || p.lag < 0)
                throw ValidationError("homogeneous parameters must be nonnegative");
    } else if (spec.compose_depth < 1) {
        throw ValidationError("conway-family composition depth must be >= 1");
    }
    if (spec.initial_conditions.empty())
        throw ValidationError("initial conditions must not be empty");
    for (Value v : spec.initial_conditions)
        if (v < 1) throw ValidationError("initial conditions must be positive");
}

/// Canonical spec text; parse_spec(render_spec(s)) == s for any valid s.
inline std::string render_spec(const RecursionSpec& spec) {
    std::string out;
    if (spec.family == Family::Homogeneous) {
        out = "homog:";
        for (std::size_t i = 0; i < spec.spots.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(spec.spots[i].offset);
            out += ',';
            out += std::to_string(spec.spots[i].lag);
        }
    } else {
        out = "conway:" + std::to_string(spec.compose_depth);
    }
    out += ";ic=";
    for (std::size_t i = 0; i < spec.initial_conditions.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.initial_conditions[i]);
    }
    return out;
}

namespace detail {

inline std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

inline Value parse_int(std::string_view token, const char* what) {
    Value v = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || token.empty())
        throw ParseError(std::string("bad integer '") + std::string(token) + "' in " + what);
    return v;
}

inline std::vector<Value> parse_int_list(std::string_view text, const char* what) {
    std::vector<Value> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        out.push_back(parse_int(tok, what));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline std::vector<Value> ones(Index count) {
    return std::vector<Value>(static_cast<std::size_t>(count), 1);
}

inline RecursionSpec make_homog(std::vector<SpotParam> spots, std::vector<Value> ic) {
    RecursionSpec s;
    s.family = Family::Homogeneous;
    s.spots = std::move(spots);
    s.initial_conditions = std::move(ic);
    return s;
}

inline RecursionSpec make_conway(int depth, std::vector<Value> ic) {
    RecursionSpec s;
    s.family = Family::ConwayFamily;
    s.compose_depth = depth;
    s.initial_conditions = std::move(ic);
    return s;
}

// Splits "ic=v1,...,vr" off the tail of an explicit form.
inline std::vector<Value> parse_ic_clause(std::string_view tail) {
    if (!tail.starts_with("ic="))
        throw ParseError("expected 'ic=' clause, got '" + std::string(tail) + "'");
    std::vector<Value> ic = parse_int_list(tail.substr(3), "initial conditions");
    return ic;
}

inline RecursionSpec parse_json_spec(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON spec: ") + e.what());
    }
    try {
        const std::string family = j.at("family").get<std::string>();
        std::vector<Value> ic = j.at("ic").get<std::vector<Value>>();
        RecursionSpec s;
        if (family == "homog") {
            std::vector<Value> flat = j.at("params").get<std::vector<Value>>();
            if (flat.empty() || flat.size() % 2 != 0)
                throw ArityError("homogeneous parameter list must contain k > 0 offset,lag pairs");
            std::vector<SpotParam> spots;
            for (std::size_t i = 0; i < flat.size(); i += 2)
                spots.push_back({flat[i], flat[i + 1]});
            s = make_homog(std::move(spots), std::move(ic));
        } else if (family == "conway") {
            const int depth = j.value("k", 1);
            s = make_conway(depth, std::move(ic));
        } else {
            throw ParseError("unknown family '" + family + "'");
        }
        validate_spec(s);
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON spec: ") + e.what());
    }
}

}  // namespace detail

/// Parses a preset name, the explicit mini-language, or a JSON object.
inline RecursionSpec parse_spec(std::string_view text) {
    using namespace detail;

    // trim surrounding whitespace
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n' ||
                             text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty spec");
    if (text.front() == '{') return parse_json_spec(text);

    const std::string low = lower(text);
    const std::size_t colon = low.find(':');
    const std::string head = low.substr(0, colon);

    if (colon == std::string::npos) {
        if (head == "conolly") return make_homog({{0, 1}, {1, 2}}, {1, 1});
        if (head == "conway") return make_conway(1, {1, 1});
        if (head == "q") return make_homog({{0, 1}, {0, 2}}, {1, 1});
        if (head == "v") return make_homog({{0, 1}, {0, 4}}, {1, 1, 1, 1});
        if (head == "mu") return make_homog({{1, 2}, {2, 1}}, {1, 1, 1});
        throw ParseError("unknown preset '" + head + "'");
    }

    const std::string_view rest = std::string_view(low).substr(colon + 1);

    if (head == "newman") {
        const Value r = parse_int(rest, "newman preset parameter");
        if (r < 1) throw ValidationError("newman preset needs r >= 1");
        return make_conway(1, ones(r + 1));
    }
    if (head == "grytczuk") {
        const Value k = parse_int(rest, "grytczuk preset parameter");
        if (k < 1) throw ValidationError("grytczuk preset needs k >= 1");
        return make_conway(static_cast<int>(k), {1, 1});
    }

    const std::size_t semi = rest.find(';');
    if (semi == std::string_view::npos)
        throw ParseError("expected ';ic=' clause in '" + std::string(text) + "'");
    const std::string_view params_text = rest.substr(0, semi);
    std::vector<Value> ic = parse_ic_clause(rest.substr(semi + 1));

    RecursionSpec s;
    if (head == "homog") {
        std::vector<Value> flat = parse_int_list(params_text, "homogeneous parameters");
        if (flat.empty() || flat.size() % 2 != 0)
            throw ArityError("homogeneous parameter list must contain k > 0 offset,lag pairs, got " +
                             std::to_string(flat.size()) + " values");
        std::vector<SpotParam> spots;
        for (std::size_t i = 0; i < flat.size(); i += 2)
            spots.push_back({flat[i], flat[i + 1]});
        s = make_homog(std::move(spots), std::move(ic));
    } else if (head == "conway") {
        const Value k = parse_int(params_text, "conway-family depth");
        if (k < 1) throw ValidationError("conway-family depth must be >= 1");
        s = make_conway(static_cast<int>(k), std::move(ic));
    } else {
        throw ParseError("unknown spec family '" + head + "'");
    }
    validate_spec(s);
    return s;
}

}  // namespace metafib
