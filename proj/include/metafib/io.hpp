#pragma once

// Persistence and export.
//
// Cache file layout (all integers little-endian):
//
//   offset  0   magic "MFIB"
//   offset  4   u32 format version (currently 1)
//   offset  8   32-byte SHA-256 of the canonical spec text
//   offset 40   u64 computed length
//   offset 48   u8 terminated flag
//   offset 49   computed length x u64 values
//
// Loading against a different spec returns an absent result (never someone
// else's data); a structurally broken file is a FormatError.

#include <array>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>
#include <openssl/evp.h>

#include "engine.hpp"
#include "genseq.hpp"

namespace metafib {

using Digest = std::array<std::uint8_t, 32>;

/// SHA-256 of the canonical spec rendering.
inline Digest spec_digest(const RecursionSpec& spec) {
    const std::string text = render_spec(spec);
    Digest d{};
    unsigned int out_len = 0;
    EVP_Digest(text.data(), text.size(), d.data(), &out_len, EVP_sha256(), nullptr);
    return d;
}

inline std::string digest_hex(const Digest& d) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (std::uint8_t b : d) {
        out += kHex[b >> 4];
        out += kHex[b & 0xf];
    }
    return out;
}

namespace detail {

constexpr char kMagic[4] = {'M', 'F', 'I', 'B'};
constexpr std::uint32_t kFormatVersion = 1;
constexpr std::size_t kHeaderSize = 4 + 4 + 32 + 8 + 1;

inline void put_u32le(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out += static_cast<char>((v >> (8 * i)) & 0xff);
}

inline void put_u64le(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out += static_cast<char>((v >> (8 * i)) & 0xff);
}

inline std::uint32_t get_u32le(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

inline std::uint64_t get_u64le(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

}  // namespace detail

inline void save_table(const SequenceTable& t, const std::filesystem::path& path) {
    std::string blob;
    blob.reserve(detail::kHeaderSize + static_cast<std::size_t>(t.size()) * 8);
    blob.append(detail::kMagic, 4);
    detail::put_u32le(blob, detail::kFormatVersion);
    const Digest d = spec_digest(t.spec);
    blob.append(reinterpret_cast<const char*>(d.data()), d.size());
    detail::put_u64le(blob, static_cast<std::uint64_t>(t.size()));
    blob += static_cast<char>(t.terminated() ? 1 : 0);
    for (Index n = 1; n <= t.size(); ++n)
        detail::put_u64le(blob, static_cast<std::uint64_t>(t[n]));

    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("save_table: cannot open '" + path.string() + "' for writing");
    os.write(blob.data(), static_cast<std::streamsize>(blob.size()));
    os.flush();
    if (!os) throw IoError("save_table: write to '" + path.string() + "' failed");
}

/// Absent result on a missing file or a digest that does not match the spec;
/// FormatError on a structurally broken file.
inline std::optional<SequenceTable> load_table(const RecursionSpec& spec,
                                               const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return std::nullopt;  // cache miss
    std::string blob((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    if (blob.size() < detail::kHeaderSize)
        throw FormatError("load_table: '" + path.string() + "' is truncated");
    const auto* p = reinterpret_cast<const unsigned char*>(blob.data());
    if (std::memcmp(p, detail::kMagic, 4) != 0)
        throw FormatError("load_table: '" + path.string() + "' has a bad magic number");
    const std::uint32_t version = detail::get_u32le(p + 4);
    if (version != detail::kFormatVersion)
        throw FormatError("load_table: unsupported format version " + std::to_string(version));
    const std::uint64_t count = detail::get_u64le(p + 40);
    const bool terminated = p[48] != 0;
    if (blob.size() != detail::kHeaderSize + count * 8)
        throw FormatError("load_table: payload of '" + path.string() +
                          "' does not match its declared length");

    Digest stored{};
    std::memcpy(stored.data(), p + 8, 32);
    if (stored != spec_digest(spec)) return std::nullopt;

    SequenceTable t;
    t.spec = spec;
    t.values.reserve(count + 1);
    for (std::uint64_t i = 0; i < count; ++i)
        t.values.push_back(
            static_cast<Value>(detail::get_u64le(p + detail::kHeaderSize + i * 8)));
    if (terminated) t.terminated_at = static_cast<Index>(count) + 1;

    const auto r = static_cast<std::size_t>(spec.r());
    if (count < r || !std::equal(spec.initial_conditions.begin(), spec.initial_conditions.end(),
                                 t.values.begin() + 1))
        throw FormatError("load_table: payload of '" + path.string() +
                          "' is inconsistent with the spec's initial conditions");
    return t;
}

enum class SeriesKind { values, trend_deviation, generation_marks };
enum class ExportFormat { csv, json };

/// Writes one data series.  values -> (n, T(n)); trend_deviation ->
/// (n, 2T(n) - n); generation_marks -> (g, alpha, beta) for the chosen spot.
/// CSV has a single header row, LF line endings; JSON is an array of records.
inline void export_series(const SequenceTable& t, SeriesKind kind,
                          const std::filesystem::path& path, ExportFormat format, int spot = 1) {
    if (t.size() < 1) throw ArgumentError("export_series: empty table");
    std::string body;
    nlohmann::json records = nlohmann::json::array();

    switch (kind) {
        case SeriesKind::values:
            if (format == ExportFormat::csv) {
                body = "n,value\n";
                for (Index n = 1; n <= t.size(); ++n)
                    body += std::to_string(n) + ',' + std::to_string(t[n]) + '\n';
            } else {
                for (Index n = 1; n <= t.size(); ++n)
                    records.push_back({{"n", n}, {"value", t[n]}});
            }
            break;
        case SeriesKind::trend_deviation:
            if (format == ExportFormat::csv) {
                body = "n,trend_deviation\n";
                for (Index n = 1; n <= t.size(); ++n)
                    body += std::to_string(n) + ',' + std::to_string(2 * t[n] - n) + '\n';
            } else {
                for (Index n = 1; n <= t.size(); ++n)
                    records.push_back({{"n", n}, {"trend_deviation", 2 * t[n] - n}});
            }
            break;
        case SeriesKind::generation_marks: {
            const GenerationPartition part =
                partition(generation_sequence(spot_trace(t, spot), t.spec.r()));
            if (format == ExportFormat::csv) {
                body = "g,alpha,beta\n";
                for (const GenerationRecord& rec : part.records)
                    body += std::to_string(rec.g) + ',' + std::to_string(rec.alpha) + ',' +
                            std::to_string(rec.beta) + '\n';
            } else {
                for (const GenerationRecord& rec : part.records)
                    records.push_back({{"g", rec.g}, {"alpha", rec.alpha}, {"beta", rec.beta}});
            }
            break;
        }
    }
    if (format == ExportFormat::json) body = records.dump() + '\n';

    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("export_series: cannot open '" + path.string() + "' for writing");
    os.write(body.data(), static_cast<std::streamsize>(body.size()));
    os.flush();
    if (!os) throw IoError("export_series: write to '" + path.string() + "' failed");
}

}  // namespace metafib
