// Code file format and the append-only results catalog.
//
// Code files are UTF-8 text: a header line "q n k" (field size, length,
// rows), then k lines of n whitespace-separated symbols. For prime fields the
// symbols are the digits 0..p-1. For extension fields a symbol is 0 for the
// zero element or an exponent e in [1, q-1] denoting g^e with respect to the
// field's fixed primitive element (the element 1 is written as q-1, i.e.
// g^(q-1)).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "trc/matgf.hpp"

namespace trc {

struct CodeFileMetadata {
    std::uint64_t q = 0;
    std::size_t n = 0, k = 0;
};

void write_code(std::ostream& os, const Matrix& g);
void write_code_file(const std::string& path, const Matrix& g);

// Throws MalformedFile with line/column positions on any inconsistency.
Matrix parse_code(std::istream& is, FieldPtr field_hint = nullptr);
Matrix parse_code_file(const std::string& path, FieldPtr field_hint = nullptr);

// Append-only catalog: one JSON object per line, each carrying an fnv1a-64
// checksum of its canonical payload. Existing lines are never rewritten.
struct CodeRecord {
    std::string family;  // "classical" | "stabilizer"
    std::uint32_t p = 0, s = 0, r = 0;
    std::int64_t t = -1;
    std::string points_kind;
    std::string derivations;
    std::uint64_t n = 0;
    std::int64_t k = 0;
    std::uint64_t d_designed = 0;
    std::int64_t d_lb = -1, d_ub = -1;  // -1 = unknown
    std::string timestamp;              // ISO-8601 UTC, filled on append
    std::string engine;
};

std::uint64_t fnv1a64(const std::string& data);
void catalog_append(const std::string& path, const CodeRecord& rec);
// Returns the number of valid records; throws MalformedFile on a checksum or
// format violation.
std::size_t catalog_verify(const std::string& path);

}  // namespace trc
