#include "trc/serialization.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace trc {

namespace {

std::string symbol(const Field& F, std::uint32_t v) {
    if (F.degree() == 1) return std::to_string(v);
    if (v == 0) return "0";
    const std::uint64_t e = F.dlog(v);
    return std::to_string(e == 0 ? F.size() - 1 : e);
}

std::uint32_t parse_symbol(const Field& F, std::uint64_t sym, std::size_t line, std::size_t col) {
    if (F.degree() == 1) {
        if (sym >= F.size())
            throw MalformedFile("symbol out of range at line " + std::to_string(line) + ", column " +
                                std::to_string(col));
        return static_cast<std::uint32_t>(sym);
    }
    if (sym == 0) return 0;
    if (sym > F.size() - 1)
        throw MalformedFile("exponent out of range at line " + std::to_string(line) + ", column " +
                            std::to_string(col));
    return F.from_dlog(sym);
}

}  // namespace

void write_code(std::ostream& os, const Matrix& g) {
    const Field& F = *g.field();
    os << F.size() << " " << g.cols() << " " << g.rows() << "\n";
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (j) os << " ";
            os << symbol(F, g.at(i, j));
        }
        os << "\n";
    }
}

void write_code_file(const std::string& path, const Matrix& g) {
    std::ofstream out(path);
    if (!out.good()) throw MalformedFile("cannot open " + path + " for writing");
    write_code(out, g);
}

Matrix parse_code(std::istream& is, FieldPtr field_hint) {
    std::string header;
    if (!std::getline(is, header)) throw MalformedFile("missing header at line 1");
    std::istringstream hs(header);
    std::uint64_t q = 0;
    std::size_t n = 0, k = 0;
    if (!(hs >> q >> n >> k)) throw MalformedFile("malformed header at line 1");

    FieldPtr field = field_hint;
    if (!field) {
        // factor q as p^m with p prime
        std::uint64_t p = q;
        for (std::uint64_t d = 2; d * d <= q; ++d) {
            if (q % d == 0) {
                p = d;
                break;
            }
        }
        if (q < 2) throw MalformedFile("field size in header must be at least 2");
        std::uint32_t m = 0;
        std::uint64_t t = q;
        while (t > 1) {
            if (t % p != 0) throw MalformedFile("field size in header is not a prime power");
            t /= p;
            ++m;
        }
        field = Field::create(static_cast<std::uint32_t>(p), m);
    }
    if (field->size() != q) throw MalformedFile("header field size does not match the field");

    Matrix g(field, k, n);
    for (std::size_t i = 0; i < k; ++i) {
        std::string line;
        if (!std::getline(is, line))
            throw MalformedFile("missing row at line " + std::to_string(i + 2));
        std::istringstream ls(line);
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t sym;
            if (!(ls >> sym))
                throw MalformedFile("missing symbol at line " + std::to_string(i + 2) + ", column " +
                                    std::to_string(j + 1));
            g.at(i, j) = parse_symbol(*field, sym, i + 2, j + 1);
        }
        std::uint64_t extra;
        if (ls >> extra)
            throw MalformedFile("trailing symbol at line " + std::to_string(i + 2) + ", column " +
                                std::to_string(n + 1));
    }
    return g;
}

Matrix parse_code_file(const std::string& path, FieldPtr field_hint) {
    std::ifstream in(path);
    if (!in.good()) throw MalformedFile("cannot open " + path);
    return parse_code(in, std::move(field_hint));
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

nlohmann::json record_payload(const CodeRecord& rec) {
    nlohmann::json j;
    j["family"] = rec.family;
    j["p"] = rec.p;
    j["s"] = rec.s;
    j["r"] = rec.r;
    j["t"] = rec.t;
    j["points"] = rec.points_kind;
    j["derivations"] = rec.derivations;
    j["n"] = rec.n;
    j["k"] = rec.k;
    j["d_designed"] = rec.d_designed;
    j["d_lb"] = rec.d_lb;
    j["d_ub"] = rec.d_ub;
    j["timestamp"] = rec.timestamp;
    j["engine"] = rec.engine;
    return j;
}

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&tt, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

void catalog_append(const std::string& path, const CodeRecord& rec) {
    CodeRecord filled = rec;
    if (filled.timestamp.empty()) filled.timestamp = iso8601_now();
    if (filled.engine.empty()) filled.engine = "trc 0.1.0";
    nlohmann::json j = record_payload(filled);
    const std::string payload = j.dump();
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(payload)));
    j["checksum"] = hex;
    std::ofstream out(path, std::ios::app);
    if (!out.good()) throw MalformedFile("cannot open catalog " + path + " for append");
    out << j.dump() << "\n";
}

std::size_t catalog_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw MalformedFile("cannot open catalog " + path);
    std::string line;
    std::size_t count = 0, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const std::exception&) {
            throw MalformedFile("catalog line " + std::to_string(lineno) + " is not valid JSON");
        }
        if (!j.contains("checksum"))
            throw MalformedFile("catalog line " + std::to_string(lineno) + " lacks a checksum");
        const std::string expect = j["checksum"];
        j.erase("checksum");
        char hex[17];
        std::snprintf(hex, sizeof(hex), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(j.dump())));
        if (expect != hex)
            throw MalformedFile("catalog line " + std::to_string(lineno) + " checksum mismatch");
        ++count;
    }
    return count;
}

}  // namespace trc
