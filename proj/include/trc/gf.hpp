// Exact arithmetic in GF(p^m): packed polynomial-basis representation with
// optional log/antilog tables, Frobenius maps, subfield embeddings and traces.
//
// Elements of GF(p^m) are stored as packed base-p integers: the value
// sum d_i p^i encodes the coordinate vector (d_0,...,d_{m-1}) with respect to
// the polynomial basis 1, X, ..., X^{m-1} modulo the field's modulus.
// All Field instances are immutable after construction and safe to share
// across threads.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trc/errors.hpp"

namespace trc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Default cap on p^m for log/antilog table generation.
inline constexpr std::uint64_t kDefaultTableBudget = std::uint64_t{1} << 20;

class Field : public std::enable_shared_from_this<Field> {
  public:
    // Builds GF(p^m). When modulus (coefficients c_0..c_m, low to high, monic)
    // is omitted, the Conway polynomial from the shipped data file is used.
    static FieldPtr create(std::uint32_t p, std::uint32_t m,
                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                           std::uint64_t table_budget = kDefaultTableBudget);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint64_t size() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool log_tables_present() const noexcept { return !log_.empty(); }
    bool conway_built() const noexcept { return conway_built_; }

    // Packed-value arithmetic. These are the fast path used by the matrix and
    // code-construction layers; FieldElement wraps them with type checking.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
    // a^(p^k)
    std::uint32_t frobenius(std::uint32_t a, std::uint32_t k) const;
    // a + a^(p^d) + a^(p^2d) + ... value fixed by x -> x^(p^d); stays packed
    // in this field (use an embedding to move it into GF(p^d)).
    std::uint32_t trace_raw(std::uint32_t a, std::uint32_t sub_degree) const;

    // Multiplication by an integer scalar (repeated addition semantics).
    std::uint32_t scalar_mul(std::uint64_t c, std::uint32_t a) const;

    std::uint32_t generator() const;                 // fixed primitive element
    std::uint64_t dlog(std::uint32_t a) const;       // a != 0, a = g^dlog
    std::uint32_t from_dlog(std::uint64_t e) const;  // g^e
    std::uint64_t element_order(std::uint32_t a) const;

    std::uint32_t pack(const std::vector<std::uint32_t>& digits) const;
    std::vector<std::uint32_t> unpack(std::uint32_t v) const;

    std::string describe() const;  // "GF(2^8)" style

  private:
    Field() = default;
    void build_tables(std::uint64_t budget);
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul_by_x(std::uint32_t a) const;

    std::uint32_t p_ = 0, m_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> pw_;  // p^0..p^m
    bool conway_built_ = false;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> exp_;  // size q-1, exp_[i] = g^i
    std::vector<std::int64_t> log_;   // size q, log_[0] = -1
};

// Value type pairing a packed element with its field; checks field identity
// on mixed operations.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::uint32_t value) : field_(std::move(field)), v_(value) {}

    const FieldPtr& field() const noexcept { return field_; }
    std::uint32_t value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const { return {field_, field_->neg(v_)}; }
    FieldElement pow(std::int64_t e) const { return {field_, field_->pow(v_, e)}; }
    FieldElement inv() const { return {field_, field_->inv(v_)}; }
    FieldElement frobenius(std::uint32_t k) const { return {field_, field_->frobenius(v_, k)}; }
    bool operator==(const FieldElement& o) const { return field_.get() == o.field_.get() && v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    FieldPtr field_;
    std::uint32_t v_ = 0;
};

// Field embedding GF(p^m') -> GF(p^m), m' | m. The image of the sub field's
// canonical generator X is a root of the sub modulus inside sup; with Conway
// moduli on both sides this is g_sup^((p^m-1)/(p^m'-1)).
class SubfieldEmbedding {
  public:
    SubfieldEmbedding(FieldPtr sub, FieldPtr sup);

    const FieldPtr& sub() const noexcept { return sub_; }
    const FieldPtr& sup() const noexcept { return sup_; }
    std::uint32_t image_of_sub_generator() const noexcept { return image_of_x_; }

    std::uint32_t embed(std::uint32_t a) const { return embed_tab_[a]; }
    // Succeeds iff b lies in the image subfield (b^(p^m') = b).
    std::optional<std::uint32_t> try_project(std::uint32_t b) const;

    FieldElement embed(const FieldElement& a) const;
    std::optional<FieldElement> try_project(const FieldElement& b) const;

  private:
    FieldPtr sub_, sup_;
    std::uint32_t image_of_x_ = 0;
    std::vector<std::uint32_t> embed_tab_;
    std::vector<std::int64_t> project_tab_;  // indexed by sup value, -1 if outside
};

// Trace map GF(p^m) -> GF(p^m') realized through an embedding (projection is
// guaranteed to succeed because the raw trace is fixed by x -> x^(p^m')).
FieldElement trace_between(const FieldElement& a, const SubfieldEmbedding& e);

// Conway polynomial data file access. Default path resolution order:
// explicit argument, TRC_CONWAY_PATH environment variable, compiled-in
// default, ./data/conway_polynomials.txt.
void set_conway_path(const std::string& path);
const std::string& conway_path();
std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t m);

// Dense polynomial helpers over GF(p) (coefficients low to high). Exposed for
// tests; the library uses them for modulus validation.
namespace gfpoly {
using Poly = std::vector<std::uint32_t>;
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p);
Poly powmod(Poly a, std::uint64_t e, const Poly& f, std::uint32_t p);
bool is_irreducible(const Poly& f, std::uint32_t p);
}  // namespace gfpoly

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace trc
