// The trace polynomial, its root set Z and complement Z^C, evaluation codes
// over the big field, class-representative reduction modulo tr(X), and power
// sums.
//
// Throughout: p prime, s | r, n = r/s, q = p^s. The big field is
// GF(p^{2r}) = GF(q^{2n}); the trace polynomial X + X^q + ... + X^{q^{2n-1}}
// has the q^{2n-1} elements of zero trace as its simple roots.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trc/cosets.hpp"
#include "trc/gf.hpp"
#include "trc/matgf.hpp"

namespace trc {

class TraceSpec {
  public:
    TraceSpec(std::uint32_t p, std::uint32_t s, std::uint32_t r,
              std::optional<std::vector<std::uint32_t>> big_modulus = std::nullopt);

    std::uint32_t p = 0, s = 0, r = 0, n = 0;
    std::uint64_t q = 0;   // p^s
    std::uint64_t N = 0;   // q^{2n-1}, number of trace roots
    std::uint64_t NT = 0;  // p^{2r}
    std::uint64_t NC = 0;  // NT - N
    FieldPtr big;          // GF(p^{2r})
    FieldPtr sub;          // GF(p^{2s})
    std::shared_ptr<const SubfieldEmbedding> sub_in_big;
    CosetFamily cosets;
};

enum class PointKind {
    trace_roots,          // Z
    trace_roots_nonzero,  // Z without the point 0 (length N-1 construction)
    full,                 // Z^T, all of GF(p^{2r})
    complement,           // Z^C, the elements of nonzero trace
};

const char* point_kind_name(PointKind k);

struct EvalPointSet {
    PointKind kind;
    std::vector<std::uint32_t> points;  // packed big-field values; 0 first when present,
                                        // then ascending discrete log
};

EvalPointSet make_points(const TraceSpec& spec, PointKind kind);

struct EvaluationCode {
    EvalPointSet points;
    ExponentSet delta;
    Matrix G;  // |delta| rows over the big field, rows ordered by ascending exponent
};

// Generator matrix with rows ev(X^a) for a in delta (0^0 taken as 1).
EvaluationCode evaluate_code(const TraceSpec& spec, const EvalPointSet& points,
                             const ExponentSet& delta);

// Sparse polynomial over GF(p): list of (exponent, coefficient) pairs with
// ascending exponents and coefficients in [1, p).
using SparsePoly = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

// The unique representative of X^k modulo the trace polynomial with degree
// < N, computed by polynomial long division.
SparsePoly reduce_mod_trace(const TraceSpec& spec, std::uint64_t k);

// True iff the reduced representative of X^k has a nonzero coefficient at
// X^{N-1}; equivalently ev(X^k) . ev(X^0) != 0.
bool contains_top_monomial(const TraceSpec& spec, std::uint64_t k);

// Power sum over the trace roots, directly and via the Newton identities on
// the trace polynomial's coefficients. Values are packed big-field elements.
std::uint32_t power_sum(const TraceSpec& spec, std::uint64_t k);
std::uint32_t newton_power_sum(const TraceSpec& spec, std::uint64_t k);

}  // namespace trc
