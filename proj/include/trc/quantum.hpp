// Stabilizer parameter derivation from Hermitian self-orthogonal classical
// codes, the quantum MDS family over the big field, the full subfield-subcode
// pipeline at the three point sets, and shorten/puncture/subcode derivation
// rules.
#pragma once

#include <optional>
#include <string>

#include "trc/duality.hpp"
#include "trc/subfield.hpp"

namespace trc {

struct StabilizerParams {
    std::uint64_t length = 0;
    std::int64_t k = 0;
    std::uint64_t d_designed = 0;
    std::optional<std::uint64_t> d_lb, d_ub;
    std::uint64_t alphabet = 0;  // q of [[n,k,d]]_q
    std::string provenance;
};

// Maps a Hermitian dual-containing classical [n, k, >= d]_{q^2} code to
// [[n, 2k-n, >= d]]_q. The caller certifies dual-containment (the dual passed
// is_hermitian_self_orthogonal); uncertified input is rejected.
StabilizerParams stabilizer_from_classical(std::size_t classical_dim, std::size_t n,
                                           std::uint64_t d_designed, std::uint64_t q_alphabet,
                                           bool certified, std::string provenance);

struct MdsStabilizerResult {
    StabilizerParams params;  // [[N, N-2t-2, t+2]]_{q^n}
    EvaluationCode code;      // E_{Delta(t)} at Z over GF(p^{2r})
    Matrix dual;              // Hermitian dual basis over the big field
    bool mds = true;          // k == n - 2(d-1)
};

// Big-field route for consecutive exponents: requires t < trace_bound(q, n), certifies
// E ⊆ E^{perp_h} with conjugation exponent r.
MdsStabilizerResult mds_stabilizer(const TraceSpec& spec, std::uint64_t t);

struct TraceStabilizerResult {
    StabilizerParams params;
    SubfieldCode code;        // over GF(p^{2s}) at the chosen points
    bool within_bound = true; // a_t < trace_bound(q, n)
};

// Full pipeline: coset union for t, subfield-subcode at the chosen points,
// Gram certification with conjugation exponent s, parameter map. With
// enforce_bound the hypothesis a_t < trace_bound(q,n) is required
// (BoundViolated otherwise); without it the Gram certificate alone gates the
// construction (CertificationFailed when nonzero), which is how table rows
// beyond the hypothesis are produced.
TraceStabilizerResult trace_stabilizer(const TraceSpec& spec, std::size_t t, PointKind kind,
                                       bool enforce_bound = true);

// Designed distance of the trace_stabilizer construction: a_{t+1}+1 when the
// coset of 0 participates (kinds z, zt, zc), a_{t+1} for the length N-1
// variant, whose consecutive exponent run starts at 1 instead of 0.
std::uint64_t designed_distance(const TraceSpec& spec, std::size_t t, PointKind kind);

struct DerivationStep {
    enum class Kind { shorten, puncture, subcode };
    Kind kind;
    std::size_t amount = 1;  // iterations for shorten/puncture, dimension drop for subcode
};

// Parameter arithmetic with provenance recording.
StabilizerParams derive(const StabilizerParams& in, const DerivationStep& step);

struct ClassicalCode {
    Matrix G;
    std::uint64_t d_designed = 0;
    std::string provenance;
};

struct ClassicalParams {
    std::uint64_t length = 0;
    std::size_t k = 0;
    std::uint64_t d_designed = 0;
    std::uint64_t alphabet = 0;
    std::string provenance;
};

ClassicalParams derive_classical(const ClassicalParams& in, const DerivationStep& step);

// Shortening at a coordinate with the new generator matrix materialized, so
// downstream distance checks remain possible.
ClassicalCode shorten_classical(const ClassicalCode& code, std::size_t coord);

}  // namespace trc
