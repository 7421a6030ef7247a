// Trace lifts and subfield-subcodes over GF(p^{2s}).
//
// For each minimal coset with representative a and size i_a, the lift
// T_a(beta^l X^a) = sum_j (beta^l X^a)^(p^{2s j}), 0 <= l < i_a, with beta a
// fixed primitive element of GF(p^{2s i_a}), evaluates into GF(p^{2s}) at
// every field point. Evaluating the lift family at a chosen point set and
// projecting yields the subfield-subcode generator matrix; an independent
// construction via the Delsarte dual-trace route cross-checks the row space.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trc/cosets.hpp"
#include "trc/matgf.hpp"
#include "trc/tracecode.hpp"

namespace trc {

struct LiftPolynomial {
    std::uint64_t coset_rep = 0;
    std::uint32_t beta_power = 0;  // l in T_a(beta^l X^a)
    // (exponent, packed big-field coefficient), ascending exponents
    std::vector<std::pair<std::uint64_t, std::uint32_t>> terms;
};

struct TraceLiftBasis {
    std::vector<LiftPolynomial> elements;  // grouped by coset, rep ascending
};

// Requires delta closed under multiplication by p^{2s}. The optional
// beta_twist replaces each coset's beta by beta^twist (twist coprime to the
// subfield order); the resulting row space is unchanged, which tests rely on.
TraceLiftBasis trace_lift_basis(const TraceSpec& spec, const ExponentSet& delta,
                                std::uint32_t beta_twist = 1);

// Evaluation of a lift polynomial at a big-field point, projected into the
// subfield. Projection always succeeds for genuine lift polynomials.
std::uint32_t eval_lift_projected(const TraceSpec& spec, const LiftPolynomial& f,
                                  std::uint32_t point);

struct SubfieldCode {
    Matrix g_sub;       // unreduced lift-evaluation rows over GF(p^{2s})
    Matrix reduced;     // row-reduced form
    std::size_t designed_dim_bound = 0;  // sum of coset sizes in delta
    std::size_t actual_dim = 0;          // rank of g_sub
    // a_{t+1}+1 when delta is a consecutive union starting at the 0 coset
    std::optional<std::uint64_t> designed_dual_distance;
};

SubfieldCode subfield_subcode(const TraceSpec& spec, const ExponentSet& delta,
                              const EvalPointSet& points, std::uint32_t beta_twist = 1);

// Independent subfield-subcode computation from a big-field generator matrix:
// dualize, trace down with a full GF(p^{2s})-basis of GF(p^{2r}), dualize
// again. Returns a row-reduced basis of C ∩ GF(p^{2s})^m.
Matrix subfield_subcode_delsarte(const TraceSpec& spec, const Matrix& big_generator);

}  // namespace trc
