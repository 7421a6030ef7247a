#include "trc/quantum.hpp"

#include <algorithm>

namespace trc {

StabilizerParams stabilizer_from_classical(std::size_t classical_dim, std::size_t n,
                                           std::uint64_t d_designed, std::uint64_t q_alphabet,
                                           bool certified, std::string provenance) {
    if (!certified)
        throw NotDualContaining("classical code lacks a Hermitian dual-containment certificate");
    StabilizerParams out;
    out.length = n;
    out.k = 2 * static_cast<std::int64_t>(classical_dim) - static_cast<std::int64_t>(n);
    out.d_designed = d_designed;
    out.alphabet = q_alphabet;
    out.provenance = std::move(provenance);
    return out;
}

MdsStabilizerResult mds_stabilizer(const TraceSpec& spec, std::uint64_t t) {
    const std::uint64_t B = trace_bound(spec.q, spec.n);
    if (t >= B)
        throw BoundViolated("t = " + std::to_string(t) + " is not below the bound " + std::to_string(B));
    if (spec.N < 2 * t + 2)
        throw BoundViolated("t too large for a nonnegative quantum dimension");

    ExponentSet delta;
    for (std::uint64_t a = 0; a <= t; ++a) delta.members.push_back(a);
    const EvalPointSet pts = make_points(spec, PointKind::trace_roots);
    EvaluationCode code = evaluate_code(spec, pts, delta);

    const HermitianContext ctx(spec.big, spec.r);
    if (!is_hermitian_self_orthogonal(code.G, ctx))
        throw CertificationFailed("big-field Gram matrix is nonzero (internal)");

    MdsStabilizerResult out{.params = {}, .code = {}, .dual = hermitian_dual(code.G, ctx), .mds = true};
    std::uint64_t qn = 1;
    for (std::uint32_t i = 0; i < spec.r; ++i) qn *= spec.p;  // q^n = p^r
    out.params.length = spec.N;
    out.params.k = static_cast<std::int64_t>(spec.N) - 2 * static_cast<std::int64_t>(t) - 2;
    out.params.d_designed = t + 2;
    out.params.alphabet = qn;
    out.params.provenance = "mds_stabilizer(p=" + std::to_string(spec.p) + ",s=" + std::to_string(spec.s) +
                            ",r=" + std::to_string(spec.r) + ",t=" + std::to_string(t) + ")";
    out.mds = out.params.k == static_cast<std::int64_t>(out.params.length) -
                                  2 * (static_cast<std::int64_t>(out.params.d_designed) - 1);
    out.code = std::move(code);
    return out;
}

std::uint64_t designed_distance(const TraceSpec& spec, std::size_t t, PointKind kind) {
    if (t + 1 >= spec.cosets.reps.size()) throw IndexOutOfRange("t+1 beyond the coset family");
    const std::uint64_t next_rep = spec.cosets.reps[t + 1];
    return kind == PointKind::trace_roots_nonzero ? next_rep : next_rep + 1;
}

TraceStabilizerResult trace_stabilizer(const TraceSpec& spec, std::size_t t, PointKind kind,
                                       bool enforce_bound) {
    if (kind == PointKind::full)
        throw InvalidTower("trace_stabilizer operates on z, z_minus_zero or zc points");
    const std::uint64_t B = trace_bound(spec.q, spec.n);
    const std::uint64_t at = spec.cosets.reps.at(t);
    const bool within = at < B;
    if (enforce_bound && !within)
        throw BoundViolated("a_t = " + std::to_string(at) + " is not below the bound " +
                            std::to_string(B));

    const ExponentSet delta = kind == PointKind::trace_roots_nonzero
                                  ? delta_sigma_nonzero(spec.cosets, t)
                                  : delta_sigma(spec.cosets, t);
    const EvalPointSet pts = make_points(spec, kind);
    SubfieldCode code = subfield_subcode(spec, delta, pts);

    const HermitianContext ctx(spec.sub, spec.s);
    const bool cert = is_hermitian_self_orthogonal(code.g_sub, ctx) &&
                      is_hermitian_self_orthogonal(code.reduced, ctx);
    if (!cert) {
        if (within)
            throw CertificationFailed(
                "subfield Gram matrix nonzero inside the hypothesis range (internal)");
        throw CertificationFailed("subfield Gram matrix nonzero at t beyond the bound");
    }

    TraceStabilizerResult out;
    out.within_bound = within;
    const std::size_t m = pts.points.size();
    const std::size_t dual_dim = m - code.actual_dim;
    out.params = stabilizer_from_classical(
        dual_dim, m, designed_distance(spec, t, kind), spec.q, cert,
        "trace_stabilizer(p=" + std::to_string(spec.p) + ",s=" + std::to_string(spec.s) +
            ",r=" + std::to_string(spec.r) + ",t=" + std::to_string(t) + "," +
            point_kind_name(kind) + ")");
    out.code = std::move(code);
    return out;
}

StabilizerParams derive(const StabilizerParams& in, const DerivationStep& step) {
    StabilizerParams out = in;
    switch (step.kind) {
        case DerivationStep::Kind::shorten:
            throw InvalidDerivation("shorten applies to classical codes");
        case DerivationStep::Kind::puncture:
            if (in.length < step.amount || in.d_designed < step.amount + 1)
                throw InvalidDerivation("puncture would exhaust length or distance");
            out.length -= step.amount;
            out.d_designed -= step.amount;
            if (out.d_ub) out.d_ub = std::max<std::uint64_t>(1, *out.d_ub - step.amount);
            if (out.d_lb) out.d_lb = std::max<std::uint64_t>(1, *out.d_lb - step.amount);
            out.provenance += " |> puncture x" + std::to_string(step.amount);
            break;
        case DerivationStep::Kind::subcode:
            if (in.k < static_cast<std::int64_t>(step.amount))
                throw InvalidDerivation("subcode step exceeds the dimension");
            out.k -= static_cast<std::int64_t>(step.amount);
            out.provenance += " |> subcode x" + std::to_string(step.amount);
            break;
    }
    return out;
}

ClassicalParams derive_classical(const ClassicalParams& in, const DerivationStep& step) {
    ClassicalParams out = in;
    switch (step.kind) {
        case DerivationStep::Kind::shorten:
            if (in.length < step.amount + 1 || in.k < step.amount)
                throw InvalidDerivation("shorten would exhaust length or dimension");
            out.length -= step.amount;
            out.k -= step.amount;
            out.provenance += " |> shorten x" + std::to_string(step.amount);
            break;
        case DerivationStep::Kind::puncture:
            if (in.length < step.amount + 1 || in.d_designed < step.amount + 1)
                throw InvalidDerivation("puncture would exhaust length or distance");
            out.length -= step.amount;
            out.d_designed -= step.amount;
            out.provenance += " |> puncture x" + std::to_string(step.amount);
            break;
        case DerivationStep::Kind::subcode:
            if (in.k < step.amount + 1) throw InvalidDerivation("subcode step exceeds the dimension");
            out.k -= step.amount;
            out.provenance += " |> subcode x" + std::to_string(step.amount);
            break;
    }
    return out;
}

ClassicalCode shorten_classical(const ClassicalCode& code, std::size_t coord) {
    const Matrix& G = code.G;
    if (coord >= G.cols()) throw InvalidDerivation("shorten coordinate out of range");
    const Field& F = *G.field();

    // basis of the codewords vanishing at coord, with the coordinate removed
    std::size_t lead = G.rows();
    for (std::size_t i = 0; i < G.rows(); ++i) {
        if (G.at(i, coord)) {
            lead = i;
            break;
        }
    }
    ClassicalCode out;
    out.d_designed = code.d_designed;
    out.provenance = code.provenance + " |> shorten@" + std::to_string(coord);
    const std::size_t new_rows = lead == G.rows() ? G.rows() : G.rows() - 1;
    out.G = Matrix(G.field(), new_rows, G.cols() - 1);
    std::size_t w = 0;
    for (std::size_t i = 0; i < G.rows(); ++i) {
        if (i == lead) continue;
        std::size_t cc = 0;
        const std::uint32_t f =
            lead == G.rows() ? 0 : F.div(G.at(i, coord), G.at(lead, coord));
        for (std::size_t j = 0; j < G.cols(); ++j) {
            if (j == coord) continue;
            std::uint32_t v = G.at(i, j);
            if (f) v = F.sub(v, F.mul(f, G.at(lead, j)));
            out.G.at(w, cc++) = v;
        }
        ++w;
    }
    return out;
}

}  // namespace trc
