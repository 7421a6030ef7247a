#include "trc/tracecode.hpp"

#include <algorithm>

namespace trc {

TraceSpec::TraceSpec(std::uint32_t p_, std::uint32_t s_, std::uint32_t r_,
                     std::optional<std::vector<std::uint32_t>> big_modulus) {
    if (s_ == 0 || r_ % s_ != 0) throw InvalidTower("s must divide r");
    p = p_;
    s = s_;
    r = r_;
    n = r_ / s_;
    q = 1;
    for (std::uint32_t i = 0; i < s_; ++i) q *= p_;
    NT = 1;
    for (std::uint32_t i = 0; i < 2 * r_; ++i) NT *= p_;
    N = 1;
    for (std::uint32_t i = 0; i < 2 * n - 1; ++i) N *= q;
    NC = NT - N;
    big = Field::create(p_, 2 * r_, std::move(big_modulus));
    if (!big->log_tables_present())
        throw TableBudgetExceeded("big field exceeds the log-table budget");
    sub = Field::create(p_, 2 * s_);
    sub_in_big = std::make_shared<SubfieldEmbedding>(sub, big);
    cosets = cyclotomic_cosets(p_, s_, r_);
}

const char* point_kind_name(PointKind k) {
    switch (k) {
        case PointKind::trace_roots: return "z";
        case PointKind::trace_roots_nonzero: return "z_minus_zero";
        case PointKind::full: return "zt";
        case PointKind::complement: return "zc";
    }
    return "?";
}

EvalPointSet make_points(const TraceSpec& spec, PointKind kind) {
    EvalPointSet out;
    out.kind = kind;
    const Field& F = *spec.big;
    if (kind == PointKind::trace_roots || kind == PointKind::full) out.points.push_back(0);
    for (std::uint64_t i = 0; i + 1 < F.size(); ++i) {
        const std::uint32_t a = F.from_dlog(i);
        if (kind == PointKind::full) {
            out.points.push_back(a);
            continue;
        }
        const bool zero_trace = F.trace_raw(a, spec.s) == 0;
        switch (kind) {
            case PointKind::trace_roots:
            case PointKind::trace_roots_nonzero:
                if (zero_trace) out.points.push_back(a);
                break;
            case PointKind::complement:
                if (!zero_trace) out.points.push_back(a);
                break;
            default: break;
        }
    }
    return out;
}

EvaluationCode evaluate_code(const TraceSpec& spec, const EvalPointSet& points,
                             const ExponentSet& delta) {
    if (delta.members.empty()) throw EmptyDelta("delta must be nonempty");
    const Field& F = *spec.big;
    for (auto a : delta.members)
        if (a > spec.NT - 2) throw ExponentOutOfRange("exponent exceeds p^{2r}-2");

    EvaluationCode code;
    code.points = points;
    code.delta = delta;
    code.G = Matrix(spec.big, delta.members.size(), points.points.size());
    for (std::size_t i = 0; i < delta.members.size(); ++i) {
        const std::uint64_t a = delta.members[i];
        for (std::size_t j = 0; j < points.points.size(); ++j) {
            const std::uint32_t pt = points.points[j];
            // 0^0 taken as 1 so the a=0 row is all-ones
            code.G.at(i, j) = pt == 0 ? (a == 0 ? 1u : 0u)
                                      : F.pow(pt, static_cast<std::int64_t>(a));
        }
    }
    return code;
}

SparsePoly reduce_mod_trace(const TraceSpec& spec, std::uint64_t k) {
    if (k > spec.NT - 2) throw ExponentOutOfRange("exponent exceeds p^{2r}-2");
    const std::uint32_t p = spec.p;
    // tr(X) = X + X^q + ... + X^{q^{2n-1}}; X^N == -(X + X^q + ... + X^{q^{2n-2}})
    std::vector<std::uint64_t> low_exps;  // q^0 .. q^{2n-2}
    std::uint64_t qe = 1;
    for (std::uint32_t i = 0; i + 1 < 2 * spec.n; ++i) {
        low_exps.push_back(qe);
        qe *= spec.q;
    }
    std::vector<std::uint32_t> poly(k + 1, 0);
    poly[k] = 1;
    for (std::uint64_t e = k; e >= spec.N && e <= k; --e) {
        const std::uint32_t c = poly[e];
        if (!c) continue;
        poly[e] = 0;
        for (std::uint64_t le : low_exps) {
            const std::uint64_t ne = e - spec.N + le;
            poly[ne] = (poly[ne] + p - c % p) % p;
        }
        if (e == spec.N) break;
    }
    SparsePoly out;
    for (std::uint64_t e = 0; e < poly.size() && e < spec.N; ++e)
        if (poly[e]) out.emplace_back(e, poly[e]);
    return out;
}

bool contains_top_monomial(const TraceSpec& spec, std::uint64_t k) {
    const SparsePoly rep = reduce_mod_trace(spec, k);
    return std::any_of(rep.begin(), rep.end(),
                       [&](const auto& t) { return t.first == spec.N - 1; });
}

std::uint32_t power_sum(const TraceSpec& spec, std::uint64_t k) {
    const Field& F = *spec.big;
    std::uint32_t acc = 0;
    for (std::uint64_t i = 0; i + 1 < F.size(); ++i) {
        const std::uint32_t a = F.from_dlog(i);
        if (F.trace_raw(a, spec.s) == 0)
            acc = F.add(acc, F.pow(a, static_cast<std::int64_t>(k)));
    }
    return acc;  // the root 0 contributes nothing for k >= 1
}

std::uint32_t newton_power_sum(const TraceSpec& spec, std::uint64_t k) {
    // Trace polynomial: monic of degree N with a_j = 1 exactly at
    // j in {1, q, q^2, ..., q^{2n-1}}. Newton recurrence:
    //   i <= N:  s_i = -(sum_{l=1}^{i-1} a_{N-l} s_{i-l}) - i * a_{N-i}
    //   i  > N:  s_i = -(sum_{l=1}^{N}  a_{N-l} s_{i-l})   (a_0 = 0 here)
    const Field& F = *spec.big;
    std::vector<std::uint64_t> exps;  // exponents with coefficient 1
    std::uint64_t qe = 1;
    for (std::uint32_t i = 0; i < 2 * spec.n; ++i) {
        exps.push_back(qe);
        qe *= spec.q;
    }
    std::vector<std::uint32_t> sval(k + 1, 0);
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint32_t acc = 0;
        // sum a_{N-l} s_{i-l} over l >= 1: nonzero at l = N - e, e in E \ {N}
        for (std::uint64_t e : exps) {
            if (e == spec.N) continue;
            const std::uint64_t l = spec.N - e;
            if (l <= i - 1) acc = F.add(acc, sval[i - l]);
        }
        // + i * a_{N-i} for i <= N (a_0 = 0, so i = N contributes nothing)
        if (i < spec.N &&
            std::find(exps.begin(), exps.end(), spec.N - i) != exps.end())
            acc = F.add(acc, F.scalar_mul(i, 1));
        sval[i] = F.neg(acc);
    }
    return sval[k];
}

}  // namespace trc
