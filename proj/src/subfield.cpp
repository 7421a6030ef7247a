#include "trc/subfield.hpp"

#include <algorithm>
#include <map>

namespace trc {

namespace {

// Split a coset-closed exponent set back into cosets of the family.
std::vector<const Coset*> cosets_of(const TraceSpec& spec, const ExponentSet& delta) {
    std::vector<const Coset*> out;
    std::vector<std::uint64_t> sorted = delta.members;
    std::sort(sorted.begin(), sorted.end());
    std::size_t covered = 0;
    for (const auto& c : spec.cosets.cosets) {
        if (std::binary_search(sorted.begin(), sorted.end(), c.rep)) {
            for (auto m : c.members)
                if (!std::binary_search(sorted.begin(), sorted.end(), m))
                    throw DeltaNotCosetClosed("delta misses coset member " + std::to_string(m));
            covered += c.size();
            out.push_back(&c);
        }
    }
    if (covered != sorted.size())
        throw DeltaNotCosetClosed("delta contains non-representative leftovers");
    return out;
}

}  // namespace

TraceLiftBasis trace_lift_basis(const TraceSpec& spec, const ExponentSet& delta,
                                std::uint32_t beta_twist) {
    const Field& F = *spec.big;
    TraceLiftBasis basis;
    const std::uint64_t base = spec.cosets.base;  // p^{2s}
    for (const Coset* c : cosets_of(spec, delta)) {
        const std::size_t ia = c->size();
        if (c->rep == 0) {
            // T_0 over the singleton coset {0}: the constants
            basis.elements.push_back({0, 0, {{0, 1}}});
            continue;
        }
        // beta: primitive element of GF(p^{2s*ia}) taken from the Conway tower
        // embedded into the big field
        std::uint64_t sub_order = 1;
        for (std::uint32_t i = 0; i < 2 * spec.s; ++i) sub_order *= spec.p;
        std::uint64_t subfield_size = 1;
        for (std::size_t i = 0; i < ia; ++i) subfield_size *= sub_order;
        const std::uint64_t e = (F.size() - 1) / (subfield_size - 1);
        std::uint32_t beta = F.from_dlog(e);
        if (beta_twist != 1) beta = F.pow(beta, beta_twist);
        for (std::size_t l = 0; l < ia; ++l) {
            LiftPolynomial f;
            f.coset_rep = c->rep;
            f.beta_power = static_cast<std::uint32_t>(l);
            std::map<std::uint64_t, std::uint32_t> terms;
            std::uint32_t coef = F.pow(beta, static_cast<std::int64_t>(l));
            std::uint64_t expo = c->rep;
            for (std::size_t j = 0; j < ia; ++j) {
                auto [it, fresh] = terms.emplace(expo, 0);
                it->second = F.add(it->second, coef);
                coef = F.frobenius(coef, 2 * spec.s);
                expo = expo * base % (spec.NT - 1);
            }
            f.terms.assign(terms.begin(), terms.end());
            basis.elements.push_back(std::move(f));
        }
    }
    // invariant from the defining property: f^(p^{2s}) == f mod X^{NT} - X,
    // i.e. the term multiset is stable under (exp, c) -> (exp*p^{2s}, c^{p^{2s}})
    for (const auto& f : basis.elements) {
        for (const auto& [ex, co] : f.terms) {
            const std::uint64_t ex2 = ex == 0 ? 0 : ex * base % (spec.NT - 1);
            const std::uint32_t co2 = F.frobenius(co, 2 * spec.s);
            auto it = std::find_if(f.terms.begin(), f.terms.end(),
                                   [&](const auto& t) { return t.first == ex2; });
            if (it == f.terms.end() || it->second != co2)
                throw DeltaNotCosetClosed("lift polynomial not Frobenius-stable (internal)");
        }
    }
    return basis;
}

std::uint32_t eval_lift_projected(const TraceSpec& spec, const LiftPolynomial& f,
                                  std::uint32_t point) {
    const Field& F = *spec.big;
    std::uint32_t acc = 0;
    for (const auto& [ex, co] : f.terms) {
        std::uint32_t v;
        if (point == 0)
            v = ex == 0 ? co : 0;
        else
            v = F.mul(co, F.pow(point, static_cast<std::int64_t>(ex)));
        acc = F.add(acc, v);
    }
    const auto projected = spec.sub_in_big->try_project(acc);
    if (!projected)
        throw NotInSubfield("lift evaluation left the subfield (internal)");
    return *projected;
}

SubfieldCode subfield_subcode(const TraceSpec& spec, const ExponentSet& delta,
                              const EvalPointSet& points, std::uint32_t beta_twist) {
    const TraceLiftBasis basis = trace_lift_basis(spec, delta, beta_twist);
    SubfieldCode code;
    code.g_sub = Matrix(spec.sub, basis.elements.size(), points.points.size());
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        for (std::size_t j = 0; j < points.points.size(); ++j)
            code.g_sub.at(i, j) = eval_lift_projected(spec, basis.elements[i], points.points[j]);
    code.reduced = rref(code.g_sub).r;
    code.actual_dim = code.reduced.rows();
    code.designed_dim_bound = 0;
    for (const Coset* c : cosets_of(spec, delta)) code.designed_dim_bound += c->size();

    // designed dual distance a_{t+1}+1 applies when delta is the union of the
    // first t+1 cosets; detect that shape and record the bound
    const auto& reps = spec.cosets.reps;
    std::vector<std::uint64_t> sorted = delta.members;
    std::sort(sorted.begin(), sorted.end());
    std::size_t t = 0;
    bool consecutive = !sorted.empty() && sorted.front() == 0;
    if (consecutive) {
        std::size_t count = 0;
        while (t + 1 < reps.size() &&
               std::binary_search(sorted.begin(), sorted.end(), reps[t + 1]))
            ++t, ++count;
        std::size_t total = 1;
        for (std::size_t i = 1; i <= t; ++i) total += spec.cosets.cosets[i].size();
        consecutive = total == sorted.size();
    }
    if (consecutive && t + 1 < reps.size())
        code.designed_dual_distance = reps[t + 1] + 1;
    return code;
}

Matrix subfield_subcode_delsarte(const TraceSpec& spec, const Matrix& big_generator) {
    const Field& BF = *spec.big;
    const std::size_t m = big_generator.cols();
    const Matrix H = kernel(big_generator);

    // GF(p^{2s})-basis of GF(p^{2r}): powers 1, g, ..., g^{n-1} of the big
    // primitive element (its minimal polynomial over the subfield has degree n)
    const std::uint32_t nb = spec.r / spec.s;
    Matrix traced(spec.sub, H.rows() * nb, m);
    for (std::size_t i = 0; i < H.rows(); ++i) {
        for (std::uint32_t j = 0; j < nb; ++j) {
            const std::uint32_t bj = j == 0 ? 1 : BF.from_dlog(j);
            for (std::size_t c = 0; c < m; ++c) {
                const std::uint32_t y = BF.trace_raw(BF.mul(bj, H.at(i, c)), 2 * spec.s);
                const auto pv = spec.sub_in_big->try_project(y);
                if (!pv) throw NotInSubfield("trace left the subfield (internal)");
                traced.at(i * nb + j, c) = *pv;
            }
        }
    }
    const Matrix tr_reduced = rref(traced).r;
    if (tr_reduced.rows() == 0) return identity(spec.sub, m);
    return rref(kernel(tr_reduced)).r;
}

}  // namespace trc
