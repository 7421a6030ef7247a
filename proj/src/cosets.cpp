#include "trc/cosets.hpp"

#include <algorithm>

namespace trc {

CosetFamily cyclotomic_cosets(std::uint32_t p, std::uint32_t s, std::uint32_t r) {
    if (s == 0 || r % s != 0) throw InvalidTower("s must divide r");
    CosetFamily fam;
    std::uint64_t nt = 1;
    for (std::uint32_t i = 0; i < 2 * r; ++i) nt *= p;
    fam.modulus = nt - 1;
    std::uint64_t base = 1;
    for (std::uint32_t i = 0; i < 2 * s; ++i) base *= p;
    fam.base = base;

    std::vector<bool> seen(fam.modulus, false);
    fam.cosets.push_back({0, {0}});
    for (std::uint64_t a = 1; a < fam.modulus; ++a) {
        if (seen[a]) continue;
        Coset c;
        c.rep = a;
        std::uint64_t x = a;
        do {
            c.members.push_back(x);
            seen[x] = true;
            x = x * base % fam.modulus;
        } while (x != a);
        std::sort(c.members.begin(), c.members.end());
        fam.cosets.push_back(std::move(c));
    }
    std::sort(fam.cosets.begin(), fam.cosets.end(),
              [](const Coset& a, const Coset& b) { return a.rep < b.rep; });
    fam.reps.reserve(fam.cosets.size());
    for (const auto& c : fam.cosets) fam.reps.push_back(c.rep);
    return fam;
}

static ExponentSet union_of(const CosetFamily& f, std::size_t first, std::size_t last_inclusive) {
    if (last_inclusive >= f.cosets.size()) throw IndexOutOfRange("coset index out of range");
    ExponentSet out;
    for (std::size_t i = first; i <= last_inclusive; ++i)
        out.members.insert(out.members.end(), f.cosets[i].members.begin(), f.cosets[i].members.end());
    std::sort(out.members.begin(), out.members.end());
    out.closed_under_base = true;
    return out;
}

ExponentSet delta_sigma(const CosetFamily& f, std::size_t t) { return union_of(f, 0, t); }

ExponentSet delta_sigma_nonzero(const CosetFamily& f, std::size_t t) {
    if (t == 0) throw EmptyDelta("at least one nonzero coset required");
    return union_of(f, 1, t);
}

std::uint64_t trace_bound(std::uint64_t q, std::uint32_t n) {
    std::uint64_t qi = 1;
    std::uint64_t mid = 0;
    for (std::uint32_t i = 1; i < n; ++i) {
        qi *= q;
        mid += qi;
    }
    const std::uint64_t qn = qi * q;
    return qn - (q - 1) / 2 * mid - 1;
}

std::size_t max_admissible_t(const CosetFamily& f, std::uint64_t q, std::uint32_t n) {
    const std::uint64_t b = trace_bound(q, n);
    std::size_t t = 0;
    while (t + 1 < f.reps.size() && f.reps[t + 1] < b) ++t;
    return t;
}

}  // namespace trc
