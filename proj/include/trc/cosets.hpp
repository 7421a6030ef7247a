// Cyclotomic cosets of Z/(p^{2r}-1) under multiplication by p^{2s}, minimal
// representatives, consecutive unions and the self-orthogonality threshold.
#pragma once

#include <cstdint>
#include <vector>

#include "trc/errors.hpp"

namespace trc {

struct Coset {
    std::uint64_t rep = 0;              // minimum member
    std::vector<std::uint64_t> members; // sorted ascending
    std::size_t size() const noexcept { return members.size(); }
};

struct CosetFamily {
    std::uint64_t modulus = 0;  // p^{2r} - 1
    std::uint64_t base = 0;     // p^{2s}
    std::vector<Coset> cosets;  // sorted by rep; cosets[0] = {0}
    std::vector<std::uint64_t> reps;

    const Coset& at(std::size_t t) const {
        if (t >= cosets.size()) throw IndexOutOfRange("coset index out of range");
        return cosets[t];
    }
};

struct ExponentSet {
    std::vector<std::uint64_t> members;  // ascending
    bool closed_under_base = false;
};

// Minimal cyclotomic cosets of Z/(p^{2r}-1) with respect to p^{2s}; requires
// s | r.
CosetFamily cyclotomic_cosets(std::uint32_t p, std::uint32_t s, std::uint32_t r);

// Union of the first t+1 minimal cosets by representative order.
ExponentSet delta_sigma(const CosetFamily& f, std::size_t t);
// Union of the t cosets with smallest nonzero representatives (the coset of 0
// excluded); used by the length N-1 construction.
ExponentSet delta_sigma_nonzero(const CosetFamily& f, std::size_t t);

// q^n - floor((q-1)/2) * (q^{n-1} + ... + q) - 1
std::uint64_t trace_bound(std::uint64_t q, std::uint32_t n);

// Largest t with reps[t] < trace_bound(q, n); always >= 0 since reps[0] = 0.
std::size_t max_admissible_t(const CosetFamily& f, std::uint64_t q, std::uint32_t n);

}  // namespace trc
