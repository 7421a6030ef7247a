// Euclidean and Hermitian duals and Gram-matrix self-orthogonality
// certification. The Hermitian form on GF(p^{2e})^m is
// a *_h b = sum_j a_j b_j^(p^e); conjugation x -> x^(p^e) is an involution.
#pragma once

#include "trc/matgf.hpp"

namespace trc {

struct HermitianContext {
    FieldPtr field;                 // GF(p^{2e})
    std::uint32_t conj_exponent{};  // e

    HermitianContext(FieldPtr f, std::uint32_t e) : field(std::move(f)), conj_exponent(e) {
        if (field->degree() != 2 * e)
            throw FieldMismatch("Hermitian context requires a field of degree 2e");
    }
};

// G * conj_transpose(G); entry (i,j) = row_i *_h row_j.
Matrix hermitian_gram(const Matrix& g, const HermitianContext& ctx);

// True iff the Gram matrix vanishes, i.e. the row space is contained in its
// own Hermitian dual.
bool is_hermitian_self_orthogonal(const Matrix& g, const HermitianContext& ctx);

// Basis of the annihilator under the Hermitian form. Coincides with the
// entrywise p^e-th power of the Euclidean dual basis.
Matrix hermitian_dual(const Matrix& g, const HermitianContext& ctx);
Matrix euclidean_dual(const Matrix& g);

}  // namespace trc
