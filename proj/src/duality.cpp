#include "trc/duality.hpp"

namespace trc {

Matrix hermitian_gram(const Matrix& g, const HermitianContext& ctx) {
    if (g.field().get() != ctx.field.get()) throw FieldMismatch("matrix not over the context field");
    return matmul(g, conj_transpose(g, ctx.conj_exponent));
}

bool is_hermitian_self_orthogonal(const Matrix& g, const HermitianContext& ctx) {
    return hermitian_gram(g, ctx).is_zero();
}

Matrix hermitian_dual(const Matrix& g, const HermitianContext& ctx) {
    if (g.field().get() != ctx.field.get()) throw FieldMismatch("matrix not over the context field");
    const Field& F = *g.field();
    Matrix k = kernel(g);
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
            k.at(i, j) = F.frobenius(k.at(i, j), ctx.conj_exponent);
    return k;
}

Matrix euclidean_dual(const Matrix& g) { return kernel(g); }

}  // namespace trc
