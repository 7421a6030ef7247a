#include "trc/matgf.hpp"

#include <algorithm>

namespace trc {

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

namespace {

// v[j] -= f * w[j] over the whole row
void axpy_sub(const Field& F, std::span<std::uint32_t> v, std::uint32_t f,
              std::span<const std::uint32_t> w) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (w[j]) v[j] = F.sub(v[j], F.mul(f, w[j]));
}

}  // namespace

RrefResult rref(const Matrix& m) {
    const Field& F = *m.field();
    Matrix w = m;
    const std::size_t nr = w.rows(), nc = w.cols();
    std::vector<std::size_t> pivots;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < nc && rr < nr; ++c) {
        std::size_t sel = nr;
        for (std::size_t i = rr; i < nr; ++i) {
            if (w.at(i, c)) {
                sel = i;
                break;
            }
        }
        if (sel == nr) continue;
        if (sel != rr) {
            for (std::size_t j = 0; j < nc; ++j) std::swap(w.at(sel, j), w.at(rr, j));
        }
        const std::uint32_t iv = F.inv(w.at(rr, c));
        if (iv != 1)
            for (std::size_t j = 0; j < nc; ++j)
                if (w.at(rr, j)) w.at(rr, j) = F.mul(iv, w.at(rr, j));
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rr) continue;
            const std::uint32_t f = w.at(i, c);
            if (f) axpy_sub(F, w.row(i), f, w.row(rr));
        }
        pivots.push_back(c);
        ++rr;
    }
    Matrix out(m.field(), pivots.size(), nc);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        std::copy(w.row(i).begin(), w.row(i).end(), out.row(i).begin());
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
    const std::size_t nc = m.cols();
    auto [r, piv] = rref(m);
    std::vector<bool> is_piv(nc, false);
    for (auto c : piv) is_piv[c] = true;
    Matrix out(m.field(), nc - piv.size(), nc);
    const Field& F = *m.field();
    std::size_t k = 0;
    for (std::size_t c = 0; c < nc; ++c) {
        if (is_piv[c]) continue;
        out.at(k, c) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) out.at(k, piv[i]) = F.neg(r.at(i, c));
        ++k;
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.field().get() != b.field().get()) throw FieldMismatch("matmul on different fields");
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul dimension mismatch");
    const Field& F = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint32_t v = a.at(i, k);
            if (!v) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const std::uint32_t w = b.at(k, j);
                if (w) out.at(i, j) = F.add(out.at(i, j), F.mul(v, w));
            }
        }
    }
    return out;
}

Matrix conj_transpose(const Matrix& m, std::uint32_t e) {
    const Field& F = *m.field();
    Matrix out(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = F.frobenius(m.at(i, j), e);
    return out;
}

bool row_space_contains(const Matrix& a, std::span<const std::uint32_t> v) {
    if (v.size() != a.cols()) throw DimensionMismatch("vector length mismatch");
    const Field& F = *a.field();
    auto [r, piv] = rref(a);
    std::vector<std::uint32_t> w(v.begin(), v.end());
    for (std::size_t i = 0; i < piv.size(); ++i) {
        const std::uint32_t f = w[piv[i]];
        if (f) axpy_sub(F, w, f, r.row(i));
    }
    return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.field().get() != b.field().get() || a.cols() != b.cols()) return false;
    return rref(a).r == rref(b).r;
}

Matrix stack_rows(const Matrix& a, const Matrix& b) {
    if (a.field().get() != b.field().get()) throw FieldMismatch("stack on different fields");
    if (a.cols() != b.cols()) throw DimensionMismatch("stack column mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        std::copy(a.row(i).begin(), a.row(i).end(), out.row(i).begin());
    for (std::size_t i = 0; i < b.rows(); ++i)
        std::copy(b.row(i).begin(), b.row(i).end(), out.row(a.rows() + i).begin());
    return out;
}

Matrix identity(const FieldPtr& f, std::size_t n) {
    Matrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
}

}  // namespace trc
