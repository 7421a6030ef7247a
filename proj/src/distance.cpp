#include "trc/distance.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace trc {

std::uint64_t hamming_weight(std::span<const std::uint32_t> v) {
    return static_cast<std::uint64_t>(std::count_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; }));
}

namespace {

// q^k with saturation at 2^63
std::uint64_t pow_sat(std::uint64_t q, std::size_t k) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t{1} << 63) / q) return std::uint64_t{1} << 63;
        r *= q;
    }
    return r;
}

struct Enumerator {
    // scaled[i][c] = c * row_i, for every field value c
    const Field& F;
    std::size_t k, n;
    std::vector<std::vector<std::vector<std::uint32_t>>> scaled;
    std::vector<std::vector<std::uint32_t>> partial;

    Enumerator(const Matrix& rows) : F(*rows.field()), k(rows.rows()), n(rows.cols()) {
        scaled.resize(k);
        for (std::size_t i = 0; i < k; ++i) {
            scaled[i].resize(F.size());
            for (std::uint64_t c = 0; c < F.size(); ++c) {
                auto& v = scaled[i][c];
                v.resize(n);
                for (std::size_t j = 0; j < n; ++j)
                    v[j] = F.mul(static_cast<std::uint32_t>(c), rows.at(i, j));
            }
        }
        partial.assign(k + 1, std::vector<std::uint32_t>(n, 0));
    }

    // visit(weight, codeword) for every codeword including zero
    template <class Fn>
    void run(Fn&& visit) {
        rec(0, visit);
    }

    template <class Fn>
    void rec(std::size_t lvl, Fn& visit) {
        if (lvl == k) {
            visit(partial[k]);
            return;
        }
        auto& cur = partial[lvl + 1];
        const auto& prev = partial[lvl];
        for (std::uint64_t c = 0; c < F.size(); ++c) {
            if (c == 0) {
                cur = prev;
            } else {
                const auto& sc = scaled[lvl][c];
                if (F.characteristic() == 2) {
                    for (std::size_t j = 0; j < n; ++j) cur[j] = prev[j] ^ sc[j];
                } else {
                    for (std::size_t j = 0; j < n; ++j) cur[j] = F.add(prev[j], sc[j]);
                }
            }
            rec(lvl + 1, visit);
        }
    }
};

}  // namespace

DistanceResult exact_distance_enum(const Matrix& g, std::uint64_t budget) {
    DistanceResult res;
    res.method = "enum";
    const Matrix rows = rref(g).r;
    const std::size_t k = rows.rows();
    const std::size_t n = g.cols();
    if (k == 0) {
        res.lb = res.ub = n + 1;  // no nonzero codeword
        res.exact = true;
        return res;
    }
    const std::uint64_t total = pow_sat(g.field()->size(), k);
    if (total > budget)
        throw BudgetExceeded("q^k = " + std::to_string(total) + " exceeds the budget");

    std::uint64_t best = n + 1;
    std::vector<std::uint32_t> witness;
    Enumerator en(rows);
    en.run([&](const std::vector<std::uint32_t>& w) {
        ++res.work_spent;
        const std::uint64_t wt = hamming_weight(w);
        if (wt > 0 && wt < best) {
            best = wt;
            witness = w;
        }
    });
    res.lb = res.ub = best;
    res.exact = true;
    if (!witness.empty()) res.witness = std::move(witness);
    return res;
}

namespace {

// Enumerate weight-w messages over the rows of M, visiting each codeword.
// Returns false if the budget ran out mid-pass.
template <class Fn>
bool enum_weight_w(const Matrix& M, std::size_t w, std::uint64_t budget, std::uint64_t& spent,
                   Fn&& visit) {
    const Field& F = *M.field();
    const std::size_t k = M.rows(), n = M.cols();
    std::vector<std::size_t> supp(w);
    std::vector<std::vector<std::uint32_t>> partial(w + 1, std::vector<std::uint32_t>(n, 0));

    // recursive support selection with per-position nonzero coefficients
    auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
        if (depth == w) {
            if (spent >= budget) return false;
            ++spent;
            visit(partial[w]);
            return true;
        }
        for (std::size_t pos = start; pos + (w - depth) <= k; ++pos) {
            supp[depth] = pos;
            for (std::uint64_t c = 1; c < F.size(); ++c) {
                auto& cur = partial[depth + 1];
                const auto& prev = partial[depth];
                for (std::size_t j = 0; j < n; ++j)
                    cur[j] = F.add(prev[j], F.mul(static_cast<std::uint32_t>(c), M.at(pos, j)));
                if (!self(self, depth + 1, pos + 1)) return false;
            }
        }
        return true;
    };
    return rec(rec, 0, 0);
}

}  // namespace

DistanceResult brouwer_zimmermann(const Matrix& g, std::uint64_t budget) {
    DistanceResult res;
    res.method = "bz";
    const Matrix base = rref(g).r;
    const std::size_t k = base.rows();
    const std::size_t n = g.cols();
    if (k == 0) {
        res.lb = res.ub = n + 1;
        res.exact = true;
        return res;
    }

    // disjoint information sets: repeatedly eliminate with pivots restricted
    // to columns not used by earlier sets
    struct InfoSet {
        Matrix gen;          // k x n, systematic on its pivot columns
        std::size_t rank;    // pivots found among the unused columns
    };
    std::vector<InfoSet> sets;
    std::vector<bool> used(n, false);
    const Field& F = *g.field();
    while (true) {
        Matrix w = base;
        std::vector<std::size_t> piv;
        std::size_t rr = 0;
        for (std::size_t c = 0; c < n && rr < k; ++c) {
            if (used[c]) continue;
            std::size_t sel = k;
            for (std::size_t i = rr; i < k; ++i)
                if (w.at(i, c)) {
                    sel = i;
                    break;
                }
            if (sel == k) continue;
            if (sel != rr)
                for (std::size_t j = 0; j < n; ++j) std::swap(w.at(sel, j), w.at(rr, j));
            const std::uint32_t iv = F.inv(w.at(rr, c));
            if (iv != 1)
                for (std::size_t j = 0; j < n; ++j)
                    if (w.at(rr, j)) w.at(rr, j) = F.mul(iv, w.at(rr, j));
            for (std::size_t i = 0; i < k; ++i) {
                if (i == rr || !w.at(i, c)) continue;
                const std::uint32_t f = w.at(i, c);
                for (std::size_t j = 0; j < n; ++j)
                    if (w.at(rr, j)) w.at(i, j) = F.sub(w.at(i, j), F.mul(f, w.at(rr, j)));
            }
            piv.push_back(c);
            ++rr;
        }
        if (piv.empty()) break;
        for (auto c : piv) used[c] = true;
        sets.push_back({std::move(w), piv.size()});
    }

    std::uint64_t ub = n + 1;
    std::vector<std::uint32_t> witness;
    std::uint64_t lb = 1;
    bool budget_ok = true;
    for (std::size_t w = 1; w <= k && budget_ok; ++w) {
        for (auto& is : sets) {
            budget_ok = enum_weight_w(is.gen, w, budget, res.work_spent,
                                      [&](const std::vector<std::uint32_t>& cw) {
                                          const std::uint64_t wt = hamming_weight(cw);
                                          if (wt > 0 && wt < ub) {
                                              ub = wt;
                                              witness = cw;
                                          }
                                      });
            if (!budget_ok) break;
        }
        if (budget_ok) {
            // all messages of weight <= w enumerated on every set
            std::uint64_t bound = 0;
            for (const auto& is : sets) {
                const std::uint64_t slack = k - is.rank;
                if (w + 1 > slack) bound += w + 1 - slack;
            }
            lb = std::max<std::uint64_t>(lb, bound);
        }
        if (lb >= ub) break;
    }
    res.lb = std::min(lb, ub);
    res.ub = ub;
    res.exact = res.lb >= res.ub && ub <= n;
    if (!witness.empty()) res.witness = std::move(witness);
    if (res.exact) res.lb = res.ub;
    return res;
}

std::optional<std::vector<std::uint32_t>> low_weight_search(const Matrix& g, std::uint64_t target_w,
                                                            std::uint64_t trials, std::uint64_t seed) {
    if (target_w < 1) throw BudgetExceeded("target weight must be >= 1");
    const Matrix base = rref(g).r;
    const std::size_t k = base.rows();
    const std::size_t n = g.cols();
    if (k == 0) return std::nullopt;
    const Field& F = *g.field();

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    std::uint64_t spent = 0;
    std::vector<std::uint32_t> cand(n);
    auto deliver = [&](const Matrix& M, std::size_t i, std::size_t j, std::uint32_t c,
                       const std::vector<std::size_t>& colmap) -> bool {
        // candidate = row_i (+ c*row_j), written back to original coordinates
        std::uint64_t wt = 0;
        for (std::size_t col = 0; col < n; ++col) {
            std::uint32_t v = M.at(i, col);
            if (c) v = F.add(v, F.mul(c, M.at(j, col)));
            cand[colmap[col]] = v;
            if (v) ++wt;
        }
        return wt >= 1 && wt <= target_w;
    };

    while (spent < trials) {
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix M(g.field(), k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) M.at(i, j) = base.at(i, perm[j]);
        M = rref(M).r;
        // systematic rows
        for (std::size_t i = 0; i < M.rows() && spent < trials; ++i) {
            ++spent;
            if (deliver(M, i, 0, 0, perm)) {
                std::vector<std::uint32_t> w = cand;
                if (hamming_weight(w) <= target_w && row_space_contains(g, w)) return w;
            }
        }
        // row pairs with all nonzero coefficients
        for (std::size_t i = 0; i < M.rows() && spent < trials; ++i) {
            for (std::size_t j = i + 1; j < M.rows() && spent < trials; ++j) {
                for (std::uint64_t c = 1; c < F.size() && spent < trials; ++c) {
                    ++spent;
                    if (deliver(M, i, j, static_cast<std::uint32_t>(c), perm)) {
                        std::vector<std::uint32_t> w = cand;
                        if (hamming_weight(w) <= target_w && row_space_contains(g, w)) return w;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::uint64_t dual_distance_by_macwilliams(const Matrix& g, std::uint64_t budget) {
    const Matrix rows = rref(g).r;
    const std::size_t k = rows.rows();
    const std::size_t n = g.cols();
    const std::uint64_t q = g.field()->size();
    const std::uint64_t total = pow_sat(q, k);
    if (total > budget) throw BudgetExceeded("weight-enumerator side exceeds the budget");

    std::vector<std::uint64_t> B(n + 1, 0);
    if (k == 0) {
        B[0] = 1;
    } else {
        Enumerator en(rows);
        en.run([&](const std::vector<std::uint32_t>& w) { ++B[hamming_weight(w)]; });
    }

    using i128 = __int128;
    const i128 kLimit = static_cast<i128>(1) << 120;
    auto checked_mul = [&](i128 a, i128 b) {
        const i128 aa = a < 0 ? -a : a, bb = b < 0 ? -b : b;
        if (aa != 0 && bb > kLimit / aa) throw BudgetExceeded("MacWilliams magnitudes out of range");
        return a * b;
    };

    // binomials C(x, y) for x <= n, y <= j cap
    auto binom = [&](std::size_t x, std::size_t y) -> i128 {
        if (y > x) return 0;
        i128 r = 1;
        for (std::size_t i = 1; i <= y; ++i) r = checked_mul(r, static_cast<i128>(x - y + i)) / static_cast<i128>(i);
        return r;
    };

    for (std::size_t j = 1; j <= n; ++j) {
        i128 acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (!B[i]) continue;
            i128 K = 0;
            for (std::size_t l = 0; l <= std::min(i, j); ++l) {
                i128 term = binom(i, l);
                i128 pw = 1;
                for (std::size_t e = 0; e < j - l; ++e) pw = checked_mul(pw, static_cast<i128>(q - 1));
                term = checked_mul(term, pw);
                term = checked_mul(term, binom(n - i, j - l));
                K += (l % 2 == 0) ? term : -term;
            }
            acc += checked_mul(static_cast<i128>(B[i]), K);
        }
        i128 denom = 1;
        for (std::size_t i = 0; i < k; ++i) denom *= static_cast<i128>(q);
        if (acc % denom != 0) throw BudgetExceeded("MacWilliams transform not integral (internal)");
        if (acc / denom > 0) return j;
    }
    return n + 1;  // dual is the zero code
}

}  // namespace trc
