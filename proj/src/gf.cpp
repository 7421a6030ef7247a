#include "trc/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace trc {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace gfpoly {

static void normalize(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

static Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    normalize(r);
    return r;
}

static std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::uint32_t r = 1;
    std::uint32_t e = p - 2;
    std::uint64_t base = a % p;
    while (e) {
        if (e & 1) r = static_cast<std::uint32_t>(r * base % p);
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

static Poly mod(Poly a, const Poly& f, std::uint32_t p) {
    normalize(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t il = inv_mod_p(f.back(), p);
    while (a.size() > df) {
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * il % p;
        const std::size_t shift = a.size() - 1 - df;
        if (c) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::uint64_t t = a[shift + i] + static_cast<std::uint64_t>(p) * p -
                                  c * f[i] % p;
                a[shift + i] = static_cast<std::uint32_t>(t % p);
            }
        }
        a.pop_back();
        normalize(a);
        if (a.empty()) break;
    }
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    return mod(mul(a, b, p), f, p);
}

Poly powmod(Poly a, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly r{1};
    a = mod(std::move(a), f, p);
    while (e) {
        if (e & 1) r = mulmod(r, a, f, p);
        a = mulmod(a, a, f, p);
        e >>= 1;
    }
    return r;
}

static Poly gcd(Poly a, Poly b, std::uint32_t p) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    const Poly x = mod({0, 1}, f, p);
    // X^(p^m) == X mod f, and gcd(X^(p^(m/l)) - X, f) trivial for prime l | m
    Poly t = x;
    for (std::size_t i = 0; i < m; ++i) t = powmod(t, p, f, p);
    if (t != x) return false;
    for (std::uint64_t ell : prime_factors(m)) {
        Poly u = x;
        for (std::size_t i = 0; i < m / ell; ++i) u = powmod(u, p, f, p);
        Poly diff(std::max(u.size(), x.size()), 0);
        for (std::size_t i = 0; i < diff.size(); ++i) {
            std::uint32_t ui = i < u.size() ? u[i] : 0;
            std::uint32_t xi = i < x.size() ? x[i] : 0;
            diff[i] = (ui + p - xi) % p;
        }
        Poly g = gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace gfpoly

// ---------------------------------------------------------------------------
// Conway polynomial data file

namespace {

std::string g_conway_path;  // empty = resolve lazily

std::string resolve_conway_path() {
    if (!g_conway_path.empty()) return g_conway_path;
    if (const char* env = std::getenv("TRC_CONWAY_PATH"); env && *env) return env;
#ifdef TRC_CONWAY_DEFAULT_PATH
    {
        std::ifstream probe(TRC_CONWAY_DEFAULT_PATH);
        if (probe.good()) return TRC_CONWAY_DEFAULT_PATH;
    }
#endif
    return "data/conway_polynomials.txt";
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& conway_cache() {
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> cache;
    return cache;
}

std::mutex g_conway_mutex;

}  // namespace

void set_conway_path(const std::string& path) {
    std::lock_guard<std::mutex> lk(g_conway_mutex);
    g_conway_path = path;
    conway_cache().clear();
}

const std::string& conway_path() { return g_conway_path; }

std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t m) {
    std::lock_guard<std::mutex> lk(g_conway_mutex);
    auto& cache = conway_cache();
    if (cache.empty()) {
        const std::string path = resolve_conway_path();
        std::ifstream in(path);
        if (!in.good())
            throw MissingConwayEntry("cannot open Conway polynomial data file: " + path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ss(line);
            std::uint32_t lp, lm;
            if (!(ss >> lp >> lm)) continue;
            std::vector<std::uint32_t> coeffs;
            std::uint32_t c;
            while (ss >> c) coeffs.push_back(c);
            if (coeffs.size() == lm + 1) cache[{lp, lm}] = std::move(coeffs);
        }
    }
    auto it = cache.find({p, m});
    if (it == cache.end())
        throw MissingConwayEntry("no Conway polynomial for p=" + std::to_string(p) +
                                 " m=" + std::to_string(m) + " in data file");
    return it->second;
}

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::create(std::uint32_t p, std::uint32_t m,
                       std::optional<std::vector<std::uint32_t>> modulus,
                       std::uint64_t table_budget) {
    if (!is_prime(p)) throw NonPrimeCharacteristic("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw ReducibleModulus("extension degree must be >= 1");

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (f->q_ > (std::uint64_t{1} << 31) / p)
            throw TableBudgetExceeded("p^m exceeds the supported element range");
        f->q_ *= p;
    }
    if (modulus) {
        f->modulus_ = std::move(*modulus);
        for (auto& c : f->modulus_) c %= p;
        if (f->modulus_.size() != m + 1 || f->modulus_.back() != 1)
            throw ReducibleModulus("modulus must be monic of degree m");
        f->conway_built_ = false;
    } else {
        f->modulus_ = conway_polynomial(p, m);
        f->conway_built_ = true;
    }
    if (!gfpoly::is_irreducible(f->modulus_, p))
        throw ReducibleModulus("modulus polynomial is reducible over GF(" + std::to_string(p) + ")");

    f->pw_.resize(m + 1);
    f->pw_[0] = 1;
    for (std::uint32_t i = 1; i <= m; ++i) f->pw_[i] = f->pw_[i - 1] * p;

    if (f->q_ <= table_budget) f->build_tables(table_budget);
    return f;
}

std::uint32_t Field::pack(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < digits.size() && i < m_; ++i) v += std::uint64_t{digits[i] % p_} * pw_[i];
    return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> Field::unpack(std::uint32_t v) const {
    std::vector<std::uint32_t> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) d[i] = static_cast<std::uint32_t>(v / pw_[i] % p_);
    return d;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint64_t da = a / pw_[i] % p_, db = b / pw_[i] % p_;
        out += (da + db) % p_ * pw_[i];
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint64_t da = a / pw_[i] % p_;
        out += (p_ - da) % p_ * pw_[i];
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const {
    return p_ == 2 ? (a ^ b) : add(a, neg(b));
}

std::uint32_t Field::mul_by_x(std::uint32_t a) const {
    auto d = unpack(a);
    const std::uint32_t top = d[m_ - 1];
    for (std::uint32_t i = m_; i-- > 1;) d[i] = d[i - 1];
    d[0] = 0;
    if (top) {
        for (std::uint32_t i = 0; i < m_; ++i)
            d[i] = static_cast<std::uint32_t>((d[i] + std::uint64_t{top} * (p_ - modulus_[i])) % p_);
    }
    return pack(d);
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t acc = 0;
    std::uint32_t xb = b;
    for (std::uint32_t i = 0; i < m_; ++i) {
        const std::uint32_t da = static_cast<std::uint32_t>(a / pw_[i] % p_);
        for (std::uint32_t c = 0; c < da; ++c) acc = add(acc, xb);
        xb = mul_by_x(xb);
    }
    return acc;
}

void Field::build_tables(std::uint64_t) {
    // candidate generators: X first (primitive for Conway moduli), then all
    // packed values ascending
    std::vector<std::uint32_t> cands;
    if (m_ > 1) cands.push_back(static_cast<std::uint32_t>(pw_[1]));
    for (std::uint32_t v = 2; v < q_; ++v) cands.push_back(v);
    if (q_ == 2) cands.push_back(1);

    const auto factors = prime_factors(q_ - 1);
    auto order_ok = [&](std::uint32_t g) {
        // order check by repeated multiplication up front is wasteful; first
        // rule out candidates with g^((q-1)/l) == 1 using slow exponentiation
        for (std::uint64_t ell : factors) {
            std::uint64_t e = (q_ - 1) / ell;
            std::uint32_t r = 1, base = g;
            while (e) {
                if (e & 1) r = mul_slow(r, base);
                base = mul_slow(base, base);
                e >>= 1;
            }
            if (r == 1) return false;
        }
        return true;
    };

    std::uint32_t g = 0;
    for (std::uint32_t c : cands) {
        if (c && order_ok(c)) {
            g = c;
            break;
        }
    }
    if (g == 0 && q_ == 2) g = 1;
    generator_ = g;

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    std::uint32_t t = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = t;
        log_[t] = static_cast<std::int64_t>(i);
        t = mul_slow(t, g);
    }
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
    return mul_slow(a, b);
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("multiplicative inverse of zero");
    if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, static_cast<std::int64_t>(q_) - 2);
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const {
    if (b == 0) throw DivisionByZero("division by zero");
    return mul(a, inv(b));
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw DivisionByZero("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const std::int64_t ord = static_cast<std::int64_t>(q_) - 1;
    std::int64_t er = e % ord;
    if (er < 0) er += ord;
    if (!exp_.empty()) return exp_[static_cast<std::uint64_t>(log_[a]) * er % (q_ - 1)];
    std::uint32_t r = 1, base = a;
    std::uint64_t ee = static_cast<std::uint64_t>(er);
    while (ee) {
        if (ee & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        ee >>= 1;
    }
    return r;
}

std::uint32_t Field::frobenius(std::uint32_t a, std::uint32_t k) const {
    if (a == 0) return 0;
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < k % m_; ++i) e = e * p_ % (q_ - 1);
    if (!exp_.empty()) return exp_[static_cast<std::uint64_t>(log_[a]) * e % (q_ - 1)];
    return pow(a, static_cast<std::int64_t>(e));
}

std::uint32_t Field::trace_raw(std::uint32_t a, std::uint32_t sub_degree) const {
    if (sub_degree == 0 || m_ % sub_degree != 0)
        throw NonDivisorDegree("trace target degree must divide field degree");
    std::uint32_t acc = 0, t = a;
    for (std::uint32_t i = 0; i < m_ / sub_degree; ++i) {
        acc = add(acc, t);
        t = frobenius(t, sub_degree);
    }
    return acc;
}

std::uint32_t Field::scalar_mul(std::uint64_t c, std::uint32_t a) const {
    std::uint32_t acc = 0;
    for (std::uint64_t i = 0; i < c % p_; ++i) acc = add(acc, a);
    return acc;
}

std::uint32_t Field::generator() const {
    if (exp_.empty()) throw TableBudgetExceeded("no generator tables for this field size");
    return generator_;
}

std::uint64_t Field::dlog(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("discrete log of zero");
    if (log_.empty()) throw TableBudgetExceeded("no log tables for this field size");
    return static_cast<std::uint64_t>(log_[a]);
}

std::uint32_t Field::from_dlog(std::uint64_t e) const {
    if (exp_.empty()) throw TableBudgetExceeded("no log tables for this field size");
    return exp_[e % (q_ - 1)];
}

std::uint64_t Field::element_order(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("order of zero");
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t ell : prime_factors(q_ - 1)) {
        while (ord % ell == 0 && pow(a, static_cast<std::int64_t>(ord / ell)) == 1) ord /= ell;
    }
    return ord;
}

std::string Field::describe() const {
    if (m_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

// ---------------------------------------------------------------------------
// FieldElement

static void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field().get() != b.field().get())
        throw FieldMismatch("operands belong to different fields");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    return {a.field(), a.field()->add(a.value(), b.value())};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    return {a.field(), a.field()->sub(a.value(), b.value())};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    return {a.field(), a.field()->mul(a.value(), b.value())};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    return {a.field(), a.field()->div(a.value(), b.value())};
}

// ---------------------------------------------------------------------------
// SubfieldEmbedding

SubfieldEmbedding::SubfieldEmbedding(FieldPtr sub, FieldPtr sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
    if (sub_->characteristic() != sup_->characteristic() || sup_->degree() % sub_->degree() != 0)
        throw NonDivisorDegree("subfield degree must divide the extension degree");

    const std::uint64_t e = (sup_->size() - 1) / (sub_->size() - 1);

    auto is_root_of_sub_modulus = [&](std::uint32_t c) {
        std::uint32_t acc = 0, pwc = 1;
        for (std::uint32_t co : sub_->modulus()) {
            acc = sup_->add(acc, sup_->scalar_mul(co, pwc));
            pwc = sup_->mul(pwc, c);
        }
        return acc == 0;
    };

    // Preferred image g^e (exact for Conway-compatible moduli); otherwise scan
    // the unique order-(q'-1) subgroup for a root of the sub modulus.
    std::uint32_t img = 0;
    if (sub_->degree() == sup_->degree() && sub_->modulus() == sup_->modulus()) {
        // identity embedding: X maps to X
        img = sub_->degree() >= 2 ? static_cast<std::uint32_t>(sup_->characteristic())
                                  : (sup_->characteristic() - sub_->modulus()[0]) % sup_->characteristic();
    } else {
        std::uint32_t cand = sup_->from_dlog(e % (sup_->size() - 1));
        if (is_root_of_sub_modulus(cand)) {
            img = cand;
        } else {
            for (std::uint64_t j = 0; j + 1 < sub_->size(); ++j) {
                cand = sup_->from_dlog(e * j % (sup_->size() - 1));
                if (is_root_of_sub_modulus(cand)) {
                    img = cand;
                    break;
                }
            }
        }
        if (img == 0) throw NotInSubfield("no embedding image found (internal)");
    }
    image_of_x_ = img;
    if (sub_->conway_built() && sub_->size() > 2 &&
        sup_->element_order(image_of_x_) != sub_->size() - 1)
        throw NotInSubfield("embedding image has wrong multiplicative order (internal)");

    embed_tab_.assign(sub_->size(), 0);
    project_tab_.assign(sup_->size(), -1);
    for (std::uint64_t v = 0; v < sub_->size(); ++v) {
        // evaluate the coordinate polynomial of v at image_of_x_
        std::uint32_t acc = 0, pwc = 1;
        for (std::uint32_t d : sub_->unpack(static_cast<std::uint32_t>(v))) {
            acc = sup_->add(acc, sup_->scalar_mul(d, pwc));
            pwc = sup_->mul(pwc, image_of_x_);
        }
        embed_tab_[v] = acc;
        project_tab_[acc] = static_cast<std::int64_t>(v);
    }
}

std::optional<std::uint32_t> SubfieldEmbedding::try_project(std::uint32_t b) const {
    const std::int64_t v = project_tab_[b];
    if (v < 0) return std::nullopt;
    return static_cast<std::uint32_t>(v);
}

FieldElement SubfieldEmbedding::embed(const FieldElement& a) const {
    if (a.field().get() != sub_.get()) throw FieldMismatch("element not in the embedding's subfield");
    return {sup_, embed_tab_[a.value()]};
}

std::optional<FieldElement> SubfieldEmbedding::try_project(const FieldElement& b) const {
    if (b.field().get() != sup_.get()) throw FieldMismatch("element not in the embedding's superfield");
    auto v = try_project(b.value());
    if (!v) return std::nullopt;
    return FieldElement{sub_, *v};
}

FieldElement trace_between(const FieldElement& a, const SubfieldEmbedding& e) {
    const auto& f = a.field();
    if (f.get() != e.sup().get()) throw FieldMismatch("element not in the embedding's superfield");
    const std::uint32_t raw = f->trace_raw(a.value(), e.sub()->degree());
    auto v = e.try_project(raw);
    if (!v) throw NotInSubfield("trace value outside target subfield (internal)");
    return FieldElement{e.sub(), *v};
}

}  // namespace trc
