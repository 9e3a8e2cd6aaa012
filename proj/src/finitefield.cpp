#include "ecmoment/finitefield.hpp"

#include "ecmoment/numtheory.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ecm {

namespace {

using Poly = std::vector<int>; // coefficients mod p, ascending degree

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
    int dm = (int)m.size() - 1;
    while ((int)a.size() > dm) {
        int da = (int)a.size() - 1;
        int lead = a.back();
        if (lead != 0) {
            // m is monic: subtract lead * x^(da-dm) * m
            for (int i = 0; i <= dm; ++i) {
                int& c = a[da - dm + i];
                c = (int)mod_reduce(c - (std::int64_t)lead * m[i], p);
            }
        }
        a.pop_back();
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (int)mod_reduce(r[i + j] + (std::int64_t)a[i] * b[j], p);
    }
    return r;
}

bool poly_is_zero(const Poly& a) {
    for (int c : a)
        if (c) return false;
    return true;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, std::int64_t p) {
    int n = (int)f.size() - 1;
    if (n == 1) return true;
    for (int d = 1; 2 * d <= n; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::int64_t c = code;
            for (int i = 0; i < d; ++i) { g[i] = (int)(c % p); c /= p; }
            // f mod g == 0 ?
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

std::uint32_t poly_to_index(const Poly& a, std::int64_t p, int n) {
    std::uint32_t idx = 0;
    for (int i = n - 1; i >= 0; --i) idx = (std::uint32_t)(idx * p + (i < (int)a.size() ? a[i] : 0));
    return idx;
}

Poly index_to_poly(std::uint32_t idx, std::int64_t p, int n) {
    Poly a(n, 0);
    for (int i = 0; i < n; ++i) { a[i] = (int)(idx % p); idx = (std::uint32_t)(idx / p); }
    return a;
}

} // namespace

std::shared_ptr<const FieldCtx> FieldCtx::make(std::int64_t p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("FieldCtx: p must be prime");
    if (n < 1) throw std::invalid_argument("FieldCtx: degree must be >= 1");

    static std::mutex mu;
    static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const FieldCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, n});
    if (it != cache.end()) return it->second;

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->n_ = n;
    ctx->q_ = 1;
    for (int i = 0; i < n; ++i) {
        ctx->q_ *= p;
        if (ctx->q_ > 1 << 10) throw std::invalid_argument("FieldCtx: q too large for table-based field");
    }

    if (n == 1) {
        ctx->modulus_ = {0, 1}; // x
    } else {
        // Lexicographic scan over (c0, ..., c_{n-1}) with c0 as strongest key.
        bool found = false;
        std::vector<int> c(n, 0);
        while (!found) {
            Poly f(c);
            f.push_back(1);
            if (is_irreducible(f, p)) {
                ctx->modulus_ = f;
                found = true;
                break;
            }
            int i = n - 1;
            while (i >= 0 && c[i] == p - 1) { c[i] = 0; --i; }
            if (i < 0) throw std::logic_error("FieldCtx: no irreducible found"); // unreachable
            ++c[i];
        }
    }

    ctx->build_tables();
    cache.emplace(std::make_pair(p, n), ctx);
    return ctx;
}

std::shared_ptr<const FieldCtx> FieldCtx::for_prime_power(std::int64_t q) {
    auto f = factorize(q);
    if (f.factors.size() != 1)
        throw std::invalid_argument("FieldCtx: q must be a prime power");
    return make(f.factors[0].prime, f.factors[0].exponent);
}

void FieldCtx::build_tables() {
    std::int64_t q = q_;
    add_.resize((size_t)q * q);
    mul_.resize((size_t)q * q);
    neg_.resize((size_t)q);
    inv_.assign((size_t)q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
        Poly pa = index_to_poly(a, p_, n_);
        Poly na(n_, 0);
        for (int i = 0; i < n_; ++i) na[i] = (int)mod_reduce(-pa[i], p_);
        neg_[a] = (std::uint16_t)poly_to_index(na, p_, n_);
        for (std::uint32_t b = 0; b < q; ++b) {
            Poly pb = index_to_poly(b, p_, n_);
            Poly s(n_, 0);
            for (int i = 0; i < n_; ++i) s[i] = (int)mod_reduce(pa[i] + pb[i], p_);
            add_[a * q + b] = (std::uint16_t)poly_to_index(s, p_, n_);
            Poly m = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
            mul_[a * q + b] = (std::uint16_t)poly_to_index(m, p_, n_);
        }
    }
    // Inverses by scan of the multiplication table.
    for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) { inv_[a] = (std::uint16_t)b; break; }
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("FieldCtx: inverse of zero");
    return inv_[a];
}

FieldElem FieldCtx::from_integer(std::int64_t v) const {
    return {this, (std::uint32_t)mod_reduce(v, p_)};
}

FieldElem FieldCtx::from_coefficients(const std::vector<int>& coeffs) const {
    if ((int)coeffs.size() > n_) throw std::invalid_argument("FieldCtx: too many coefficients");
    Poly a(n_, 0);
    for (size_t i = 0; i < coeffs.size(); ++i) a[i] = (int)mod_reduce(coeffs[i], p_);
    return {this, poly_to_index(a, p_, n_)};
}

std::vector<FieldElem> FieldCtx::enumerate() const {
    std::vector<FieldElem> out;
    out.reserve((size_t)q_);
    for (std::uint32_t i = 0; i < q_; ++i) out.emplace_back(this, i);
    return out;
}

std::string FieldCtx::modulus_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = n_; i >= 0; --i) {
        int c = modulus_[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        if (i == 0 || c != 1) os << c;
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<int> FieldElem::coefficients() const {
    return index_to_poly(idx_, ctx_->p(), ctx_->degree());
}

FieldElem FieldElem::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem r = ctx_->one(), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

} // namespace ecm
