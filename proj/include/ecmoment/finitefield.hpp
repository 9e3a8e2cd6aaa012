#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ecm {

class FieldCtx;

// Element of F_q held as an index into the context's tables.  The index
// encodes the coefficient vector little-endian in base p: index =
// sum_i c_i p^i, so index 0 is the zero element and indices 0..p-1 are the
// prime subfield.
class FieldElem {
public:
    FieldElem() : ctx_(nullptr), idx_(0) {}
    FieldElem(const FieldCtx* ctx, std::uint32_t idx) : ctx_(ctx), idx_(idx) {}

    std::uint32_t index() const { return idx_; }
    const FieldCtx* ctx() const { return ctx_; }
    bool is_zero() const { return idx_ == 0; }

    FieldElem operator+(FieldElem o) const;
    FieldElem operator-(FieldElem o) const;
    FieldElem operator*(FieldElem o) const;
    FieldElem operator-() const;
    FieldElem inverse() const; // throws on zero
    FieldElem pow(std::int64_t e) const;
    bool operator==(const FieldElem& o) const { return idx_ == o.idx_; }
    bool operator!=(const FieldElem& o) const { return idx_ != o.idx_; }

    std::vector<int> coefficients() const; // length n, reduced mod p

private:
    const FieldCtx* ctx_;
    std::uint32_t idx_;
};

// Arithmetic context for F_{p^n}.  The modulus is the lexicographically
// smallest monic irreducible of degree n over F_p, comparing the
// ascending-degree coefficient tuple (c0 first).  Deterministic so censuses
// reproduce bit-for-bit.  Immutable after construction; ops are table
// lookups and reentrant.
class FieldCtx {
public:
    static std::shared_ptr<const FieldCtx> make(std::int64_t p, int n);
    static std::shared_ptr<const FieldCtx> for_prime_power(std::int64_t q);

    std::int64_t p() const { return p_; }
    int degree() const { return n_; }
    std::int64_t q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; } // ascending, monic, length n+1
    std::string modulus_string() const;

    FieldElem zero() const { return {this, 0}; }
    FieldElem one() const { return {this, 1}; }
    FieldElem from_index(std::uint32_t i) const { return {this, i}; }
    FieldElem from_integer(std::int64_t v) const; // embed Z -> F_p subfield
    FieldElem from_coefficients(const std::vector<int>& coeffs) const;

    std::vector<FieldElem> enumerate() const; // all q elements, zero first

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t inv(std::uint32_t a) const; // throws on a = 0

private:
    FieldCtx() = default;
    void build_tables();

    std::int64_t p_ = 0;
    int n_ = 0;
    std::int64_t q_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint16_t> add_, mul_;
    std::vector<std::uint16_t> neg_, inv_;
};

inline FieldElem FieldElem::operator+(FieldElem o) const { return {ctx_, ctx_->add(idx_, o.idx_)}; }
inline FieldElem FieldElem::operator*(FieldElem o) const { return {ctx_, ctx_->mul(idx_, o.idx_)}; }
inline FieldElem FieldElem::operator-() const { return {ctx_, ctx_->neg(idx_)}; }
inline FieldElem FieldElem::operator-(FieldElem o) const { return *this + (-o); }
inline FieldElem FieldElem::inverse() const { return {ctx_, ctx_->inv(idx_)}; }

} // namespace ecm
