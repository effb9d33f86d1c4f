#pragma once

// Exact arithmetic in GF(p^e).
//
// Elements are stored as a 16-bit index into the canonical element order of
// the field: the coefficient vector (c_0, ..., c_{e-1}) over Z/p, in the power
// basis of a root of the modulus, compared lexicographically (c_0 first).
// Index 0 is always the zero element.  Small fields (<= 256 elements) carry
// full addition and multiplication tables built from the polynomial
// arithmetic; larger fields fall back to digit-wise arithmetic.

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hcodes {

struct Elem {
    std::uint16_t v = 0;

    constexpr bool is_zero() const { return v == 0; }
    friend constexpr auto operator<=>(const Elem &, const Elem &) = default;
};

class FieldError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

class GaloisField {
  public:
    // Canonical field for (p, e); instances are cached and shared.
    static FieldPtr make(std::uint32_t p, std::uint32_t e);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint32_t size() const { return size_; }
    // Monic modulus over Z/p, little-endian, length e + 1.
    const std::vector<std::uint32_t> &modulus() const { return modulus_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return one_; }
    Elem from_index(std::uint32_t i) const;
    // Image of an integer in the prime subfield.
    Elem from_int(long long n) const;

    std::vector<std::uint32_t> digits(Elem a) const;
    Elem from_digits(const std::vector<std::uint32_t> &digits) const;

    Elem add(Elem a, Elem b) const
    {
        if (!add_table_.empty())
            return add_table_[static_cast<std::size_t>(a.v) * size_ + b.v];
        return add_slow(a, b);
    }
    Elem neg(Elem a) const { return neg_table_[a.v]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const
    {
        if (!mul_table_.empty())
            return mul_table_[static_cast<std::size_t>(a.v) * size_ + b.v];
        return mul_slow(a, b);
    }
    // Throws FieldError on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t k) const;
    // a^(p^k)
    Elem frobenius(Elem a, std::uint32_t k) const;

    // Norm and trace to the index-2 subfield F_q (q^2 = size).  Throws when e
    // is odd.
    std::uint32_t subfield_order() const;
    Elem norm(Elem a) const;
    Elem trace(Elem a) const;
    bool in_subfield(Elem a) const;

    // Smallest element (in canonical order) of multiplicative order size-1.
    Elem generator() const { return generator_; }
    std::uint64_t multiplicative_order(Elem a) const;

    // Little-endian digit string, one character per digit for p <= 36,
    // comma separated decimal digits otherwise.
    std::string to_string(Elem a) const;
    Elem parse(std::string_view text) const;
    // Readable form such as "w^2+2w+1" with w the modulus root.
    std::string pretty(Elem a) const;

    bool same_as(const GaloisField &other) const { return p_ == other.p_ && e_ == other.e_; }

    GaloisField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

  private:
    Elem add_slow(Elem a, Elem b) const;
    Elem mul_slow(Elem a, Elem b) const;
    Elem inv_euclid(Elem a) const;

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint32_t size_;
    std::vector<std::uint32_t> modulus_;
    Elem one_;
    Elem generator_;
    std::vector<std::uint32_t> place_; // p^(e-1-i) for digit i
    std::vector<Elem> add_table_;
    std::vector<Elem> mul_table_;
    std::vector<Elem> neg_table_;
    std::vector<Elem> inv_table_;
};

// Polynomials over Z/p used for modulus selection (little-endian).
namespace prime_poly {
    bool is_prime(std::uint64_t n);
    bool is_irreducible(const std::vector<std::uint32_t> &f, std::uint32_t p);
    // True when the class of t has order p^deg - 1 modulo f.
    bool is_primitive(const std::vector<std::uint32_t> &f, std::uint32_t p);
    // Built-in table entry for (p, e), or a deterministic search result when
    // the table has no entry.
    std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t e);
} // namespace prime_poly

// Value type pairing an element with its field, for callers that want
// operator syntax.  Mixing fields throws FieldError.
class FieldElement {
  public:
    FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {}

    const FieldPtr &field() const { return field_; }
    Elem value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    FieldElement operator+(const FieldElement &o) const;
    FieldElement operator-(const FieldElement &o) const;
    FieldElement operator*(const FieldElement &o) const;
    FieldElement operator/(const FieldElement &o) const;
    FieldElement operator-() const { return {field_, field_->neg(value_)}; }
    FieldElement inverse() const { return {field_, field_->inv(value_)}; }
    FieldElement frobenius(std::uint32_t k) const { return {field_, field_->frobenius(value_, k)}; }

    bool operator==(const FieldElement &o) const
    {
        return field_->same_as(*o.field_) && value_ == o.value_;
    }

  private:
    void check_same(const FieldElement &o) const;

    FieldPtr field_;
    Elem value_;
};

enum class ArithOp { add, sub, mul, div };
FieldElement arith(const FieldElement &a, const FieldElement &b, ArithOp op);

struct NormTrace {
    FieldElement norm;
    FieldElement trace;
};
NormTrace norm_trace(const FieldElement &x);

} // namespace hcodes
