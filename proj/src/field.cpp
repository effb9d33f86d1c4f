#include "hermitian/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace hcodes {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly &f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    // p is prime and small, Fermat is fine
    std::uint64_t result = 1, base = a % p;
    std::uint64_t k = p - 2;
    while (k) {
        if (k & 1)
            result = result * base % p;
        base = base * base % p;
        k >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

Poly pmul(const Poly &a, const Poly &b, std::uint32_t p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

// quotient and remainder of a by nonzero b
std::pair<Poly, Poly> divmod(Poly a, const Poly &b, std::uint32_t p)
{
    trim(a);
    Poly q;
    if (a.size() < b.size())
        return {q, a};
    q.assign(a.size() - b.size() + 1, 0);
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    for (std::size_t i = a.size(); i-- >= b.size();) {
        std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(a[i]) * lead_inv % p);
        if (c == 0)
            continue;
        std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + std::uint64_t(p - c) * b[j]) % p);
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly powmod(Poly base, std::uint64_t k, const Poly &m, std::uint32_t p)
{
    Poly result{1};
    base = divmod(base, m, p).second;
    while (k) {
        if (k & 1)
            result = divmod(pmul(result, base, p), m, p).second;
        base = divmod(pmul(base, base, p), m, p).second;
        k >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 2; r * r <= n; ++r) {
        if (n % r == 0) {
            out.push_back(r);
            while (n % r == 0)
                n /= r;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// Conway polynomials, little-endian.  Entries are re-checked for
// irreducibility and primitivity by the unit tests.
const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> &modulus_table()
{
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> table{
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 2}, {3, 6, 1}},
        {{11, 2}, {2, 7, 1}},
        {{13, 2}, {2, 12, 1}},
    };
    return table;
}

} // namespace

namespace prime_poly {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t r = 2; r * r <= n; ++r)
        if (n % r == 0)
            return false;
    return true;
}

bool is_irreducible(const std::vector<std::uint32_t> &f_in, std::uint32_t p)
{
    Poly f = f_in;
    trim(f);
    if (f.size() < 2)
        return false;
    const std::size_t n = f.size() - 1;
    if (n == 1)
        return true;
    // trial division by every monic polynomial of degree 1..n/2
    for (std::size_t k = 1; k <= n / 2; ++k) {
        const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(k));
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(k + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < k; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[k] = 1;
            if (divmod(f, g, p).second.empty())
                return false;
        }
    }
    return true;
}

bool is_primitive(const std::vector<std::uint32_t> &f_in, std::uint32_t p)
{
    Poly f = f_in;
    trim(f);
    if (!is_irreducible(f, p))
        return false;
    const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
    const std::uint64_t order = ipow(p, n) - 1;
    const Poly t{0, 1};
    if (powmod(t, order, f, p) != Poly{1})
        return false;
    for (auto r : prime_factors(order))
        if (powmod(t, order / r, f, p) == Poly{1})
            return false;
    return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t e)
{
    if (e == 1)
        return {0, 1};
    if (auto it = modulus_table().find({p, e}); it != modulus_table().end())
        return it->second;
    const std::uint64_t count = ipow(p, e);
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f(e + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < e; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        f[e] = 1;
        if (f[0] != 0 && is_primitive(f, p))
            return f;
    }
    throw FieldError("no primitive modulus found");
}

} // namespace prime_poly

FieldPtr GaloisField::make(std::uint32_t p, std::uint32_t e)
{
    if (!prime_poly::is_prime(p))
        throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (e < 1 || e > 8)
        throw FieldError("extension degree must be in 1..8");
    if (ipow(p, e) > (1u << 16))
        throw FieldError("field size exceeds 2^16");

    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[{p, e}];
    if (!slot)
        slot = std::make_shared<const GaloisField>(p, e, prime_poly::canonical_modulus(p, e));
    return slot;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), size_(static_cast<std::uint32_t>(ipow(p, e))), modulus_(std::move(modulus))
{
    place_.resize(e_);
    for (std::uint32_t i = 0; i < e_; ++i)
        place_[i] = static_cast<std::uint32_t>(ipow(p_, e_ - 1 - i));
    one_ = Elem{static_cast<std::uint16_t>(place_[0])};

    neg_table_.resize(size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
        auto d = digits(Elem{static_cast<std::uint16_t>(a)});
        for (auto &c : d)
            c = (p_ - c) % p_;
        neg_table_[a] = from_digits(d);
    }

    if (size_ <= 256) {
        add_table_.resize(std::size_t(size_) * size_);
        mul_table_.resize(std::size_t(size_) * size_);
        for (std::uint32_t a = 0; a < size_; ++a)
            for (std::uint32_t b = 0; b < size_; ++b) {
                Elem ea{static_cast<std::uint16_t>(a)}, eb{static_cast<std::uint16_t>(b)};
                add_table_[std::size_t(a) * size_ + b] = add_slow(ea, eb);
                mul_table_[std::size_t(a) * size_ + b] = mul_slow(ea, eb);
            }
    }

    inv_table_.resize(size_);
    for (std::uint32_t a = 1; a < size_; ++a)
        inv_table_[a] = inv_euclid(Elem{static_cast<std::uint16_t>(a)});

    for (std::uint32_t a = 1; a < size_; ++a) {
        Elem g{static_cast<std::uint16_t>(a)};
        if (multiplicative_order(g) == size_ - 1) {
            generator_ = g;
            break;
        }
    }
}

Elem GaloisField::from_index(std::uint32_t i) const
{
    if (i >= size_)
        throw FieldError("element index out of range");
    return Elem{static_cast<std::uint16_t>(i)};
}

Elem GaloisField::from_int(long long n) const
{
    long long r = n % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return Elem{static_cast<std::uint16_t>(r * place_[0])};
}

std::vector<std::uint32_t> GaloisField::digits(Elem a) const
{
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i)
        d[i] = (a.v / place_[i]) % p_;
    return d;
}

Elem GaloisField::from_digits(const std::vector<std::uint32_t> &d) const
{
    if (d.size() > e_)
        throw FieldError("too many digits for field");
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] >= p_)
            throw FieldError("digit out of range");
        v += d[i] * place_[i];
    }
    return Elem{static_cast<std::uint16_t>(v)};
}

Elem GaloisField::add_slow(Elem a, Elem b) const
{
    auto da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < e_; ++i)
        da[i] = (da[i] + db[i]) % p_;
    return from_digits(da);
}

Elem GaloisField::mul_slow(Elem a, Elem b) const
{
    Poly pa = digits(a), pb = digits(b);
    trim(pa);
    trim(pb);
    Poly r = divmod(pmul(pa, pb, p_), modulus_, p_).second;
    r.resize(e_, 0);
    return from_digits(r);
}

Elem GaloisField::inv_euclid(Elem a) const
{
    Poly r0 = modulus_, r1 = digits(a);
    trim(r1);
    if (r1.empty())
        throw FieldError("division by zero");
    Poly s0{}, s1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, p_);
        r0 = std::move(r1);
        r1 = std::move(r);
        // s0 - q * s1
        Poly qs = pmul(q, s1, p_);
        Poly next(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < next.size(); ++i) {
            std::uint32_t x = i < s0.size() ? s0[i] : 0;
            std::uint32_t y = i < qs.size() ? qs[i] : 0;
            next[i] = (x + p_ - y) % p_;
        }
        trim(next);
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    // r0 is a nonzero constant since the modulus is irreducible
    const std::uint32_t c = inv_mod(r0[0], p_);
    for (auto &x : s0)
        x = static_cast<std::uint32_t>(std::uint64_t(x) * c % p_);
    Poly r = divmod(s0, modulus_, p_).second;
    r.resize(e_, 0);
    return from_digits(r);
}

Elem GaloisField::inv(Elem a) const
{
    if (a.is_zero())
        throw FieldError("division by zero");
    return inv_table_[a.v];
}

Elem GaloisField::pow(Elem a, std::uint64_t k) const
{
    Elem result = one_;
    while (k) {
        if (k & 1)
            result = mul(result, a);
        a = mul(a, a);
        k >>= 1;
    }
    return result;
}

Elem GaloisField::frobenius(Elem a, std::uint32_t k) const
{
    k %= e_;
    for (std::uint32_t i = 0; i < k; ++i)
        a = pow(a, p_);
    return a;
}

std::uint32_t GaloisField::subfield_order() const
{
    if (e_ % 2 != 0)
        throw FieldError("field has no index-2 subfield");
    return static_cast<std::uint32_t>(ipow(p_, e_ / 2));
}

Elem GaloisField::norm(Elem a) const { return pow(a, subfield_order() + 1); }

Elem GaloisField::trace(Elem a) const { return add(a, pow(a, subfield_order())); }

bool GaloisField::in_subfield(Elem a) const { return pow(a, subfield_order()) == a; }

std::uint64_t GaloisField::multiplicative_order(Elem a) const
{
    if (a.is_zero())
        throw FieldError("zero has no multiplicative order");
    std::uint64_t k = 1;
    for (Elem x = a; x != one_; x = mul(x, a))
        ++k;
    return k;
}

std::string GaloisField::to_string(Elem a) const
{
    auto d = digits(a);
    std::string out;
    if (p_ <= 36) {
        for (auto c : d)
            out.push_back(static_cast<char>(c < 10 ? '0' + c : 'a' + (c - 10)));
    }
    else {
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (i)
                out.push_back(',');
            out += std::to_string(d[i]);
        }
    }
    return out;
}

Elem GaloisField::parse(std::string_view text) const
{
    std::vector<std::uint32_t> d;
    if (p_ <= 36) {
        for (char ch : text) {
            if (ch >= '0' && ch <= '9')
                d.push_back(static_cast<std::uint32_t>(ch - '0'));
            else if (ch >= 'a' && ch <= 'z')
                d.push_back(static_cast<std::uint32_t>(ch - 'a' + 10));
            else
                throw FieldError("bad digit in element string '" + std::string(text) + "'");
        }
    }
    else {
        std::stringstream ss{std::string(text)};
        std::string part;
        while (std::getline(ss, part, ','))
            d.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    }
    if (d.size() != e_)
        throw FieldError("element string '" + std::string(text) + "' has wrong length");
    return from_digits(d);
}

std::string GaloisField::pretty(Elem a) const
{
    auto d = digits(a);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0)
            continue;
        if (!out.empty())
            out += "+";
        if (i == 0 || d[i] != 1)
            out += std::to_string(d[i]);
        if (i >= 1)
            out += "w";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

void FieldElement::check_same(const FieldElement &o) const
{
    if (!field_->same_as(*o.field_))
        throw FieldError("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement &o) const
{
    check_same(o);
    return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement &o) const
{
    check_same(o);
    return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement &o) const
{
    check_same(o);
    return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement &o) const
{
    check_same(o);
    return {field_, field_->div(value_, o.value_)};
}

FieldElement arith(const FieldElement &a, const FieldElement &b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    case ArithOp::div:
        return a / b;
    }
    throw FieldError("unknown arithmetic operation");
}

NormTrace norm_trace(const FieldElement &x)
{
    const auto &f = *x.field();
    return {FieldElement{x.field(), f.norm(x.value())}, FieldElement{x.field(), f.trace(x.value())}};
}

} // namespace hcodes
