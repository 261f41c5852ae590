#pragma once

// Commutative target rings for evaluation, augmentations and Smith normal
// form. Each is a small value-semantics context object; the SNF code only
// needs the Euclidean members (size, divmod, unit_normal).

#include "kch/errors.hpp"
#include "kch/ncalg/bigint.hpp"
#include "kch/ncalg/qlaurent.hpp"

#include <cstdint>
#include <string>

namespace kch {

struct IntegerRing {
    using Value = BigInt;
    static constexpr const char *name = "Z";

    Value zero() const { return 0; }
    Value one() const { return 1; }
    Value from_int(const BigInt &c) const { return c; }
    bool is_zero(const Value &x) const { return x == 0; }
    bool is_unit(const Value &x) const { return x == 1 || x == -1; }
    Value inverse(const Value &x) const {
        if (!is_unit(x))
            throw DomainError("non-unit integer " + x.str() + " has no inverse");
        return x;
    }
    Value add(const Value &a, const Value &b) const { return a + b; }
    Value sub(const Value &a, const Value &b) const { return a - b; }
    Value mul(const Value &a, const Value &b) const { return a * b; }
    Value neg(const Value &a) const { return -a; }
    std::string str(const Value &x) const { return x.str(); }

    BigInt size(const Value &x) const { return abs(x); }
    void divmod(const Value &a, const Value &b, Value &q, Value &r) const {
        q = a / b;
        r = a - q * b;
    }
    // Associate with nonnegative sign; `u` receives the unit used.
    Value unit_normal(const Value &x, Value &u) const {
        u = x < 0 ? -1 : 1;
        return x < 0 ? Value(-x) : x;
    }
};

struct PrimeField {
    using Value = int64_t;
    int64_t p = 3;
    static constexpr const char *name = "Fp";

    PrimeField() = default;
    explicit PrimeField(int64_t prime) : p(prime) {}

    Value zero() const { return 0; }
    Value one() const { return 1 % p; }
    Value from_int(const BigInt &c) const { return mod_p(c, p); }
    bool is_zero(const Value &x) const { return x == 0; }
    bool is_unit(const Value &x) const { return x != 0; }
    Value inverse(const Value &x) const {
        if (x == 0)
            throw DomainError("zero has no inverse in F_" + std::to_string(p));
        return inv_mod(x, p);
    }
    Value add(Value a, Value b) const { return (a + b) % p; }
    Value sub(Value a, Value b) const { return ((a - b) % p + p) % p; }
    Value mul(Value a, Value b) const { return a * b % p; }
    Value neg(Value a) const { return a == 0 ? 0 : p - a; }
    std::string str(const Value &x) const { return std::to_string(x); }

    int size(const Value &x) const { return x == 0 ? 0 : 1; }
    void divmod(Value a, Value b, Value &q, Value &r) const {
        q = mul(a, inverse(b));
        r = 0;
    }
    Value unit_normal(const Value &x, Value &u) const {
        u = x == 0 ? 1 : x;
        return x == 0 ? 0 : 1;
    }
};

struct RationalField {
    using Value = BigRational;
    static constexpr const char *name = "Q";

    Value zero() const { return 0; }
    Value one() const { return 1; }
    Value from_int(const BigInt &c) const { return Value(c); }
    bool is_zero(const Value &x) const { return x == 0; }
    bool is_unit(const Value &x) const { return x != 0; }
    Value inverse(const Value &x) const {
        if (x == 0)
            throw DomainError("zero has no inverse in Q");
        return 1 / x;
    }
    Value add(const Value &a, const Value &b) const { return a + b; }
    Value sub(const Value &a, const Value &b) const { return a - b; }
    Value mul(const Value &a, const Value &b) const { return a * b; }
    Value neg(const Value &a) const { return -a; }
    std::string str(const Value &x) const { return x.str(); }

    int size(const Value &x) const { return x == 0 ? 0 : 1; }
    void divmod(const Value &a, const Value &b, Value &q, Value &r) const {
        q = a / b;
        r = 0;
    }
    Value unit_normal(const Value &x, Value &u) const {
        u = x == 0 ? Value(1) : x;
        return x == 0 ? Value(0) : Value(1);
    }
};

/// Q[t^{±1}]; units are nonzero monomials.
struct LaurentQRing {
    using Value = QLaurent;
    std::string var = "t";
    static constexpr const char *name = "Q[t^{±1}]";

    Value zero() const { return {}; }
    Value one() const { return 1; }
    Value from_int(const BigInt &c) const { return QLaurent(BigRational(c)); }
    bool is_zero(const Value &x) const { return x.is_zero(); }
    bool is_unit(const Value &x) const { return x.is_monomial(); }
    Value inverse(const Value &x) const {
        if (!x.is_monomial())
            throw DomainError("non-unit " + x.to_string(var) + " has no inverse");
        return x.pow(-1);
    }
    Value add(const Value &a, const Value &b) const { return a + b; }
    Value sub(const Value &a, const Value &b) const { return a - b; }
    Value mul(const Value &a, const Value &b) const { return a * b; }
    Value neg(const Value &a) const { return -a; }
    std::string str(const Value &x) const { return x.to_string(var); }

    int size(const Value &x) const { return x.span(); }
    void divmod(const Value &a, const Value &b, Value &q, Value &r) const {
        QLaurent::divmod(a, b, q, r);
    }
    // Normal form: lowest exponent 0 and leading coefficient 1.
    Value unit_normal(const Value &x, Value &u) const {
        if (x.is_zero()) {
            u = 1;
            return x;
        }
        u = QLaurent::monomial(x.leading(), x.low());
        return x * u.pow(-1);
    }
};

} // namespace kch
