#include "indep/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace indep {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::int64_t normalize_mod(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid; a in [1, p), p prime.
std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw InversionOfZero();
    return t < 0 ? t + p : t;
}

double checked_double(double v, const char* op) {
    if (!std::isfinite(v)) throw NonFiniteValue(op);
    return v;
}

void expect_kind(const Scalar& s, const FieldDescriptor& fd) {
    switch (fd.kind) {
    case FieldKind::ExactRational:
        if (!s.is_rational()) throw FieldMismatch("expected rational value");
        break;
    case FieldKind::PrimeField:
        if (!s.is_residue()) throw FieldMismatch("expected residue value");
        break;
    case FieldKind::ApproxReal:
        if (!s.is_real()) throw FieldMismatch("expected real value");
        break;
    }
}

} // namespace

FieldDescriptor FieldDescriptor::rational() {
    return FieldDescriptor{FieldKind::ExactRational, 0, 0.0};
}

FieldDescriptor FieldDescriptor::gf(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31))
        throw Error("prime modulus must be < 2^31, got " + std::to_string(p));
    if (!is_prime_u64(p))
        throw Error("modulus " + std::to_string(p) + " is not prime");
    return FieldDescriptor{FieldKind::PrimeField, static_cast<std::uint32_t>(p), 0.0};
}

FieldDescriptor FieldDescriptor::approx(double tolerance) {
    if (!(tolerance > 0.0 && tolerance < 1.0))
        throw Error("approximate-field tolerance must lie in (0, 1)");
    return FieldDescriptor{FieldKind::ApproxReal, 0, tolerance};
}

std::string FieldDescriptor::name() const {
    switch (kind) {
    case FieldKind::ExactRational: return "rational";
    case FieldKind::PrimeField: return "gf(" + std::to_string(modulus) + ")";
    case FieldKind::ApproxReal: {
        char buf[48];
        std::snprintf(buf, sizeof buf, "approx(%g)", tolerance);
        return buf;
    }
    }
    return "?";
}

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.kind == b.kind && a.modulus == b.modulus && a.tolerance == b.tolerance;
}

std::string Scalar::repr() const {
    if (is_rational()) {
        const BigRational& r = rat();
        std::string s = numerator(r).str();
        if (denominator(r) != 1) s += "/" + denominator(r).str();
        return s;
    }
    if (is_residue()) return "r" + std::to_string(res());
    char buf[40];
    std::snprintf(buf, sizeof buf, "%a", dbl()); // hex float: bit-exact key
    return buf;
}

Scalar zero(const FieldDescriptor& fd) { return from_integer(0, fd); }
Scalar one(const FieldDescriptor& fd) { return from_integer(1, fd); }

Scalar from_integer(std::int64_t v, const FieldDescriptor& fd) {
    switch (fd.kind) {
    case FieldKind::ExactRational: return Scalar::rational(BigRational(v));
    case FieldKind::PrimeField: return Scalar::residue(normalize_mod(v, fd.modulus));
    case FieldKind::ApproxReal: return Scalar::real(static_cast<double>(v));
    }
    throw Error("unreachable field kind");
}

Scalar from_big_rational(const BigRational& r, const FieldDescriptor& fd) {
    switch (fd.kind) {
    case FieldKind::ExactRational:
        return Scalar::rational(r);
    case FieldKind::PrimeField: {
        const std::int64_t p = fd.modulus;
        std::int64_t num = static_cast<std::int64_t>(numerator(r) % p);
        std::int64_t den = static_cast<std::int64_t>(denominator(r) % p);
        num = normalize_mod(num, p);
        den = normalize_mod(den, p);
        if (den == 0) throw DivisionByZero();
        return Scalar::residue(num * inverse_mod(den, p) % p);
    }
    case FieldKind::ApproxReal:
        return Scalar::real(checked_double(r.convert_to<double>(), "rational to double"));
    }
    throw Error("unreachable field kind");
}

Scalar add(const Scalar& a, const Scalar& b, const FieldDescriptor& fd) {
    expect_kind(a, fd);
    expect_kind(b, fd);
    switch (fd.kind) {
    case FieldKind::ExactRational: return Scalar::rational(a.rat() + b.rat());
    case FieldKind::PrimeField: return Scalar::residue((a.res() + b.res()) % fd.modulus);
    case FieldKind::ApproxReal: return Scalar::real(checked_double(a.dbl() + b.dbl(), "add"));
    }
    throw Error("unreachable field kind");
}

Scalar sub(const Scalar& a, const Scalar& b, const FieldDescriptor& fd) {
    expect_kind(a, fd);
    expect_kind(b, fd);
    switch (fd.kind) {
    case FieldKind::ExactRational: return Scalar::rational(a.rat() - b.rat());
    case FieldKind::PrimeField:
        return Scalar::residue(normalize_mod(a.res() - b.res(), fd.modulus));
    case FieldKind::ApproxReal: return Scalar::real(checked_double(a.dbl() - b.dbl(), "sub"));
    }
    throw Error("unreachable field kind");
}

Scalar mul(const Scalar& a, const Scalar& b, const FieldDescriptor& fd) {
    expect_kind(a, fd);
    expect_kind(b, fd);
    switch (fd.kind) {
    case FieldKind::ExactRational: return Scalar::rational(a.rat() * b.rat());
    case FieldKind::PrimeField:
        // p < 2^31, so the product of two residues fits in int64.
        return Scalar::residue(a.res() * b.res() % fd.modulus);
    case FieldKind::ApproxReal: return Scalar::real(checked_double(a.dbl() * b.dbl(), "mul"));
    }
    throw Error("unreachable field kind");
}

Scalar neg(const Scalar& a, const FieldDescriptor& fd) {
    expect_kind(a, fd);
    switch (fd.kind) {
    case FieldKind::ExactRational: return Scalar::rational(-a.rat());
    case FieldKind::PrimeField:
        return Scalar::residue(a.res() == 0 ? 0 : fd.modulus - a.res());
    case FieldKind::ApproxReal: return Scalar::real(-a.dbl());
    }
    throw Error("unreachable field kind");
}

Scalar invert(const Scalar& v, const FieldDescriptor& fd) {
    expect_kind(v, fd);
    if (is_effectively_zero(v, 0.0, fd)) throw InversionOfZero();
    switch (fd.kind) {
    case FieldKind::ExactRational: return Scalar::rational(1 / v.rat());
    case FieldKind::PrimeField: return Scalar::residue(inverse_mod(v.res(), fd.modulus));
    case FieldKind::ApproxReal: return Scalar::real(checked_double(1.0 / v.dbl(), "invert"));
    }
    throw Error("unreachable field kind");
}

Scalar div(const Scalar& a, const Scalar& b, const FieldDescriptor& fd) {
    expect_kind(a, fd);
    expect_kind(b, fd);
    if (is_effectively_zero(b, 0.0, fd)) throw DivisionByZero();
    switch (fd.kind) {
    case FieldKind::ExactRational: return Scalar::rational(a.rat() / b.rat());
    case FieldKind::PrimeField:
        return Scalar::residue(a.res() * inverse_mod(b.res(), fd.modulus) % fd.modulus);
    case FieldKind::ApproxReal: return Scalar::real(checked_double(a.dbl() / b.dbl(), "div"));
    }
    throw Error("unreachable field kind");
}

Scalar pow_nonneg(const Scalar& v, std::uint64_t e, const FieldDescriptor& fd) {
    expect_kind(v, fd);
    Scalar acc = one(fd);
    Scalar base = v;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base, fd);
        e >>= 1;
        if (e > 0) base = mul(base, base, fd);
    }
    return acc;
}

bool is_effectively_zero(const Scalar& v, double scale, const FieldDescriptor& fd) {
    expect_kind(v, fd);
    switch (fd.kind) {
    case FieldKind::ExactRational: return v.rat() == 0;
    case FieldKind::PrimeField: return v.res() == 0;
    case FieldKind::ApproxReal:
        return std::fabs(v.dbl()) <= fd.tolerance * std::max(scale, 1.0);
    }
    throw Error("unreachable field kind");
}

bool scalar_equal(const Scalar& a, const Scalar& b, const FieldDescriptor& fd) {
    expect_kind(a, fd);
    expect_kind(b, fd);
    switch (fd.kind) {
    case FieldKind::ExactRational: return a.rat() == b.rat();
    case FieldKind::PrimeField: return a.res() == b.res();
    case FieldKind::ApproxReal: return a.dbl() == b.dbl();
    }
    throw Error("unreachable field kind");
}

double magnitude(const Scalar& v) {
    if (v.is_rational()) return std::fabs(v.rat().convert_to<double>());
    if (v.is_residue()) return v.res() == 0 ? 0.0 : 1.0;
    return std::fabs(v.dbl());
}

std::string scalar_to_string(const Scalar& v, const FieldDescriptor& fd) {
    expect_kind(v, fd);
    switch (fd.kind) {
    case FieldKind::ExactRational: {
        const BigRational& r = v.rat();
        std::string s = numerator(r).str();
        if (denominator(r) != 1) s += "/" + denominator(r).str();
        return s;
    }
    case FieldKind::PrimeField:
        return std::to_string(v.res()) + " mod " + std::to_string(fd.modulus);
    case FieldKind::ApproxReal: {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v.dbl());
        return buf;
    }
    }
    throw Error("unreachable field kind");
}

namespace {

// [+-]?digits, full match required up to `end`.
BigInt parse_big_int(const std::string& s, std::size_t begin, std::size_t end) {
    if (begin >= end) throw Error("empty integer in scalar literal '" + s + "'");
    std::size_t i = begin;
    if (s[i] == '+' || s[i] == '-') ++i;
    if (i >= end) throw Error("sign without digits in scalar literal '" + s + "'");
    for (std::size_t j = i; j < end; ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw Error("invalid integer in scalar literal '" + s + "'");
    }
    return BigInt(s.substr(begin, end - begin));
}

} // namespace

Scalar scalar_from_string(const std::string& text, const FieldDescriptor& fd) {
    std::string t = text;
    // trim
    auto issp = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
    while (!t.empty() && issp(t.front())) t.erase(t.begin());
    while (!t.empty() && issp(t.back())) t.pop_back();
    if (t.empty()) throw Error("empty scalar literal");

    switch (fd.kind) {
    case FieldKind::ExactRational: {
        std::size_t slash = t.find('/');
        if (slash == std::string::npos)
            return Scalar::rational(BigRational(parse_big_int(t, 0, t.size())));
        BigInt num = parse_big_int(t, 0, slash);
        BigInt den = parse_big_int(t, slash + 1, t.size());
        if (den == 0) throw DivisionByZero();
        return Scalar::rational(BigRational(num, den));
    }
    case FieldKind::PrimeField: {
        std::size_t mod = t.find(" mod ");
        std::string val = (mod == std::string::npos) ? t : t.substr(0, mod);
        if (mod != std::string::npos) {
            std::string p = t.substr(mod + 5);
            if (p != std::to_string(fd.modulus))
                throw FieldMismatch("literal '" + text + "' names modulus " + p +
                                    ", active field is " + fd.name());
        }
        std::size_t slash = val.find('/');
        if (slash != std::string::npos) {
            BigInt num = parse_big_int(val, 0, slash);
            BigInt den = parse_big_int(val, slash + 1, val.size());
            if (den == 0) throw DivisionByZero();
            return from_big_rational(BigRational(num, den), fd);
        }
        BigInt v = parse_big_int(val, 0, val.size());
        return from_big_rational(BigRational(v), fd);
    }
    case FieldKind::ApproxReal: {
        std::size_t pos = 0;
        double d = 0.0;
        try {
            d = std::stod(t, &pos);
        } catch (const std::exception&) {
            throw Error("invalid real literal '" + text + "'");
        }
        if (pos != t.size()) throw Error("invalid real literal '" + text + "'");
        if (!std::isfinite(d)) throw NonFiniteValue("literal " + text);
        return Scalar::real(d);
    }
    }
    throw Error("unreachable field kind");
}

} // namespace indep
