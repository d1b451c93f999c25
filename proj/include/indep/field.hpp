#ifndef INDEP_FIELD_HPP
#define INDEP_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <variant>

#include "indep/errors.hpp"

namespace indep {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { ExactRational, PrimeField, ApproxReal };

// Which scalar field is in force, including the zero-test policy every
// pivot decision depends on. Exact fields use literal zero tests; the
// approximate real field uses a relative threshold.
struct FieldDescriptor {
    FieldKind kind = FieldKind::ExactRational;
    std::uint32_t modulus = 0;   // PrimeField only, prime, 2 <= p < 2^31
    double tolerance = 0.0;      // ApproxReal only, in (0, 1)

    static FieldDescriptor rational();
    static FieldDescriptor gf(std::uint64_t p);      // throws Error unless p is prime and < 2^31
    static FieldDescriptor approx(double tolerance); // throws Error unless 0 < tol < 1

    bool is_exact() const { return kind != FieldKind::ApproxReal; }
    std::string name() const; // "rational", "gf(7)", "approx(1e-10)"
};

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b);

// A value of the active field: reduced rational of unbounded precision,
// residue in [0, p), or a finite double. Scalars carry no field pointer;
// all arithmetic goes through free functions taking the FieldDescriptor.
class Scalar {
public:
    Scalar() : v_(BigRational(0)) {}

    static Scalar rational(BigRational r) { return Scalar(std::move(r)); }
    static Scalar residue(std::int64_t r) { return Scalar(r); }
    static Scalar real(double d) { return Scalar(d); }

    bool is_rational() const { return std::holds_alternative<BigRational>(v_); }
    bool is_residue() const { return std::holds_alternative<std::int64_t>(v_); }
    bool is_real() const { return std::holds_alternative<double>(v_); }

    const BigRational& rat() const { return std::get<BigRational>(v_); }
    std::int64_t res() const { return std::get<std::int64_t>(v_); }
    double dbl() const { return std::get<double>(v_); }

    // Canonical field-independent text, usable as a hash/memo key.
    std::string repr() const;

private:
    explicit Scalar(BigRational r) : v_(std::move(r)) {}
    explicit Scalar(std::int64_t r) : v_(r) {}
    explicit Scalar(double d) : v_(d) {}

    std::variant<BigRational, std::int64_t, double> v_;
};

Scalar zero(const FieldDescriptor& fd);
Scalar one(const FieldDescriptor& fd);
Scalar from_integer(std::int64_t v, const FieldDescriptor& fd);
Scalar from_big_rational(const BigRational& r, const FieldDescriptor& fd);

Scalar add(const Scalar& a, const Scalar& b, const FieldDescriptor& fd);
Scalar sub(const Scalar& a, const Scalar& b, const FieldDescriptor& fd);
Scalar mul(const Scalar& a, const Scalar& b, const FieldDescriptor& fd);
Scalar neg(const Scalar& a, const FieldDescriptor& fd);
Scalar div(const Scalar& a, const Scalar& b, const FieldDescriptor& fd); // throws DivisionByZero

// Multiplicative inverse; precondition is_effectively_zero(v, 0, fd) == false.
Scalar invert(const Scalar& v, const FieldDescriptor& fd); // throws InversionOfZero

// Exponentiation by repeated squaring, nonnegative integer exponents only.
Scalar pow_nonneg(const Scalar& v, std::uint64_t e, const FieldDescriptor& fd);

// The "!= 0" test behind every pivot decision. `scale` is a context
// magnitude (e.g. the max |entry| of the row being searched); exact
// fields ignore it, ApproxReal tests |v| <= tolerance * max(scale, 1).
bool is_effectively_zero(const Scalar& v, double scale, const FieldDescriptor& fd);

// Exact comparison (bitwise for ApproxReal). Used for distinctness and
// for exact-field assertions, not for tolerance checks.
bool scalar_equal(const Scalar& a, const Scalar& b, const FieldDescriptor& fd);

// |v| mapped to double: rationals are converted, residues give 0 or 1,
// reals give fabs. Drives partial pivoting and residual reports.
double magnitude(const Scalar& v);

// Serialization: "3/2", "-7", "5 mod 7", or a decimal float.
std::string scalar_to_string(const Scalar& v, const FieldDescriptor& fd);
Scalar scalar_from_string(const std::string& text, const FieldDescriptor& fd);

} // namespace indep

#endif // INDEP_FIELD_HPP
