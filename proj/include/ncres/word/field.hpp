#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ncres {

/// Exact field element. Over a prime field the value is kept as the
/// canonical residue in [0, p).
using Scalar = mpq_class;

/// Coefficient field: the rationals, or a prime field F_p.
class Field {
public:
    /// Largest supported prime is below this bound so that residues and
    /// products of residues stay exact in double precision.
    static constexpr std::uint32_t kPrimeBound = 1u << 26;

    Field() = default;

    static Field rationals() { return Field{}; }
    /// Throws std::invalid_argument if p is not a prime below kPrimeBound.
    static Field prime(std::uint32_t p);

    bool is_rational() const { return modulus_ == 0; }
    std::uint32_t characteristic() const { return modulus_; }

    Scalar normalize(const Scalar& x) const;
    Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
    Scalar neg(const Scalar& a) const { return normalize(-a); }
    /// Throws std::domain_error on zero.
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    /// "Q" or "Fp <p>", the presentation-file spelling.
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// Coefficient text: integers as-is, other rationals as a/b.
std::string format_scalar(const Scalar& c);

}  // namespace ncres
