#include "ncres/word/field.hpp"

#include <stdexcept>

namespace ncres {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    if (p >= kPrimeBound) throw std::invalid_argument("field modulus must be below 2^26");
    Field f;
    f.modulus_ = p;
    return f;
}

Scalar Field::normalize(const Scalar& x) const {
    if (modulus_ == 0) return x;
    const mpz_class p(modulus_);
    mpz_class num = x.get_num() % p;
    mpz_class den = x.get_den() % p;
    if (den == 0) throw std::domain_error("denominator divisible by the field characteristic");
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * den_inv) % p;
    if (r < 0) r += p;
    return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (modulus_ == 0) return Scalar(1) / a;
    const mpz_class p(modulus_);
    mpz_class r;
    mpz_class v = normalize(a).get_num();
    mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return Scalar(r);
}

std::string Field::to_string() const {
    return modulus_ == 0 ? std::string("Q") : "Fp " + std::to_string(modulus_);
}

std::string format_scalar(const Scalar& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace ncres
