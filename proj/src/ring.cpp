#include "msym/ring.hpp"

#include <stdexcept>

namespace msym {

RingSpec RingSpec::prime_field(long p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("prime field modulus must be prime: " +
                                    std::to_string(p));
    }
    return RingSpec(RingKind::PrimeField, p);
}

RingSpec RingSpec::parse(const std::string& text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        const std::string tail = text.substr(3);
        if (tail.empty() ||
            tail.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("malformed ring spec: " + text);
        }
        return prime_field(std::stol(tail));
    }
    throw std::invalid_argument("malformed ring spec: " + text);
}

mpq_class RingSpec::normalize(const mpq_class& c) const {
    // Arithmetic results are already reduced, but raw (num, den)
    // construction may arrive uncanonicalized; reduce before classifying.
    mpq_class value = c;
    value.canonicalize();
    switch (kind_) {
        case RingKind::Integers:
            if (value.get_den() != 1) {
                throw std::domain_error(
                    "non-integral coefficient over the integers: " +
                    coeff_str(value));
            }
            return value;
        case RingKind::Rationals:
            return value;
        case RingKind::PrimeField: {
            // Reduce num * den^{-1} into {0, ..., p-1}.
            mpz_class num = value.get_num() % p_;
            if (num < 0) num += p_;
            mpz_class den = value.get_den() % p_;
            if (den == 0) {
                throw std::domain_error(
                    "denominator divisible by the characteristic: " +
                    coeff_str(value));
            }
            if (den != 1) {
                mpz_class inv, mod(p_);
                if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(),
                               mod.get_mpz_t()) == 0) {
                    throw std::domain_error(
                        "denominator divisible by the characteristic: " +
                        coeff_str(value));
                }
                num = (num * inv) % p_;
            }
            return mpq_class(num);
        }
    }
    throw std::logic_error("unreachable ring kind");
}

mpq_class RingSpec::inverse(const mpq_class& c) const {
    if (c == 0) throw std::domain_error("inverse of zero");
    switch (kind_) {
        case RingKind::Integers:
            throw std::invalid_argument("inverse requires a field");
        case RingKind::Rationals:
            return 1 / c;
        case RingKind::PrimeField: {
            const mpq_class canon = normalize(c);
            mpz_class inv, mod(p_);
            mpz_class num = canon.get_num();
            if (num == 0 || mpz_invert(inv.get_mpz_t(), num.get_mpz_t(),
                                       mod.get_mpz_t()) == 0) {
                throw std::domain_error("inverse of zero");
            }
            return mpq_class(inv);
        }
    }
    throw std::logic_error("unreachable ring kind");
}

mpq_class RingSpec::add(const mpq_class& a, const mpq_class& b) const {
    return normalize(a + b);
}

mpq_class RingSpec::sub(const mpq_class& a, const mpq_class& b) const {
    return normalize(a - b);
}

mpq_class RingSpec::mul(const mpq_class& a, const mpq_class& b) const {
    return normalize(a * b);
}

mpq_class RingSpec::neg(const mpq_class& a) const { return normalize(-a); }

std::string RingSpec::str() const {
    switch (kind_) {
        case RingKind::Integers:
            return "Z";
        case RingKind::Rationals:
            return "Q";
        case RingKind::PrimeField:
            return "Fp:" + std::to_string(p_);
    }
    throw std::logic_error("unreachable ring kind");
}

std::string coeff_str(const mpq_class& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class coeff_parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed coefficient: " + text);
    }
    q.canonicalize();
    return q;
}

}  // namespace msym
