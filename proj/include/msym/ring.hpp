/**
 * @file ring.hpp
 * @brief Coefficient rings: the integers, the rationals, and prime fields.
 *
 * Coefficients are carried as exact rationals (mpq_class) everywhere; the
 * RingSpec decides what "canonical" means:
 *   - Integers:   denominator must be 1 (division never occurs over Z);
 *   - Rationals:  canonical fraction as maintained by GMP;
 *   - PrimeField: an integer representative in {0, ..., p-1}, with
 *                 denominators cleared through modular inversion.
 */
#pragma once

#include <gmpxx.h>

#include <string>

#include "msym/arith.hpp"

namespace msym {

enum class RingKind { Integers, Rationals, PrimeField };

class RingSpec {
public:
    /// The ring of integers.
    static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
    /// The field of rationals.
    static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }
    /// The field with p elements; p must be prime.
    static RingSpec prime_field(long p);

    /// Parse "Z", "Q" or "Fp:<prime>".
    static RingSpec parse(const std::string& text);

    RingKind kind() const { return kind_; }
    long p() const { return p_; }
    bool is_field() const { return kind_ != RingKind::Integers; }

    /// Reduce a raw rational to the canonical representative; throws if the
    /// value does not lie in the ring (non-integer over Z).
    mpq_class normalize(const mpq_class& c) const;

    /// Multiplicative inverse of a nonzero element; only for fields.
    mpq_class inverse(const mpq_class& c) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;

    /// True once normalized coefficients compare equal to zero.
    static bool is_zero(const mpq_class& c) { return c == 0; }

    /// "Z", "Q", "Fp:5" — round-trips through parse().
    std::string str() const;

    bool operator==(const RingSpec& other) const = default;

private:
    RingSpec(RingKind kind, long p) : kind_(kind), p_(p) {}

    RingKind kind_;
    long p_;
};

/// Render a coefficient for output: decimal integer or "num/den".
std::string coeff_str(const mpq_class& c);

/// Parse a coefficient from "123" or "-4/7" form.
mpq_class coeff_parse(const std::string& text);

}  // namespace msym
