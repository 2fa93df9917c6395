#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qrep/error.hpp"

namespace qrep {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Runtime description of a coefficient field: the rationals or GF(p).
struct FieldSpec {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return {}; }

    static FieldSpec prime(std::uint64_t p) {
        if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
            throw error(errc::invalid_field, "GF(" + std::to_string(p) + ") needs a prime below 2^31");
        return {Kind::prime, static_cast<std::uint32_t>(p)};
    }

    bool is_prime_field() const { return kind == Kind::prime; }

    std::string to_string() const {
        return kind == Kind::rationals ? std::string("QQ") : "GF(" + std::to_string(p) + ")";
    }

    bool operator==(const FieldSpec&) const = default;
};

// A field type F provides value_type plus the arithmetic below. Matrix<F> and
// everything built on it only talk to the field through this surface.

class Rationals {
public:
    using value_type = rational;

    FieldSpec spec() const { return FieldSpec::rationals(); }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    bool is_zero(const value_type& a) const { return a == 0; }

    value_type from_integer(const integer& n) const { return value_type(n); }
    value_type from_fraction(const integer& num, const integer& den) const {
        if (den == 0) throw std::domain_error("zero denominator");
        return den < 0 ? value_type(-num, -den) : value_type(num, den);
    }

    std::string to_string(const value_type& a) const {
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        if (denominator(a) == 1) return numerator(a).str();
        return numerator(a).str() + "/" + denominator(a).str();
    }

    /// Numerator in [-9, 9], denominator in [1, 9].
    template <class Rng>
    value_type random(Rng& rng) const {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 9);
        int n = num(rng);
        return value_type(n, den(rng));
    }

    bool operator==(const Rationals&) const = default;
};

class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(FieldSpec::prime(p).p) {}

    std::uint32_t characteristic() const { return p_; }
    FieldSpec spec() const { return {FieldSpec::Kind::prime, p_}; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(value_type a, value_type b) const {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(std::uint64_t{a} * b % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }
    bool is_zero(value_type a) const { return a == 0; }

    value_type from_integer(const integer& n) const {
        integer r = n % p_;
        if (r < 0) r += p_;
        return r.convert_to<value_type>();
    }
    value_type from_fraction(const integer& num, const integer& den) const {
        value_type d = from_integer(den);
        if (d == 0) throw std::domain_error("denominator vanishes mod " + std::to_string(p_));
        return mul(from_integer(num), inv(d));
    }

    std::string to_string(value_type a) const { return std::to_string(a); }

    template <class Rng>
    value_type random(Rng& rng) const {
        return std::uniform_int_distribution<value_type>(0, p_ - 1)(rng);
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

} // namespace qrep
