#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "chowtrace/errors.hpp"

namespace chowtrace {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Domain : unsigned char { integers, rationals, mod_p };

inline std::string domain_name(Domain d) {
    switch (d) {
    case Domain::integers: return "Z";
    case Domain::rationals: return "Q";
    case Domain::mod_p: return "Z/p";
    }
    return "?";
}

/// One exact coefficient: an arbitrary-precision integer, an exact rational,
/// or a residue that carries its modulus. No floating point anywhere.
class Coeff {
public:
    Coeff() : dom_(Domain::integers), value_(0), p_(0) {}

    static Coeff integer(Int v) { return Coeff(Domain::integers, Rat(std::move(v)), 0); }
    static Coeff integer(long v) { return integer(Int(v)); }
    static Coeff rational(Rat v) { return Coeff(Domain::rationals, std::move(v), 0); }
    static Coeff rational(long num, long den) { return rational(Rat(num, den)); }
    static Coeff residue(const Int& v, long p) {
        if (p < 2) throw ModulusMismatch("residue modulus must be at least 2");
        Int r = v % p;
        if (r < 0) r += p;
        return Coeff(Domain::mod_p, Rat(r), p);
    }
    static Coeff zero(Domain d, long p = 0) {
        switch (d) {
        case Domain::integers: return integer(0);
        case Domain::rationals: return rational(Rat(0));
        case Domain::mod_p: return residue(Int(0), p);
        }
        return integer(0);
    }
    static Coeff one(Domain d, long p = 0) {
        switch (d) {
        case Domain::integers: return integer(1);
        case Domain::rationals: return rational(Rat(1));
        case Domain::mod_p: return residue(Int(1), p);
        }
        return integer(1);
    }

    Domain domain() const { return dom_; }
    long modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    const Rat& value() const { return value_; }

    /// Integer numerator; only meaningful for integer and mod_p domains.
    Int numerator() const { return boost::multiprecision::numerator(value_); }

    Coeff operator-() const {
        if (dom_ == Domain::mod_p) {
            Int r = (p_ - numerator()) % p_;
            return Coeff(Domain::mod_p, Rat(r), p_);
        }
        return Coeff(dom_, -value_, 0);
    }

    Coeff operator+(const Coeff& o) const {
        check_compatible(o);
        if (dom_ == Domain::mod_p) return residue(numerator() + o.numerator(), p_);
        return Coeff(dom_, value_ + o.value_, 0);
    }
    Coeff operator-(const Coeff& o) const { return *this + (-o); }
    Coeff operator*(const Coeff& o) const {
        check_compatible(o);
        if (dom_ == Domain::mod_p) return residue(numerator() * o.numerator(), p_);
        return Coeff(dom_, value_ * o.value_, 0);
    }
    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

    bool operator==(const Coeff& o) const {
        return dom_ == o.dom_ && p_ == o.p_ && value_ == o.value_;
    }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    bool is_unit() const {
        switch (dom_) {
        case Domain::integers: return value_ == 1 || value_ == -1;
        case Domain::rationals: return value_ != 0;
        case Domain::mod_p: return value_ != 0;
        }
        return false;
    }

    Coeff inverse() const {
        if (!is_unit()) throw NotAUnit("coefficient " + str() + " is not a unit in " + domain_name(dom_));
        switch (dom_) {
        case Domain::integers: return *this; // +-1
        case Domain::rationals: return rational(Rat(1) / value_);
        case Domain::mod_p: {
            // extended Euclid
            Int a = numerator(), m = p_, x0 = 0, x1 = 1;
            Int b = m;
            while (a != 0) {
                Int q = b / a;
                Int t = b - q * a; b = a; a = t;
                t = x0 - q * x1; x0 = x1; x1 = t;
            }
            if (b != 1) throw NotAUnit("residue not invertible mod " + std::to_string(p_));
            return residue(x0, p_);
        }
        }
        throw NotAUnit("bad domain");
    }

    /// Exact division; throws NotAUnit when the quotient leaves the domain.
    Coeff div_exact(const Coeff& o) const {
        check_compatible(o);
        if (o.is_zero()) throw NotAUnit("division by zero");
        if (dom_ == Domain::integers) {
            Int n = numerator(), d = o.numerator();
            if (n % d != 0) throw NotDivisibleByP("integer " + str() + " not divisible by " + o.str());
            return integer(n / d);
        }
        return *this * o.inverse();
    }

    Coeff pow(unsigned long e) const {
        Coeff r = one(dom_, p_), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    Coeff to_rational() const { return rational(value_); }

    /// Cast to the integer domain; throws IntegralityFailure on a true fraction.
    Coeff to_integer() const {
        if (dom_ == Domain::mod_p) throw DomainMismatch("residue cannot become an integer");
        if (boost::multiprecision::denominator(value_) != 1)
            throw IntegralityFailure("non-integral value " + str());
        return integer(numerator());
    }

    Coeff reduce_mod(long p) const {
        if (dom_ == Domain::mod_p) {
            if (p_ != p) throw ModulusMismatch("reducing mod " + std::to_string(p) + " a residue mod " + std::to_string(p_));
            return *this;
        }
        if (boost::multiprecision::denominator(value_) != 1)
            throw IntegralityFailure("cannot reduce the fraction " + str() + " mod " + std::to_string(p));
        return residue(numerator(), p);
    }

    std::string str() const {
        return value_.str();
    }

private:
    Coeff(Domain d, Rat v, long p) : dom_(d), value_(std::move(v)), p_(p) {}

    void check_compatible(const Coeff& o) const {
        if (dom_ != o.dom_)
            throw DomainMismatch("mixing " + domain_name(dom_) + " with " + domain_name(o.dom_));
        if (dom_ == Domain::mod_p && p_ != o.p_)
            throw ModulusMismatch("mixing residues mod " + std::to_string(p_) + " and mod " + std::to_string(o.p_));
    }

    Domain dom_;
    Rat value_;
    long p_;
};

} // namespace chowtrace
