#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "liecas/error.hpp"

namespace liecas {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact Gaussian rational a/b + (c/d)*i. The one number type of the library.
///
/// Both components are kept fully reduced with positive denominators (the
/// underlying rational type canonicalizes on every operation), so equality is
/// plain component comparison and zero has a unique representation.
class Scalar {
public:
    Scalar() = default;
    Scalar(int n) : re_(n) {}
    Scalar(long n) : re_(n) {}
    Scalar(Integer n) : re_(std::move(n)) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    /// p/q as a real scalar; q must be nonzero.
    static Scalar ratio(long p, long q) {
        if (q == 0) throw Error("zero denominator");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        return Scalar(Rational(p, q));
    }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    Integer real_num() const { return numerator(re_); }
    Integer real_den() const { return denominator(re_); }
    Integer imag_num() const { return numerator(im_); }
    Integer imag_den() const { return denominator(im_); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_ == 1 && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Scalar conj() const { return Scalar(re_, -im_); }

    /// Squared modulus a^2 + c^2, a rational. Zero iff the scalar is zero.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw Error("division by zero scalar");
        Rational n = o.norm();
        Rational re = (re_ * o.re_ + im_ * o.im_) / n;
        Rational im = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Renders in the literal grammar: `p/q`, `p`, `p/q+r/s*i`, `r/s*i`.
    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
        if (s.is_zero()) return os << "0";
        if (!s.re_.is_zero()) {
            write_rational(os, s.re_);
            if (!s.im_.is_zero()) {
                if (s.im_ > 0) {
                    os << "+";
                    write_rational(os, s.im_);
                } else {
                    os << "-";
                    write_rational(os, -s.im_);
                }
                os << "*i";
            }
            return os;
        }
        write_rational(os, s.im_);
        return os << "*i";
    }

    /// Parses the literal grammar, whitespace-insensitive. Accepted forms:
    /// [sign] p[/q] [(+|-) r[/s] * i]   or   [sign] r[/s] * i
    static Scalar parse(std::string_view text) {
        Cursor c{text, 0};
        c.skip_ws();
        Rational first = parse_signed_rational(c);
        c.skip_ws();
        if (c.done()) return Scalar(first);
        if (c.peek() == '*') {
            c.next();
            expect_i(c);
            c.skip_ws();
            if (!c.done()) throw ParseError("trailing characters after scalar literal", c.pos);
            return Scalar(Rational(0), first);
        }
        char op = c.peek();
        if (op != '+' && op != '-')
            throw ParseError("expected '+', '-' or '*i' in scalar literal", c.pos);
        c.next();
        c.skip_ws();
        Rational second = parse_signed_rational(c);
        c.skip_ws();
        if (c.done() || c.peek() != '*')
            throw ParseError("expected '*i' after imaginary part", c.pos);
        c.next();
        expect_i(c);
        c.skip_ws();
        if (!c.done()) throw ParseError("trailing characters after scalar literal", c.pos);
        if (op == '-') second = -second;
        return Scalar(first, second);
    }

private:
    struct Cursor {
        std::string_view s;
        std::size_t pos;
        bool done() const { return pos >= s.size(); }
        char peek() const { return s[pos]; }
        void next() { ++pos; }
        void skip_ws() {
            while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }
    };

    static void write_rational(std::ostream& os, const Rational& r) {
        os << numerator(r);
        if (denominator(r) != 1) os << "/" << denominator(r);
    }

    static Integer parse_integer(Cursor& c) {
        c.skip_ws();
        std::string digits;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            digits.push_back(c.peek());
            c.next();
        }
        if (digits.empty()) throw ParseError("expected digits in scalar literal", c.pos);
        return Integer(digits);
    }

    static Rational parse_signed_rational(Cursor& c) {
        c.skip_ws();
        bool neg = false;
        if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
            neg = c.peek() == '-';
            c.next();
        }
        Integer num = parse_integer(c);
        Integer den = 1;
        c.skip_ws();
        if (!c.done() && c.peek() == '/') {
            c.next();
            den = parse_integer(c);
            if (den.is_zero()) throw ParseError("zero denominator in scalar literal", c.pos);
        }
        Rational r(num, den);
        return neg ? -r : r;
    }

    static void expect_i(Cursor& c) {
        c.skip_ws();
        if (c.done() || c.peek() != 'i')
            throw ParseError("expected 'i' in scalar literal", c.pos);
        c.next();
    }

    Rational re_;
    Rational im_;
};

} // namespace liecas
