#pragma once

#include <array>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "liecas/scalar.hpp"

namespace liecas {

/// Polynomial in the fixed variable pair (x1, x2) with Scalar coefficients.
/// Zero coefficients are never stored.
class Poly {
public:
    using Exponents = std::array<int, 2>;

    Poly() = default;
    explicit Poly(Scalar constant) { add_term({0, 0}, constant); }

    static Poly variable(int which) {
        Poly p;
        Exponents e{0, 0};
        e[which] = 1;
        p.add_term(e, Scalar(1));
        return p;
    }

    static Poly monomial(int e1, int e2, Scalar coeff) {
        Poly p;
        p.add_term({e1, e2}, std::move(coeff));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }

    int total_degree() const {
        int deg = 0;
        for (const auto& [e, c] : terms_) deg = std::max(deg, e[0] + e[1]);
        return deg;
    }

    void add_term(const Exponents& e, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
        return out;
    }
    friend Poly operator*(const Scalar& s, const Poly& p) {
        Poly out;
        for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Partial derivative with respect to x1 (which = 0) or x2 (which = 1).
    Poly derivative(int which) const {
        Poly out;
        for (const auto& [e, c] : terms_) {
            if (e[which] == 0) continue;
            Exponents ne = e;
            --ne[which];
            out.add_term(ne, Scalar(Rational(e[which])) * c);
        }
        return out;
    }

    Poly derivative(int which, int times) const {
        Poly out = *this;
        for (int t = 0; t < times && !out.is_zero(); ++t) out = out.derivative(which);
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (const auto& [e, c] : p.terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (e[0] > 0) {
                os << "*x1";
                if (e[0] > 1) os << "^" << e[0];
            }
            if (e[1] > 0) {
                os << "*x2";
                if (e[1] > 1) os << "^" << e[1];
            }
        }
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    std::map<Exponents, Scalar> terms_;
};

/// Parses the expression grammar: rational literals, `i`, `x1`, `x2`,
/// `+`, `-`, `*`, `^` with nonnegative integer exponents, parentheses.
inline Poly parse_poly(std::string_view text) {
    struct Parser {
        std::string_view s;
        std::size_t pos = 0;

        void skip_ws() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        bool done() {
            skip_ws();
            return pos >= s.size();
        }
        char peek() {
            skip_ws();
            return pos < s.size() ? s[pos] : '\0';
        }
        bool consume(char c) {
            if (peek() == c) {
                ++pos;
                return true;
            }
            return false;
        }

        Integer integer() {
            skip_ws();
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits.push_back(s[pos++]);
            if (digits.empty()) throw ParseError("expected digits in expression", pos);
            return Integer(digits);
        }

        Poly atom() {
            skip_ws();
            if (consume('(')) {
                Poly e = expr();
                if (!consume(')')) throw ParseError("expected ')'", pos);
                return e;
            }
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                Integer num = integer();
                Integer den = 1;
                if (consume('/')) den = integer();
                if (den.is_zero()) throw ParseError("zero denominator in expression", pos);
                return Poly(Scalar(Rational(num, den)));
            }
            if (pos < s.size() && s[pos] == 'i') {
                ++pos;
                return Poly(Scalar::i());
            }
            if (pos + 1 < s.size() && s[pos] == 'x' && (s[pos + 1] == '1' || s[pos + 1] == '2')) {
                int which = s[pos + 1] - '1';
                pos += 2;
                return Poly::variable(which);
            }
            throw ParseError("unexpected token in expression", pos);
        }

        Poly power() {
            Poly base = atom();
            if (consume('^')) {
                Integer e = integer();
                if (e < 0 || e > 64) throw ParseError("exponent out of range", pos);
                Poly out{Scalar(1)};
                for (Integer k = 0; k < e; ++k) out = out * base;
                return out;
            }
            return base;
        }

        Poly term() {
            Poly out = power();
            while (consume('*')) out = out * power();
            return out;
        }

        Poly expr() {
            bool neg = false;
            skip_ws();
            if (consume('-'))
                neg = true;
            else
                consume('+');
            Poly out = term();
            if (neg) out = Scalar(-1) * out;
            while (true) {
                skip_ws();
                if (consume('+'))
                    out += term();
                else if (consume('-'))
                    out -= term();
                else
                    break;
            }
            return out;
        }
    };

    Parser p{text};
    Poly out = p.expr();
    if (!p.done()) throw ParseError("trailing characters in expression", p.pos);
    return out;
}

/// Constant-coefficient bidifferential operator: a sum of terms
/// coeff * (d^alpha (x) d^beta) acting on pairs of polynomials. Composition
/// is exponent addition (the operators commute).
class BidiffOp {
public:
    // key = (a1, a2, b1, b2) for d1^a1 d2^a2 (x) d1^b1 d2^b2
    using Key = std::array<int, 4>;

    BidiffOp() = default;

    static BidiffOp identity() {
        BidiffOp op;
        op.add_term({0, 0, 0, 0}, Scalar(1));
        return op;
    }

    /// d1 (x) d2 - d2 (x) d1, the generator of the Moyal family.
    static BidiffOp wedge12() {
        BidiffOp op;
        op.add_term({1, 0, 0, 1}, Scalar(1));
        op.add_term({0, 1, 1, 0}, Scalar(-1));
        return op;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    void add_term(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BidiffOp& operator+=(const BidiffOp& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    BidiffOp& operator-=(const BidiffOp& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend BidiffOp operator+(BidiffOp a, const BidiffOp& b) { return a += b; }
    friend BidiffOp operator-(BidiffOp a, const BidiffOp& b) { return a -= b; }

    friend BidiffOp operator*(const BidiffOp& a, const BidiffOp& b) {
        BidiffOp out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]},
                             ca * cb);
        return out;
    }
    friend BidiffOp operator*(const Scalar& s, const BidiffOp& op) {
        BidiffOp out;
        for (const auto& [k, c] : op.terms_) out.add_term(k, s * c);
        return out;
    }

    friend bool operator==(const BidiffOp& a, const BidiffOp& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BidiffOp& a, const BidiffOp& b) { return !(a == b); }

    /// Swaps the tensor legs: sigma(d^alpha (x) d^beta) = d^beta (x) d^alpha.
    BidiffOp braided() const {
        BidiffOp out;
        for (const auto& [k, c] : terms_) out.add_term({k[2], k[3], k[0], k[1]}, c);
        return out;
    }

    /// m(op |> (f (x) g)) = sum coeff * (d^alpha f) * (d^beta g).
    Poly apply(const Poly& f, const Poly& g) const {
        Poly out;
        for (const auto& [k, c] : terms_) {
            const Poly df = f.derivative(0, k[0]).derivative(1, k[1]);
            if (df.is_zero()) continue;
            const Poly dg = g.derivative(0, k[2]).derivative(1, k[3]);
            if (dg.is_zero()) continue;
            out += c * (df * dg);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BidiffOp& op) {
        if (op.is_zero()) return os << "0";
        bool first = true;
        for (const auto& [k, c] : op.terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")*";
            auto leg = [&os](int e1, int e2) {
                if (e1 == 0 && e2 == 0) {
                    os << "1";
                    return;
                }
                bool dot = false;
                if (e1 > 0) {
                    os << "d1";
                    if (e1 > 1) os << "^" << e1;
                    dot = true;
                }
                if (e2 > 0) {
                    if (dot) os << "*";
                    os << "d2";
                    if (e2 > 1) os << "^" << e2;
                }
            };
            leg(k[0], k[1]);
            os << "(x)";
            leg(k[2], k[3]);
        }
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    std::map<Key, Scalar> terms_;
};

/// Truncated formal series sum_r hbar^r coeffs[r]; arithmetic drops every
/// term beyond hbar^order.
template <class T>
struct HbarSeries {
    int order = 0;
    std::vector<T> coeffs; // size order + 1

    HbarSeries() = default;
    explicit HbarSeries(int n) : order(n), coeffs(static_cast<std::size_t>(n) + 1) {}

    static HbarSeries constant(int n, T value) {
        HbarSeries s(n);
        s.coeffs[0] = std::move(value);
        return s;
    }

    const T& operator[](std::size_t r) const { return coeffs[r]; }
    T& operator[](std::size_t r) { return coeffs[r]; }

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    /// The hbar-adic valuation exposed as the lowest nonzero order; -1 when
    /// the series is zero up to truncation.
    int lowest_nonzero_order() const {
        for (int r = 0; r <= order; ++r)
            if (!coeffs[static_cast<std::size_t>(r)].is_zero()) return r;
        return -1;
    }

    friend HbarSeries operator+(HbarSeries a, const HbarSeries& b) {
        if (a.order != b.order) throw ShapeError("series truncation orders differ");
        for (std::size_t r = 0; r < a.coeffs.size(); ++r) a.coeffs[r] += b.coeffs[r];
        return a;
    }
    friend HbarSeries operator-(HbarSeries a, const HbarSeries& b) {
        if (a.order != b.order) throw ShapeError("series truncation orders differ");
        for (std::size_t r = 0; r < a.coeffs.size(); ++r) a.coeffs[r] -= b.coeffs[r];
        return a;
    }
    friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
        if (a.order != b.order) throw ShapeError("series truncation orders differ");
        HbarSeries out(a.order);
        for (int r = 0; r <= a.order; ++r)
            for (int s = 0; s + r <= a.order; ++s)
                out.coeffs[static_cast<std::size_t>(r + s)] +=
                    a.coeffs[static_cast<std::size_t>(r)] * b.coeffs[static_cast<std::size_t>(s)];
        return out;
    }
    friend bool operator==(const HbarSeries& a, const HbarSeries& b) {
        return a.order == b.order && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const HbarSeries& a, const HbarSeries& b) { return !(a == b); }
};

/// Inverse of a series with invertible (here: identity) zeroth coefficient,
/// by the recursion J_0 = 1, J_i = -sum_{j=1..i} F_j J_{i-j}.
inline HbarSeries<BidiffOp> series_inverse(const HbarSeries<BidiffOp>& f) {
    if (f.coeffs.empty() || f.coeffs[0] != BidiffOp::identity())
        throw MathError("series inverse requires the identity in order zero");
    HbarSeries<BidiffOp> j(f.order);
    j.coeffs[0] = BidiffOp::identity();
    for (int i = 1; i <= f.order; ++i) {
        BidiffOp acc;
        for (int k = 1; k <= i; ++k)
            acc += f.coeffs[static_cast<std::size_t>(k)] * j.coeffs[static_cast<std::size_t>(i - k)];
        j.coeffs[static_cast<std::size_t>(i)] = BidiffOp() - acc;
    }
    return j;
}

/// Twist as a truncated series of bidifferential operators, with F_0 = 1 (x) 1
/// and F * F^{-1} = 1 (x) 1 mod hbar^{N+1} enforced on construction.
struct TwistSeries {
    HbarSeries<BidiffOp> f;
    HbarSeries<BidiffOp> finv;

    int order() const { return f.order; }

    static TwistSeries from_f(HbarSeries<BidiffOp> f) {
        HbarSeries<BidiffOp> inv = series_inverse(f);
        TwistSeries t{std::move(f), std::move(inv)};
        t.validate();
        return t;
    }

    void validate() const {
        if (f.coeffs.empty() || f.coeffs[0] != BidiffOp::identity())
            throw MathError("twist series must start with the identity operator");
        const auto id = HbarSeries<BidiffOp>::constant(f.order, BidiffOp::identity());
        if (f * finv != id || finv * f != id)
            throw MathError("twist series inverse fails F F^{-1} = 1 mod hbar^{N+1}");
    }
};

/// F = exp(-c hbar X) with X = d1 (x) d2 - d2 (x) d1, truncated at order n;
/// the inverse is exp(+c hbar X).
inline TwistSeries moyal_twist(const Scalar& c, int n) {
    if (n < 1) throw Error("moyal_twist requires order >= 1");
    const BidiffOp x = BidiffOp::wedge12();
    HbarSeries<BidiffOp> f(n), finv(n);
    BidiffOp xpow = BidiffOp::identity();
    Scalar factorial(1);
    Scalar minus_c_pow(1), c_pow(1);
    for (int r = 0; r <= n; ++r) {
        if (r > 0) {
            xpow = xpow * x;
            factorial *= Scalar(Rational(r));
            minus_c_pow *= -c;
            c_pow *= c;
        }
        f.coeffs[static_cast<std::size_t>(r)] = (minus_c_pow / factorial) * xpow;
        finv.coeffs[static_cast<std::size_t>(r)] = (c_pow / factorial) * xpow;
    }
    TwistSeries t{std::move(f), std::move(finv)};
    t.validate();
    return t;
}

/// f * g = sum_r hbar^r m(F^{-1}_r |> (f (x) g)).
inline HbarSeries<Poly> twist_product(const TwistSeries& t, const Poly& f, const Poly& g) {
    HbarSeries<Poly> out(t.order());
    for (int r = 0; r <= t.order(); ++r)
        out.coeffs[static_cast<std::size_t>(r)] =
            t.finv.coeffs[static_cast<std::size_t>(r)].apply(f, g);
    return out;
}

/// Star product of truncated series, convolving operator and input orders.
inline HbarSeries<Poly> star_series(const TwistSeries& t, const HbarSeries<Poly>& a,
                                    const HbarSeries<Poly>& b) {
    if (a.order != t.order() || b.order != t.order())
        throw ShapeError("series truncation orders differ");
    HbarSeries<Poly> out(t.order());
    for (int s = 0; s <= t.order(); ++s)
        for (int u = 0; u + s <= t.order(); ++u)
            for (int v = 0; v + u + s <= t.order(); ++v)
                out.coeffs[static_cast<std::size_t>(s + u + v)] +=
                    t.finv.coeffs[static_cast<std::size_t>(s)].apply(
                        a.coeffs[static_cast<std::size_t>(u)],
                        b.coeffs[static_cast<std::size_t>(v)]);
    return out;
}

struct AssociativityReport {
    bool pass = true;
    HbarSeries<Poly> residual; // (f*g)*h - f*(g*h), order by order
    int first_failure_order = -1;
};

/// (f*g)*h - f*(g*h) = 0 mod hbar^{N+1}, coefficientwise.
inline AssociativityReport check_associativity(const TwistSeries& t, const Poly& f, const Poly& g,
                                               const Poly& h) {
    const int n = t.order();
    const auto lift = [n](const Poly& p) { return HbarSeries<Poly>::constant(n, p); };
    const HbarSeries<Poly> left = star_series(t, star_series(t, lift(f), lift(g)), lift(h));
    const HbarSeries<Poly> right = star_series(t, lift(f), star_series(t, lift(g), lift(h)));
    AssociativityReport rep;
    rep.residual = left - right;
    rep.first_failure_order = rep.residual.lowest_nonzero_order();
    rep.pass = rep.first_failure_order < 0;
    return rep;
}

/// r = sigma(F_1) - F_1: the antisymmetrized first-order coefficient, as a
/// bidifferential operator on the abelian algebra spanned by d1, d2.
inline BidiffOp extract_rmatrix(const TwistSeries& t) {
    if (t.order() < 1) throw Error("extract_rmatrix requires order >= 1");
    const BidiffOp& f1 = t.f.coeffs[1];
    return f1.braided() - f1;
}

struct PoissonReport {
    bool pass = true;
    Poly lhs; // C_1(f,g) - C_1(g,f)
    Poly rhs; // m(r |> (f (x) g))
};

/// C_1(f,g) - C_1(g,f) = m(r |> (f (x) g)) with r = sigma(F_1) - F_1.
inline PoissonReport poisson_compatibility(const TwistSeries& t, const Poly& f, const Poly& g) {
    if (t.order() < 1) throw Error("poisson_compatibility requires order >= 1");
    const BidiffOp& c1 = t.finv.coeffs[1];
    PoissonReport rep;
    rep.lhs = c1.apply(f, g) - c1.apply(g, f);
    rep.rhs = extract_rmatrix(t).apply(f, g);
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

/// Independent reference: the double-sum star product on (q, p) = (x1, x2),
///   f * g = sum_{m,n} (i hbar / 2)^{m+n} (-1)^m / (m! n!)
///           (dp^m dq^n f)(dp^n dq^m g),
/// collected by hbar order up to n. Its order-1 antisymmetrization is half
/// the x1-x2 Poisson bracket times i.
inline HbarSeries<Poly> weyl_moyal_reference(const Poly& f, const Poly& g, int order) {
    HbarSeries<Poly> out(order);
    Scalar i_half = Scalar::i() / Scalar(2);
    for (int r = 0; r <= order; ++r) {
        Scalar pref(1);
        for (int t = 0; t < r; ++t) pref *= i_half;
        Poly acc;
        for (int m = 0; m <= r; ++m) {
            const int n = r - m;
            Scalar coeff = pref;
            if (m % 2 == 1) coeff = -coeff;
            Scalar fact(1);
            for (int t = 2; t <= m; ++t) fact *= Scalar(Rational(t));
            for (int t = 2; t <= n; ++t) fact *= Scalar(Rational(t));
            coeff /= fact;
            const Poly df = f.derivative(1, m).derivative(0, n);
            if (df.is_zero()) continue;
            const Poly dg = g.derivative(1, n).derivative(0, m);
            if (dg.is_zero()) continue;
            acc += coeff * (df * dg);
        }
        out.coeffs[static_cast<std::size_t>(r)] = std::move(acc);
    }
    return out;
}

} // namespace liecas
