#pragma once

#include <string>
#include <utility>

#include "qrst/laurent.hpp"

namespace qrst {

/// Exact rational function in q and t: a quotient of two Laurent polynomials
/// over the rationals.
///
/// Canonical form after normalize():
///  - zero is 0/1;
///  - num and den are ordinary polynomials (no negative exponents) sharing no
///    monomial factor: the joint minimum exponent is 0 in each variable;
///  - the lexicographically smallest term of den has coefficient +1.
///
/// Common factors of the form 1 - q^i t^j ("brackets") are cancelled by exact
/// trial division. Every denominator arising in this library is a product of
/// such brackets and a monomial, so this keeps quotients fully reduced without
/// a general multivariate gcd. Equality is decided by cross-multiplication and
/// does not depend on the reduction.
class RationalQT {
public:
    RationalQT() : num_(), den_(LaurentPoly::one()) {}
    explicit RationalQT(const Rat& c) : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}
    explicit RationalQT(long c) : RationalQT(Rat(c)) {}
    RationalQT(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) fail(errc::division_by_zero, "rational function with zero denominator");
        normalize();
        reduce();
    }
    explicit RationalQT(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one()) { normalize(); }

    static RationalQT zero() { return RationalQT(); }
    static RationalQT one() { return RationalQT(Rat(1)); }
    /// c * q^a t^b
    static RationalQT monomial(const Rat& c, int a, int b) {
        return RationalQT(LaurentPoly::monomial(c, QTExp{a, b}));
    }
    /// 1 - q^i t^j
    static RationalQT bracket(int i, int j) {
        LaurentPoly p = LaurentPoly::one();
        p.add_term(QTExp{i, j}, Rat(-1));
        return RationalQT(std::move(p));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    friend RationalQT operator+(const RationalQT& a, const RationalQT& b) {
        return RationalQT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalQT operator-(const RationalQT& a, const RationalQT& b) {
        return RationalQT(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalQT operator-(const RationalQT& a) {
        RationalQT r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalQT operator*(const RationalQT& a, const RationalQT& b) {
        return RationalQT(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalQT operator/(const RationalQT& a, const RationalQT& b) {
        if (b.is_zero()) fail(errc::division_by_zero, "division by the zero rational function");
        return RationalQT(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalQT& operator+=(const RationalQT& o) { return *this = *this + o; }
    RationalQT& operator-=(const RationalQT& o) { return *this = *this - o; }
    RationalQT& operator*=(const RationalQT& o) { return *this = *this * o; }
    RationalQT& operator/=(const RationalQT& o) { return *this = *this / o; }

    /// Equality as rational functions: cross-multiplication, no gcd required.
    friend bool eq(const RationalQT& a, const RationalQT& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
    friend bool operator==(const RationalQT& a, const RationalQT& b) { return eq(a, b); }

    /// Exact evaluation at a rational point.
    Rat eval(const Rat& qv, const Rat& tv) const {
        Rat d = den_.eval(qv, tv);
        if (d == 0) fail(errc::pole_at_point, "denominator vanishes at the evaluation point");
        return num_.eval(qv, tv) / d;
    }

    enum class Subst { q_to_zero, t_to_zero, t_equals_q, invert_both };

    RationalQT substitute(Subst mode) const {
        switch (mode) {
        case Subst::q_to_zero: {
            LaurentPoly d = den_.kill_q();
            if (d.is_zero()) fail(errc::pole_on_locus, "pole along q = 0");
            return RationalQT(num_.kill_q(), std::move(d));
        }
        case Subst::t_to_zero: {
            LaurentPoly d = den_.kill_t();
            if (d.is_zero()) fail(errc::pole_on_locus, "pole along t = 0");
            return RationalQT(num_.kill_t(), std::move(d));
        }
        case Subst::t_equals_q: {
            LaurentPoly d = den_.substitute_t_eq_q();
            if (d.is_zero()) fail(errc::pole_on_locus, "pole along t = q");
            return RationalQT(num_.substitute_t_eq_q(), std::move(d));
        }
        case Subst::invert_both:
            return RationalQT(num_.invert_vars(), den_.invert_vars());
        }
        fail(errc::parse_error, "unknown substitution");
    }

    /// Swaps q and t.
    RationalQT swap_qt() const { return RationalQT(num_.swap_vars(), den_.swap_vars()); }

    /// Restricts to t = q and takes the limit q -> 1, cancelling common powers
    /// of 1 - q by exact division. Errors if the limit diverges.
    Rat limit_q1_diagonal() const {
        LaurentPoly n = num_.substitute_t_eq_q();
        LaurentPoly d = den_.substitute_t_eq_q();
        QTExp lo{std::min(n.min_exp().q, d.min_exp().q), 0};
        n.shift(-lo);
        d.shift(-lo);
        Rat nv = n.eval(1, 1), dv = d.eval(1, 1);
        while (nv == 0 && dv == 0) {
            n = divide_univariate_by_one_minus_q(n);
            d = divide_univariate_by_one_minus_q(d);
            nv = n.eval(1, 1);
            dv = d.eval(1, 1);
        }
        if (dv == 0) fail(errc::pole_at_one, "diagonal limit diverges at q = 1");
        return nv / dv;
    }

    /// Cancels common bracket factors 1 - q^i t^j from num and den. Candidates
    /// are screened with a modular evaluation on the variety q^i t^j = 1
    /// before any exact division is attempted.
    void reduce() {
        if (num_.is_zero() || den_.is_one()) return;
        bool progress = true;
        while (progress) {
            progress = false;
            QTExp bound{std::min(num_.max_exp().q, den_.max_exp().q),
                        std::min(num_.max_exp().t, den_.max_exp().t)};
            auto den_img = den_.mod_image();
            std::optional<LaurentPoly::ModImage> num_img;
            bool num_img_ready = false;
            for (int total = bound.q + bound.t; total >= 1 && !progress; --total) {
                for (int i = std::min(total, bound.q); i >= 0 && !progress; --i) {
                    int j = total - i;
                    if (j > bound.t) continue;
                    if (den_img && !den_img->vanishes_on_bracket(i, j)) continue;
                    if (!num_img_ready) {
                        num_img = num_.mod_image();
                        num_img_ready = true;
                    }
                    if (num_img && !num_img->vanishes_on_bracket(i, j)) continue;
                    auto dq = den_.try_divide_bracket(i, j);
                    if (!dq) continue;
                    auto nq = num_.try_divide_bracket(i, j);
                    if (!nq) continue;
                    num_ = std::move(*nq);
                    den_ = std::move(*dq);
                    normalize();
                    progress = true;
                }
            }
        }
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        QTExp nmin = num_.min_exp(), dmin = den_.min_exp();
        QTExp shift{std::min(nmin.q, dmin.q), std::min(nmin.t, dmin.t)};
        num_.shift(-shift);
        den_.shift(-shift);
        Rat lead = den_.terms().begin()->second;
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            num_.scale(inv);
            den_.scale(inv);
        }
    }

    static LaurentPoly divide_univariate_by_one_minus_q(const LaurentPoly& p) {
        // p = (1 - q) * r  <=>  r's coefficients are the prefix sums of p's.
        LaurentPoly r;
        Rat acc(0);
        int prev = p.min_exp().q;
        for (const auto& [e, c] : p.terms()) {
            if (acc != 0)
                for (int k = prev; k < e.q; ++k) r.add_term(QTExp{k, 0}, acc);
            acc += c;
            if (acc != 0) r.add_term(QTExp{e.q, 0}, acc);
            prev = e.q + 1;
        }
        return r;
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

inline RationalQT operator*(const Rat& c, const RationalQT& f) { return RationalQT(c) * f; }

} // namespace qrst
