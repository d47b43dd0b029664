#pragma once

#include <limits>
#include <map>

#include "qrst/rational_qt.hpp"

namespace qrst {

/// A rational function kept in factored form:
///
///     scalar * q^a t^b * prod over (i,j) of (1 - q^i t^j)^e
///
/// The closed forms in this library are all products of such brackets and
/// monomials; building them factored and expanding once at the end avoids
/// intermediate blowup. Products and quotients are exact and cancel factor
/// by factor.
class BracketProduct {
public:
    BracketProduct() = default;
    explicit BracketProduct(const Rat& scalar) : scalar_(scalar) {}

    static BracketProduct one() { return BracketProduct(Rat(1)); }
    static BracketProduct monomial(const Rat& scalar, int a, int b) {
        BracketProduct p(scalar);
        p.mono_ = QTExp{a, b};
        return p;
    }
    /// (1 - q^i t^j)^e
    static BracketProduct bracket(int i, int j, int e = 1) {
        BracketProduct p = one();
        p.mul_bracket(i, j, e);
        return p;
    }

    const Rat& scalar() const { return scalar_; }
    QTExp mono() const { return mono_; }
    const std::map<QTExp, int>& factors() const { return factors_; }
    bool is_zero() const { return scalar_ == 0; }

    BracketProduct& mul_scalar(const Rat& c) {
        scalar_ *= c;
        if (scalar_ == 0) {
            mono_ = QTExp{0, 0};
            factors_.clear();
        }
        return *this;
    }
    BracketProduct& mul_mono(int a, int b) {
        if (!is_zero()) mono_ = mono_ + QTExp{a, b};
        return *this;
    }
    BracketProduct& mul_bracket(int i, int j, int e = 1) {
        if (i == 0 && j == 0) fail(errc::degenerate_bracket, "factor 1 - q^0 t^0 is zero");
        if (is_zero() || e == 0) return *this;
        QTExp key{i, j};
        auto [it, inserted] = factors_.emplace(key, e);
        if (!inserted) {
            it->second += e;
            if (it->second == 0) factors_.erase(it);
        }
        return *this;
    }
    BracketProduct& div_bracket(int i, int j, int e = 1) { return mul_bracket(i, j, -e); }

    BracketProduct& operator*=(const BracketProduct& o) {
        if (is_zero()) return *this;
        if (o.is_zero()) return *this = BracketProduct();
        scalar_ *= o.scalar_;
        mono_ = mono_ + o.mono_;
        for (const auto& [e, k] : o.factors_) mul_bracket(e.q, e.t, k);
        return *this;
    }
    friend BracketProduct operator*(BracketProduct a, const BracketProduct& b) { return a *= b; }

    BracketProduct inverse() const {
        if (is_zero()) fail(errc::division_by_zero, "inverting a zero bracket product");
        BracketProduct r(Rat(1) / scalar_);
        r.mono_ = -mono_;
        for (const auto& [e, k] : factors_) r.factors_[e] = -k;
        return r;
    }
    BracketProduct& operator/=(const BracketProduct& o) { return *this *= o.inverse(); }
    friend BracketProduct operator/(BracketProduct a, const BracketProduct& b) { return a /= b; }

    BracketProduct pow(int e) const {
        BracketProduct r = one();
        if (e == 0) return r;
        r.scalar_ = rat_pow(scalar_, e);
        r.mono_ = QTExp{mono_.q * e, mono_.t * e};
        for (const auto& [f, k] : factors_) r.factors_[f] = k * e;
        return r;
    }

    /// Substitution (q,t) -> (q^{-1}, t^{-1}), staying factored via
    /// [i,j] at (q^{-1},t^{-1}) = -q^{-i} t^{-j} [i,j].
    BracketProduct invert_both() const {
        if (is_zero()) return *this;
        BracketProduct r = *this;
        r.mono_ = -r.mono_;
        for (const auto& [f, k] : factors_) {
            r.mono_ = r.mono_ - QTExp{f.q * k, f.t * k};
            if (k % 2 != 0) r.scalar_ = -r.scalar_;
        }
        return r;
    }

    /// Interchanges q and t.
    BracketProduct swap_qt() const {
        BracketProduct r(scalar_);
        r.mono_ = QTExp{mono_.t, mono_.q};
        for (const auto& [f, k] : factors_) r.factors_[QTExp{f.t, f.q}] = k;
        return r;
    }

    /// Exact numeric evaluation in factored form; detects poles factor-wise.
    Rat eval(const Rat& qv, const Rat& tv) const {
        if (is_zero()) return Rat(0);
        Rat value = scalar_ * rat_pow(qv, mono_.q) * rat_pow(tv, mono_.t);
        int zero_exp = 0;
        for (const auto& [f, k] : factors_) {
            Rat b = Rat(1) - rat_pow(qv, f.q) * rat_pow(tv, f.t);
            if (b == 0) {
                zero_exp += k;
                continue;
            }
            value *= rat_pow(b, k);
        }
        if (zero_exp < 0) fail(errc::pole_at_point, "bracket factor in the denominator vanishes");
        if (zero_exp > 0) return Rat(0);
        return value;
    }

    /// Expands to a quotient of Laurent polynomials.
    RationalQT to_rational() const {
        if (is_zero()) return RationalQT::zero();
        LaurentPoly num = LaurentPoly::monomial(scalar_, mono_);
        LaurentPoly den = LaurentPoly::one();
        for (const auto& [f, k] : factors_) {
            LaurentPoly b = LaurentPoly::one();
            b.add_term(f, Rat(-1));
            for (int i = 0; i < std::abs(k); ++i) {
                if (k > 0)
                    num *= b;
                else
                    den *= b;
            }
        }
        return RationalQT(std::move(num), std::move(den));
    }

private:
    Rat scalar_ = Rat(0);
    QTExp mono_{0, 0};
    std::map<QTExp, int> factors_;
};

/// Factors an ordinary polynomial into scalar * monomial * brackets with
/// integer exponents, by trial division: plain brackets 1 - q^i t^j first
/// (largest total degree down), then geometric pieces
/// 1 + m + ... + m^{k-1} = (1 - m^k)/(1 - m), which contribute a bracket to
/// the numerator and one to the denominator. Returns nullopt when an
/// unrecognized factor remains.
inline std::optional<BracketProduct> factor_into_brackets(const LaurentPoly& poly) {
    if (poly.is_zero()) return BracketProduct();
    LaurentPoly p = poly;
    QTExp shift = p.min_exp();
    p.shift(-shift);
    Rat scalar = p.terms().begin()->second;
    p.scale(Rat(1) / scalar);
    BracketProduct out = BracketProduct::monomial(scalar, shift.q, shift.t);
    auto take = [&](LaurentPoly quotient) {
        p = std::move(quotient);
        Rat lead = p.is_zero() ? Rat(1) : p.terms().begin()->second;
        if (lead != 1) {
            out.mul_scalar(lead);
            p.scale(Rat(1) / lead);
        }
    };
    while (!p.is_one()) {
        QTExp hi = p.max_exp();
        auto img = p.mod_image();
        bool found = false;
        for (int total = hi.q + hi.t; total >= 1 && !found; --total)
            for (int i = std::min(total, hi.q); i >= 0 && !found; --i) {
                int j = total - i;
                if (j > hi.t) continue;
                if (img && !img->vanishes_on_bracket(i, j)) continue;
                auto quotient = p.try_divide_bracket(i, j);
                if (!quotient) continue;
                out.mul_bracket(i, j);
                take(std::move(*quotient));
                found = true;
            }
        if (found) continue;
        for (int i = 0; i <= hi.q && !found; ++i)
            for (int j = (i == 0 ? 1 : 0); j <= hi.t && !found; ++j) {
                int kq = i > 0 ? hi.q / i + 1 : std::numeric_limits<int>::max();
                int kt = j > 0 ? hi.t / j + 1 : std::numeric_limits<int>::max();
                int kmax = std::min(kq, kt);
                for (int k = 2; k <= kmax && !found; ++k) {
                    LaurentPoly geo;
                    for (int u = 0; u < k; ++u) geo.add_term(QTExp{u * i, u * j}, Rat(1));
                    auto quotient = p.try_divide_lexmin(geo);
                    if (!quotient) continue;
                    out.mul_bracket(k * i, k * j).div_bracket(i, j);
                    take(std::move(*quotient));
                    found = true;
                }
            }
        if (!found) return std::nullopt;
    }
    return out;
}

/// Exact sum of factored products. The common part (componentwise minimum of
/// the factor exponents and monomials) is pulled out, the small residuals are
/// expanded and added, and the result is factored back. The inputs arising in
/// this library always re-factor; a nullopt means they did not.
inline std::optional<BracketProduct> factored_sum(const std::vector<BracketProduct>& terms) {
    std::vector<const BracketProduct*> live;
    for (const BracketProduct& t : terms)
        if (!t.is_zero()) live.push_back(&t);
    if (live.empty()) return BracketProduct();
    if (live.size() == 1) return *live.front();
    BracketProduct common = BracketProduct::monomial(Rat(1), live.front()->mono().q, live.front()->mono().t);
    std::map<QTExp, int> common_factors = live.front()->factors();
    QTExp cm = live.front()->mono();
    for (std::size_t k = 1; k < live.size(); ++k) {
        cm.q = std::min(cm.q, live[k]->mono().q);
        cm.t = std::min(cm.t, live[k]->mono().t);
        for (auto it = common_factors.begin(); it != common_factors.end();) {
            auto found = live[k]->factors().find(it->first);
            int other = found == live[k]->factors().end() ? 0 : found->second;
            it->second = std::min(it->second, other);
            if (it->second == 0)
                it = common_factors.erase(it);
            else
                ++it;
        }
        // brackets missing from the running common but negative in this term
        for (const auto& [key, e] : live[k]->factors())
            if (e < 0 && !common_factors.count(key)) {
                int m = e;
                for (std::size_t k2 = 0; k2 < live.size(); ++k2) {
                    auto f = live[k2]->factors().find(key);
                    m = std::min(m, f == live[k2]->factors().end() ? 0 : f->second);
                }
                common_factors[key] = m;
            }
    }
    common = BracketProduct::monomial(Rat(1), cm.q, cm.t);
    for (const auto& [key, e] : common_factors) common.mul_bracket(key.q, key.t, e);
    LaurentPoly acc;
    for (const BracketProduct* t : live) {
        RationalQT residual = (*t / common).to_rational();
        if (!residual.den().is_one()) return std::nullopt; // residual must be polynomial
        acc += residual.num();
    }
    // The sum may need factors split across the common part and the residual
    // sum, e.g. (1-q)(1+q) = 1-q^2; fold positive common brackets back in one
    // at a time until the residual factors.
    while (true) {
        auto factored = factor_into_brackets(acc);
        if (factored) return *factored * common;
        QTExp pick{0, 0};
        int found = 0;
        for (const auto& [key, e] : common.factors())
            if (e > 0) {
                pick = key;
                found = 1;
                break;
            }
        if (!found) return std::nullopt;
        LaurentPoly b = LaurentPoly::one();
        b.add_term(pick, Rat(-1));
        acc *= b;
        common.div_bracket(pick.q, pick.t);
    }
}

/// q^A t^B - q^C t^D as a factored product. Used by the interpolation-style
/// formulas, whose exponent pairs are always componentwise comparable.
inline BracketProduct monomial_difference(QTExp a, QTExp b) {
    if (a == b) return BracketProduct();
    const bool a_ge = a.q >= b.q && a.t >= b.t;
    const bool b_ge = b.q >= a.q && b.t >= a.t;
    if (!a_ge && !b_ge)
        fail(errc::parse_error, "monomial difference with incomparable exponents");
    if (a_ge) {
        // -q^C t^D (1 - q^{A-C} t^{B-D})
        BracketProduct r = BracketProduct::monomial(Rat(-1), b.q, b.t);
        r.mul_bracket(a.q - b.q, a.t - b.t);
        return r;
    }
    BracketProduct r = BracketProduct::monomial(Rat(1), a.q, a.t);
    r.mul_bracket(b.q - a.q, b.t - a.t);
    return r;
}

} // namespace qrst
