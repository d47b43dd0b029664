#pragma once

#include <compare>
#include <map>
#include <optional>
#include <utility>

#include "qrst/rational.hpp"

namespace qrst {

/// Exponent pair of a Laurent monomial q^q_exp * t^t_exp. Ordering is
/// lexicographic (q first), which fixes the term order everywhere: iteration,
/// serialization, and the pivot used in exact division.
struct QTExp {
    int q = 0;
    int t = 0;
    friend auto operator<=>(const QTExp&, const QTExp&) = default;
    QTExp operator+(const QTExp& o) const { return {q + o.q, t + o.t}; }
    QTExp operator-(const QTExp& o) const { return {q - o.q, t - o.t}; }
    QTExp operator-() const { return {-q, -t}; }
};

/// Sparse Laurent polynomial in q and t over the rationals.
/// Invariant: no stored zero coefficients.
class LaurentPoly {
public:
    using Terms = std::map<QTExp, Rat>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) {
        if (c != 0) terms_[QTExp{0, 0}] = c;
    }
    static LaurentPoly monomial(const Rat& c, QTExp e) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }
    static LaurentPoly one() { return LaurentPoly(Rat(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0} && terms_.begin()->second == 1;
    }
    std::size_t size() const { return terms_.size(); }

    void add_term(QTExp e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    void scale(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return;
        }
        for (auto& [e, v] : terms_) v *= c;
    }
    void shift(QTExp d) {
        if (d == QTExp{0, 0}) return;
        Terms shifted;
        for (const auto& [e, c] : terms_) shifted.emplace(e + d, c);
        terms_ = std::move(shifted);
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Componentwise minimum / maximum of the exponent support (zero for the
    /// zero polynomial).
    QTExp min_exp() const {
        QTExp m{0, 0};
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                m = e;
                first = false;
            } else {
                m.q = std::min(m.q, e.q);
                m.t = std::min(m.t, e.t);
            }
        }
        return m;
    }
    QTExp max_exp() const {
        QTExp m{0, 0};
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                m = e;
                first = false;
            } else {
                m.q = std::max(m.q, e.q);
                m.t = std::max(m.t, e.t);
            }
        }
        return m;
    }

    Rat coeff(QTExp e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// Exact point evaluation. Negative exponents on a zero base are a pole.
    Rat eval(const Rat& qv, const Rat& tv) const {
        Rat sum(0);
        for (const auto& [e, c] : terms_) sum += c * rat_pow(qv, e.q) * rat_pow(tv, e.t);
        return sum;
    }

    /// The substitution t = q, collapsing to a univariate Laurent polynomial.
    LaurentPoly substitute_t_eq_q() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.add_term(QTExp{e.q + e.t, 0}, c);
        return r;
    }

    /// Swaps the roles of q and t.
    LaurentPoly swap_vars() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[QTExp{e.t, e.q}] = c;
        return r;
    }

    /// Negates every exponent (q,t) -> (q^{-1}, t^{-1}).
    LaurentPoly invert_vars() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    /// Drops all terms with a positive exponent of the killed variable.
    /// Assumes the polynomial is ordinary in that variable.
    LaurentPoly kill_q() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            if (e.q == 0) r.terms_[e] = c;
        return r;
    }
    LaurentPoly kill_t() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            if (e.t == 0) r.terms_[e] = c;
        return r;
    }

    /// Image of the polynomial modulo the Mersenne prime 2^61 - 1, used as a
    /// fast necessary test for bracket divisibility. Returns nullopt when a
    /// coefficient denominator is divisible by the prime (then no filtering).
    struct ModImage {
        static constexpr std::uint64_t P = (1ULL << 61) - 1;
        std::vector<std::tuple<int, int, std::uint64_t>> terms; // eq, et, coeff

        static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
            return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % P);
        }
        static std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
            std::uint64_t r = 1;
            b %= P;
            while (e) {
                if (e & 1) r = mulmod(r, b);
                b = mulmod(b, b);
                e >>= 1;
            }
            return r;
        }
        /// Evaluates at a point of the variety q^i t^j = 1; a nonzero value
        /// certifies that 1 - q^i t^j does not divide the polynomial. The
        /// point is (r^j, r^{-i}) for a fixed base r; powers of the monomial
        /// images are cached across calls for the lifetime of the image.
        bool vanishes_on_bracket(int i, int j) {
            constexpr std::uint64_t r = 1234567891011ULL;
            constexpr std::uint64_t rinv = 212042116942762790ULL; // r^{P-2} mod P
            if (base_pow.empty()) {
                base_pow.resize(1, 1);
                inv_pow.resize(1, 1);
            }
            auto rp = [&](std::uint64_t e) {
                while (base_pow.size() <= e) base_pow.push_back(mulmod(base_pow.back(), r));
                return base_pow[e];
            };
            auto rn = [&](std::uint64_t e) {
                while (inv_pow.size() <= e) inv_pow.push_back(mulmod(inv_pow.back(), rinv));
                return inv_pow[e];
            };
            std::uint64_t acc = 0;
            for (const auto& [eq, et, c] : terms) {
                long long e = static_cast<long long>(j) * eq - static_cast<long long>(i) * et;
                std::uint64_t point =
                    e >= 0 ? rp(static_cast<std::uint64_t>(e)) : rn(static_cast<std::uint64_t>(-e));
                acc += mulmod(c, point);
                if (acc >= P) acc -= P;
            }
            return acc == 0;
        }

        std::vector<std::uint64_t> base_pow, inv_pow;
    };

    /// Requires an ordinary polynomial (no negative exponents).
    std::optional<ModImage> mod_image() const {
        ModImage img;
        img.terms.reserve(terms_.size());
        for (const auto& [e, c] : terms_) {
            std::uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), ModImage::P);
            if (den == 0) return std::nullopt;
            std::uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), ModImage::P);
            std::uint64_t v = ModImage::mulmod(num, ModImage::powmod(den, ModImage::P - 2));
            img.terms.emplace_back(e.q, e.t, v);
        }
        return img;
    }

    /// Attempts exact division by 1 - q^i t^j (i,j >= 0, not both zero).
    /// Returns the quotient, or nullopt if the division leaves a remainder.
    /// Requires an ordinary polynomial (no negative exponents).
    std::optional<LaurentPoly> try_divide_bracket(int i, int j) const {
        if (is_zero()) return LaurentPoly();
        const QTExp m{i, j};
        const QTExp lo = min_exp();
        const QTExp hi = max_exp();
        // An exact quotient has support in the box [lo, hi - m].
        const QTExp qhi{hi.q - m.q, hi.t - m.t};
        if (qhi.q < lo.q || qhi.t < lo.t) return std::nullopt;
        LaurentPoly quotient;
        LaurentPoly rem = *this;
        while (!rem.is_zero()) {
            const auto& [e, c] = *rem.terms_.begin();
            if (e.q < lo.q || e.t < lo.t || e.q > qhi.q || e.t > qhi.t) return std::nullopt;
            quotient.terms_[e] = c;
            rem.add_term(e + m, c);
            rem.terms_.erase(rem.terms_.begin());
        }
        return quotient;
    }

    /// Attempts exact division by a divisor whose lexicographically smallest
    /// term is the constant 1. Both polynomials must be ordinary.
    std::optional<LaurentPoly> try_divide_lexmin(const LaurentPoly& divisor) const {
        if (is_zero()) return LaurentPoly();
        if (divisor.terms_.empty() || !(divisor.terms_.begin()->first == QTExp{0, 0}) ||
            divisor.terms_.begin()->second != 1)
            fail(errc::parse_error, "divisor must have unit constant term");
        const QTExp lo = min_exp();
        const QTExp hi = max_exp();
        const QTExp dmax = divisor.max_exp();
        const QTExp qhi{hi.q - dmax.q, hi.t - dmax.t};
        if (qhi.q < lo.q || qhi.t < lo.t) return std::nullopt;
        LaurentPoly quotient;
        LaurentPoly rem = *this;
        while (!rem.is_zero()) {
            const auto& [e, c] = *rem.terms_.begin();
            if (e.q < lo.q || e.t < lo.t || e.q > qhi.q || e.t > qhi.t) return std::nullopt;
            QTExp e0 = e;
            Rat c0 = c;
            quotient.terms_[e0] = c0;
            for (const auto& [de, dc] : divisor.terms_) rem.add_term(e0 + de, -c0 * dc);
        }
        return quotient;
    }

private:
    Terms terms_;
};

} // namespace qrst
