#pragma once

#include <map>
#include <string>

#include "gader/group.hpp"
#include "gader/rational.hpp"
#include "gader/word.hpp"

namespace gader {

/// Finite formal rational combination of normal-form group elements, with
/// convolution as the product. Zero coefficients are never stored; the
/// empty term map is the zero element. Pure value semantics.
class AlgebraElement {
public:
    using Terms = std::map<Word, Rational, ShortlexLess>;

    AlgebraElement() = default;
    explicit AlgebraElement(const GroupCtx* ctx) : ctx_(ctx) {}

    static AlgebraElement zero(const GroupCtx& ctx) { return AlgebraElement(&ctx); }

    /// q * normal_form(w) as a one-term element.
    static AlgebraElement monomial(const GroupCtx& ctx, const Word& w,
                                   const Rational& q = 1);

    const GroupCtx* ctx() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    Rational coeff(const Word& w) const;

    /// Adds q at normal-form key w, dropping the term if it cancels.
    void add_term(const Word& w, const Rational& q);

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v);
    friend AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v);
    friend bool operator==(const AlgebraElement& u, const AlgebraElement& v) {
        return u.terms_ == v.terms_;
    }
    friend bool operator!=(const AlgebraElement& u, const AlgebraElement& v) {
        return !(u == v);
    }

private:
    const GroupCtx* ctx_ = nullptr;
    Terms terms_;

    friend void check_same_ctx(const AlgebraElement& u, const AlgebraElement& v);
};

AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement scale(const Rational& q, const AlgebraElement& u);

/// Convolution: sum of coeff_u(g) coeff_v(h) at normal_form(g h). Bilinear.
AlgebraElement convolve(const AlgebraElement& u, const AlgebraElement& v);

/// u * v - v * u.
AlgebraElement commutator(const AlgebraElement& u, const AlgebraElement& v);

/// "2*e + 1*x1 - 3*x1 x2^-1"; "0" for the zero element.
std::string format_element(const AlgebraElement& u);

/// Parses the rendering above (also accepts bare words like "x1 x2" and
/// coefficients without '*' words, e.g. "3").
AlgebraElement parse_element(const GroupCtx& ctx, const std::string& text);

} // namespace gader
