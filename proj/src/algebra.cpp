#include "gader/algebra.hpp"

#include <cctype>

namespace gader {

void check_same_ctx(const AlgebraElement& u, const AlgebraElement& v) {
    if (u.ctx_ && v.ctx_ && u.ctx_ != v.ctx_)
        throw CtxMismatchError("algebra elements belong to different group contexts");
}

AlgebraElement AlgebraElement::monomial(const GroupCtx& ctx, const Word& w,
                                        const Rational& q) {
    AlgebraElement u(&ctx);
    if (!q.is_zero()) u.terms_.emplace(ctx.normal_form(w), q);
    return u;
}

Rational AlgebraElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Word& w, const Rational& q) {
    if (q.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, q);
    if (!fresh) {
        it->second += q;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out(ctx_);
    for (const auto& [w, q] : terms_) out.terms_.emplace(w, -q);
    return out;
}

AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v) {
    return add(u, v);
}

AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v) {
    return add(u, -v);
}

AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) {
    check_same_ctx(u, v);
    AlgebraElement out(u.ctx() ? u.ctx() : v.ctx());
    for (const auto& [w, q] : u.terms()) out.add_term(w, q);
    for (const auto& [w, q] : v.terms()) out.add_term(w, q);
    return out;
}

AlgebraElement scale(const Rational& q, const AlgebraElement& u) {
    AlgebraElement out(u.ctx());
    if (q.is_zero()) return out;
    for (const auto& [w, c] : u.terms()) out.add_term(w, q * c);
    return out;
}

AlgebraElement convolve(const AlgebraElement& u, const AlgebraElement& v) {
    check_same_ctx(u, v);
    const GroupCtx* ctx = u.ctx() ? u.ctx() : v.ctx();
    AlgebraElement out(ctx);
    for (const auto& [g, a] : u.terms())
        for (const auto& [h, b] : v.terms())
            out.add_term(ctx->multiply(g, h), a * b);
    return out;
}

AlgebraElement commutator(const AlgebraElement& u, const AlgebraElement& v) {
    return convolve(u, v) - convolve(v, u);
}

std::string format_element(const AlgebraElement& u) {
    if (u.is_zero()) return "0";
    std::string out;
    const GroupCtx* ctx = u.ctx();
    for (const auto& [w, q] : u.terms()) {
        Rational mag = q < Rational(0) ? -q : q;
        if (out.empty()) {
            if (q < Rational(0)) out += "-";
        } else {
            out += q < Rational(0) ? " - " : " + ";
        }
        out += mag.str() + "*" + (ctx ? ctx->format(w) : std::string("?"));
    }
    return out;
}

AlgebraElement parse_element(const GroupCtx& ctx, const std::string& text) {
    AlgebraElement out(&ctx);
    // term := [sign] [rational '*'] word ; terms joined by '+'/'-'.
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size()) return out;
    if (text.compare(pos, 1, "0") == 0 && pos + 1 == text.size()) return out;

    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        Rational sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", 1,
                             static_cast<int>(pos) + 1);
        }
        first = false;

        // Optional coefficient: digits [/ digits] followed by '*'.
        Rational coeff = 1;
        std::size_t save = pos;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t end = pos;
            while (end < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '/'))
                ++end;
            std::size_t after = end;
            while (after < text.size() &&
                   std::isspace(static_cast<unsigned char>(text[after])))
                ++after;
            if (after < text.size() && text[after] == '*') {
                coeff = Rational::parse(text.substr(pos, end - pos));
                pos = after + 1;
            } else if (after >= text.size() || text[after] == '+' || text[after] == '-') {
                // Bare rational term: coefficient times the identity.
                coeff = Rational::parse(text.substr(pos, end - pos));
                pos = after;
                out.add_term(Word::identity(), sign * coeff);
                continue;
            } else {
                pos = save;
            }
        }

        // Word: up to the next top-level '+'/'-'.
        skip_ws();
        std::size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == '+' || (c == '-' && text[pos - 1] != '^'))) break;
            ++pos;
        }
        std::string word_text = text.substr(start, pos - start);
        if (word_text.find_first_not_of(" \t") == std::string::npos)
            throw ParseError("expected word in algebra element term", 1,
                             static_cast<int>(start) + 1);
        out.add_term(ctx.parse(word_text), sign * coeff);
    }
    return out;
}

} // namespace gader
