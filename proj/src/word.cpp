#include "gader/word.hpp"

#include <algorithm>
#include <cctype>

namespace gader {

Word Word::from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (const Letter& l : letters) {
        if (l.exp == 0) continue;
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen) {
            w.letters_.back().exp += l.exp;
            if (w.letters_.back().exp == 0) w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
    }
    return w;
}

Word Word::from_syms(const std::vector<Sym>& syms) {
    std::vector<Letter> letters;
    letters.reserve(syms.size());
    for (Sym s : syms)
        letters.push_back({sym_gen(s), sym_positive(s) ? 1 : -1});
    return from_letters(letters);
}

Word Word::power(std::int32_t gen, std::int64_t exp) {
    Word w;
    if (exp != 0) w.letters_.push_back({gen, exp});
    return w;
}

std::int64_t Word::length() const {
    std::int64_t n = 0;
    for (const Letter& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
    return n;
}

std::int32_t Word::max_gen() const {
    std::int32_t m = -1;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->exp});
    return w;
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> letters = a.letters_;
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return Word::from_letters(letters);
}

std::vector<Sym> Word::flatten() const {
    std::vector<Sym> syms;
    syms.reserve(static_cast<std::size_t>(length()));
    for (const Letter& l : letters_) {
        Sym s = sym_make(l.gen, l.exp > 0);
        std::int64_t n = l.exp < 0 ? -l.exp : l.exp;
        for (std::int64_t i = 0; i < n; ++i) syms.push_back(s);
    }
    return syms;
}

bool shortlex_less(const Word& a, const Word& b) {
    std::int64_t la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    // Walk the runs without materializing the flattened strings.
    std::size_t ia = 0, ib = 0;
    std::int64_t oa = 0, ob = 0; // offset inside the current run
    while (ia < a.letters().size()) {
        const Letter& x = a.letters()[ia];
        const Letter& y = b.letters()[ib];
        Sym sa = sym_make(x.gen, x.exp > 0);
        Sym sb = sym_make(y.gen, y.exp > 0);
        if (sa != sb) return sa < sb;
        std::int64_t na = (x.exp < 0 ? -x.exp : x.exp) - oa;
        std::int64_t nb = (y.exp < 0 ? -y.exp : y.exp) - ob;
        std::int64_t step = std::min(na, nb);
        oa += step;
        ob += step;
        if (oa == (x.exp < 0 ? -x.exp : x.exp)) { ++ia; oa = 0; }
        if (ob == (y.exp < 0 ? -y.exp : y.exp)) { ++ib; ob = 0; }
    }
    return false;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
    if (w.is_identity()) return "e";
    std::string out;
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out += ' ';
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= names.size())
            throw UnknownGeneratorError("generator id " + std::to_string(l.gen) +
                                        " has no name");
        out += names[static_cast<std::size_t>(l.gen)];
        if (l.exp != 1) out += "^" + std::to_string(l.exp);
    }
    return out;
}

namespace {

struct WordParser {
    const std::string& text;
    const std::map<std::string, std::int32_t>& gen_ids;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
            if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
        }
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    std::int64_t parse_exponent() {
        ++pos; // consume '^'
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer exponent after '^'");
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            // Words get flattened to one symbol per exponent unit; keep
            // that materialization bounded.
            if (v > 1000000) fail("exponent too large (limit 10^6)");
            ++pos;
        }
        return neg ? -v : v;
    }

    // factor := name ['^' int] | '(' word ')' ['^' int]
    Word parse_factor() {
        skip_ws();
        if (text[pos] == '(') {
            ++pos;
            Word inner = parse_sequence(true);
            skip_ws();
            if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
            ++pos;
            std::int64_t exp = 1;
            if (pos < text.size() && text[pos] == '^') exp = parse_exponent();
            Word out;
            Word base = exp < 0 ? inner.inverse() : inner;
            std::int64_t n = exp < 0 ? -exp : exp;
            for (std::int64_t i = 0; i < n; ++i) out = out * base;
            return out;
        }
        std::size_t start = pos;
        if (!(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            fail("expected generator name");
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        std::int64_t exp = 1;
        if (pos < text.size() && text[pos] == '^') exp = parse_exponent();
        if (name == "e" && !gen_ids.count(name)) return Word::identity();
        auto it = gen_ids.find(name);
        if (it == gen_ids.end()) {
            pos = start;
            fail("unknown generator '" + name + "'");
        }
        return Word::power(it->second, exp);
    }

    Word parse_sequence(bool inside_parens) {
        Word w;
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            if (text[pos] == ')') {
                if (inside_parens) break;
                fail("unmatched ')'");
            }
            if (text[pos] == '1' && !std::isalnum(static_cast<unsigned char>(
                                        pos + 1 < text.size() ? text[pos + 1] : ' '))) {
                ++pos; // bare '1' is the identity
                continue;
            }
            w = w * parse_factor();
        }
        return w;
    }
};

} // namespace

Word parse_word(const std::string& text,
                const std::map<std::string, std::int32_t>& gen_ids) {
    WordParser p{text, gen_ids};
    if (p.at_end()) return Word::identity();
    Word w = p.parse_sequence(false);
    return w;
}

} // namespace gader
