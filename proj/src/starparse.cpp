#include <cctype>
#include <string>

#include "quiveralg/starcalc.hpp"

namespace starcalc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

long long parse_ll(std::string_view s, size_t pos, const char* what) {
    try {
        size_t used = 0;
        long long v = std::stoll(std::string(s), &used);
        if (used != s.size()) throw ParseError(std::string("malformed ") + what, pos);
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError(std::string("malformed ") + what, pos);
    } catch (const std::out_of_range&) {
        throw ParseError(std::string(what) + " out of range", pos);
    }
}

numt::Int parse_int(std::string_view s, size_t pos) {
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (!all_digits(s.substr(i))) throw ParseError("malformed integer", pos);
    numt::Int v(std::string(s.substr(i)));
    return neg ? numt::Int(-v) : v;
}

Letter parse_unitary(std::string_view tok, size_t pos, const TorusQuiverSpec& spec) {
    size_t i = 1;
    size_t jstart = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == jstart) throw ParseError("expected unitary index after 'U'", pos);
    long long j = parse_ll(tok.substr(jstart, i - jstart), pos, "unitary index");
    if (j < 1 || j > spec.d)
        throw ParseError("unitary index " + std::to_string(j) + " out of range 1.." +
                             std::to_string(spec.d),
                         pos);
    long long e = 1;
    if (i < tok.size() && tok[i] == '*') {
        e = -1;
        ++i;
    } else if (i < tok.size() && tok[i] == '^') {
        ++i;
        if (i >= tok.size()) throw ParseError("expected exponent after '^'", pos);
        e = parse_ll(tok.substr(i), pos, "exponent");
        i = tok.size();
        if (e == 0) throw ParseError("zero exponent", pos);
    }
    if (i != tok.size()) throw ParseError("malformed unitary token", pos);
    return Letter{LetterKind::U, static_cast<int>(j), e};
}

GaussianRational parse_coefficient(std::string_view tok, size_t pos) {
    bool imaginary = false;
    if (!tok.empty() && tok.back() == 'i') {
        imaginary = true;
        tok.remove_suffix(1);
    }
    if (tok.empty()) throw ParseError("malformed coefficient", pos);
    numt::Int num, den = 1;
    size_t slash = tok.find('/');
    if (slash == std::string_view::npos) {
        num = parse_int(tok, pos);
    } else {
        num = parse_int(tok.substr(0, slash), pos);
        den = parse_int(tok.substr(slash + 1), pos);
        if (den == 0) throw ParseError("zero denominator", pos);
    }
    numt::Rat r(num, den);
    return imaginary ? GaussianRational(numt::Rat(0), r) : GaussianRational(r);
}

}  // namespace

std::vector<GeneratorWord> parse_word(std::string_view text, const TorusQuiverSpec& spec) {
    std::vector<GeneratorWord> out;
    GeneratorWord cur;
    bool in_word = false;
    int sign = 1;
    bool sign_pending = false;
    size_t last_sign_pos = 0;

    auto flush = [&](void) {
        if (sign < 0) cur.coeff = GaussianRational(numt::Rat(-1)) * cur.coeff;
        out.push_back(std::move(cur));
        cur = GeneratorWord{};
        in_word = false;
        sign = 1;
        sign_pending = false;
    };

    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::string_view tok = text.substr(start, i - start);

        if (tok == "+" || tok == "-") {
            if (in_word) flush();
            if (tok == "-") sign = -sign;
            sign_pending = true;
            last_sign_pos = start;
            continue;
        }
        if (tok == "S") {
            cur.letters.push_back(Letter{LetterKind::S, 0, 0});
        } else if (tok == "S*") {
            cur.letters.push_back(Letter{LetterKind::SStar, 0, 0});
        } else if (tok[0] == 'U') {
            cur.letters.push_back(parse_unitary(tok, start, spec));
        } else if (tok[0] == '-' || tok[0] == '+' || tok[0] == '/' ||
                   std::isdigit(static_cast<unsigned char>(tok[0]))) {
            cur.coeff = cur.coeff * parse_coefficient(tok, start);
        } else {
            throw ParseError("unrecognized token '" + std::string(tok) + "'", start);
        }
        in_word = true;
        sign_pending = false;
    }
    if (in_word) {
        flush();
    } else if (sign_pending) {
        throw ParseError("dangling sign", last_sign_pos);
    }
    if (out.empty()) throw ParseError("empty input", 0);
    return out;
}

}  // namespace starcalc
