#include "nilgeo/gaussian_rational.hpp"

#include <cctype>

namespace nilgeo {

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& why, size_t tok_begin) const {
        std::string tok(text.substr(tok_begin, std::max<size_t>(pos - tok_begin, 1)));
        throw ParseError("parse error in scalar \"" + std::string(text) + "\" at offset " +
                         std::to_string(tok_begin) + ": " + why + " \"" + tok + "\"");
    }

    std::string digits() {
        size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) pos++;
        if (pos == start) fail("expected digits, got", start);
        return std::string(text.substr(start, pos - start));
    }

    // rat := [-]? digits ( "/" digits )?
    Rational rat() {
        size_t start = pos;
        bool neg = false;
        if (!done() && peek() == '-') { neg = true; pos++; }
        std::string num = digits();
        std::string den = "1";
        if (!done() && peek() == '/') {
            pos++;
            den = digits();
        }
        Rational r;
        try {
            r = Rational::from_integer_strings(num, den);
        } catch (const std::domain_error&) {
            fail("zero denominator in", start);
        }
        return neg ? -r : r;
    }
};

} // namespace

GaussianRational parse_scalar(std::string_view text) {
    Cursor c{text};
    if (c.done()) throw ParseError("parse error: empty scalar");
    Rational first = c.rat();
    if (c.done()) return GaussianRational(first);
    if (c.peek() == 'i') {
        c.pos++;
        if (!c.done()) c.fail("trailing characters after", c.pos);
        return GaussianRational(Rational(0), first);
    }
    if (c.peek() != '+' && c.peek() != '-') c.fail("expected '+', '-' or 'i', got", c.pos);
    bool minus = c.peek() == '-';
    c.pos++;
    Rational second = c.rat();
    if (c.done() || c.peek() != 'i') c.fail("expected 'i' after imaginary part, got", c.pos);
    c.pos++;
    if (!c.done()) c.fail("trailing characters after", c.pos);
    return GaussianRational(first, minus ? -second : second);
}

std::string emit_scalar(const GaussianRational& z) {
    if (z.im.is_zero()) return z.re.str();
    if (z.re.is_zero()) return z.im.str() + "i";
    std::string out = z.re.str();
    if (z.im.sign() > 0) out += "+";
    return out + z.im.str() + "i";
}

std::string GaussianRational::str() const { return emit_scalar(*this); }

} // namespace nilgeo
