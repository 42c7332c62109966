#include "tspag/rational.hpp"

#include "tspag/errors.hpp"

#include <cctype>

namespace tspag {

Rational rational_from_string(const std::string& text) {
    // Shape check first: GMP accepts whitespace and other bases we don't want.
    auto valid = [&]() {
        if (text.empty()) return false;
        std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
        if (i == text.size()) return false;
        bool seen_slash = false;
        bool digit_in_part = false;
        for (; i < text.size(); ++i) {
            char ch = text[i];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                digit_in_part = true;
            } else if (ch == '/' && !seen_slash && digit_in_part) {
                seen_slash = true;
                digit_in_part = false;
            } else {
                return false;
            }
        }
        return digit_in_part;
    };
    if (!valid())
        throw ParseError("not an exact rational literal: \"" + text +
                         "\" (expected \"p\" or \"p/q\"; floats are rejected)");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("unparseable rational: \"" + text + "\"");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in rational: \"" + text + "\"");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

bool is_integer(const Rational& value) {
    return value.get_den() == 1;
}

bool is_binary(const Rational& value) {
    return value == 0 || value == 1;
}

} // namespace tspag
