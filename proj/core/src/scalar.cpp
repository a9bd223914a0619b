#include "tropgroup/scalar.hpp"

#include "tropgroup/errors.hpp"

namespace tropgroup {

std::string to_string(const Scalar& s) {
    if (s.is_neg_inf()) return "-inf";
    return s.value().str();
}

Scalar scalar_from_string(const std::string& text) {
    if (text == "-inf") return Scalar::neg_inf();
    if (text.empty()) throw ParseError("empty scalar literal");
    // cpp_rational accepts "p" and "p/q" and reduces; screen the charset
    // first since its parser is permissive about some malformed input.
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '-') {
            if (i != 0 && text[i - 1] != '/') throw ParseError("bad scalar literal: " + text);
        } else if (c == '/') {
            ++slashes;
            if (i == 0 || i + 1 == text.size()) throw ParseError("bad scalar literal: " + text);
        } else if (c < '0' || c > '9') {
            throw ParseError("bad scalar literal: " + text);
        }
    }
    if (slashes > 1) throw ParseError("bad scalar literal: " + text);
    try {
        return Scalar(Rational(text));
    } catch (const std::exception&) {
        throw ParseError("bad scalar literal: " + text);
    }
}

}  // namespace tropgroup
