#include "orbitkit/rational.hpp"

#include "orbitkit/errors.hpp"

#include <cctype>

namespace orbitkit {

std::string to_string(const Rational& value)
{
    // mpq get_str already omits "/1".
    return value.get_str(10);
}

Rational parse_rational(std::string_view text)
{
    auto fail = [&] { return ParseError("malformed rational: '" + std::string(text) + "'"); };
    if (text.empty()) {
        throw fail();
    }
    const auto slash = text.find('/');
    auto digits_ok = [](std::string_view part, bool allow_sign) {
        if (allow_sign && !part.empty() && (part.front() == '-' || part.front() == '+')) {
            part.remove_prefix(1);
        }
        if (part.empty()) {
            return false;
        }
        for (char c : part) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                return false;
            }
        }
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) {
        throw fail();
    }
    if (num.front() == '+') {
        num.remove_prefix(1);
    }
    BigInt p(std::string(num), 10);
    BigInt q(std::string(den), 10);
    if (q == 0) {
        throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace orbitkit
