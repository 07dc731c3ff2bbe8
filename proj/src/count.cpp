#include "homx/count.hpp"

#include "homx/error.hpp"

#include <cctype>

namespace homx {

Count Count::from_string(std::string_view text) {
    if (text.empty())
        throw FormatError("empty integer", 0);
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw FormatError("non-digit in integer '" + std::string(text) + "'", i);
    return Count(BigInt(std::string(text)));
}

Count pow(const Count& base, std::uint64_t exponent) {
    BigInt result = 1;
    BigInt b = base.value();
    while (exponent > 0) {
        if (exponent & 1U)
            result *= b;
        exponent >>= 1U;
        if (exponent > 0)
            b *= b;
    }
    return Count(std::move(result));
}

std::strong_ordering cmp_root_powers(const Count& a, std::uint64_t p, const Count& b, std::uint64_t q) {
    if (p == 0 || q == 0)
        throw ParameterError("root exponents must be positive");
    return pow(a, q) <=> pow(b, p);
}

std::string to_string(std::strong_ordering o) {
    if (o < 0)
        return "less";
    if (o > 0)
        return "greater";
    return "equal";
}

std::string op_symbol(std::strong_ordering o) {
    if (o < 0)
        return "<";
    if (o > 0)
        return ">";
    return "=";
}

std::string to_string(const Rational& r) {
    if (mp::denominator(r) == 1)
        return mp::numerator(r).str();
    return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view part, std::size_t base_offset) {
        if (part.empty())
            throw FormatError("empty rational component in '" + std::string(text) + "'", base_offset);
        std::size_t start = part[0] == '-' ? 1 : 0;
        if (start == part.size())
            throw FormatError("bad rational '" + std::string(text) + "'", base_offset);
        for (std::size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw FormatError("bad rational '" + std::string(text) + "'", base_offset + i);
        return BigInt(std::string(part));
    };
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, 0));
    BigInt num = parse_int(text.substr(0, slash), 0);
    BigInt den = parse_int(text.substr(slash + 1), slash + 1);
    if (den == 0)
        throw FormatError("zero denominator in '" + std::string(text) + "'", slash + 1);
    return Rational(num, den);
}

}  // namespace homx
