#include "leibniz/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace leibniz {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    if (slash == std::string_view::npos)
        return Scalar(parse_integer(num));

    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    mpz_class d = parse_integer(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    Scalar value(parse_integer(num), d);
    value.canonicalize();
    return value;
}

std::string to_string(const Scalar& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Vector zero_vector(std::size_t n)
{
    return Vector(n, Scalar(0));
}

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n, Scalar(0));
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

} // namespace leibniz
