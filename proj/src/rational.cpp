#include "listpack/rational.hpp"

#include <stdexcept>

namespace listpack {

std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational rational_from_string(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("bad rational '" + text + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace listpack
