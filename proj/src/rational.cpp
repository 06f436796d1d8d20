#include "dgk/rational.hpp"

#include <cstdlib>

namespace dgk {

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    auto to_ll = [&](const std::string& part) {
        if (part.empty())
            throw validation_error(validation_error::kind::syntax, "empty rational component");
        char* end = nullptr;
        long long v = std::strtoll(part.c_str(), &end, 10);
        if (end != part.c_str() + part.size())
            throw validation_error(validation_error::kind::syntax, "bad rational: " + text);
        return v;
    };
    if (slash == std::string::npos) return Rational(to_ll(text));
    return Rational(to_ll(text.substr(0, slash)), to_ll(text.substr(slash + 1)));
}

} // namespace dgk
