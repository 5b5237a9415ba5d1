#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "errors.hpp"

namespace ghopf {

// All scalar arithmetic is exact: big rationals for coefficients, big
// integers for dimension counts.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonical decimal-free form: "p" when the denominator is 1, "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    const auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw ParseError("invalid rational '" + s + "'");
    Rational q(Integer(num), Integer(den));
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace ghopf
