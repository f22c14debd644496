#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dialg {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an input document or argument is malformed (CLI exit 2).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a configured resource cap is exceeded (CLI exit 3).
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a mathematical precondition fails (CLI exit 1).
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string rat_str(const Rat& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p" or "p/q"; q must be nonzero.
inline Rat parse_rat(const std::string& s)
{
    auto bad = [&] { throw input_error("invalid rational literal: '" + s + "'"); };
    if (s.empty())
        bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat q{Int(s)};
            return q;
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            bad();
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        bad();
    }
    return Rat(0); // unreachable
}

} // namespace dialg
