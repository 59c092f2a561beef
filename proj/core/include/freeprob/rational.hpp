#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace freeprob {

/// Exact rational scalar. All coefficient arithmetic in the library is
/// carried out over Q; there is no floating point anywhere in the core.
using Rat = mpq_class;

/// Parses "p/q" or an integer string into a canonical rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

/// Renders a rational as "p" when integral, "p/q" otherwise.
inline std::string format_rat(const Rat& r) {
    return r.get_str();
}

}  // namespace freeprob
