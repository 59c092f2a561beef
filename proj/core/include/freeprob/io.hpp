#pragma once

#include <iosfwd>
#include <string>

#include "freeprob/dist.hpp"

namespace freeprob {

/// Reads a distribution from a JSON document of the shape
///   { "k": int, "order": int, "kind": "moments" | "free_cumulants" |
///     "boolean_cumulants", "coeffs": [ { "word": [int...], "value": "p/q" } ] }
/// Values may be integer strings; duplicate words are rejected.
/// Throws std::invalid_argument on malformed documents and
/// std::domain_error on words invalid for (k, order).
Distribution read_distribution(std::istream& in);
Distribution read_distribution_file(const std::string& path);

/// Writes the distribution as a moments document with words sorted by
/// length then lexicographically and values rendered as exact rationals.
void write_distribution(std::ostream& out, const Distribution& d);
void write_distribution_file(const std::string& path, const Distribution& d);

}  // namespace freeprob
