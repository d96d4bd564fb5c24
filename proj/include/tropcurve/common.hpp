#pragma once

#include <boost/rational.hpp>

#include <stdexcept>
#include <string>

namespace tropcurve {

// Exact rational scalar used throughout (coordinates, valuations, exponents).
using Rat = boost::rational<long long>;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmbeddingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural assumption the pipeline relies on turned out false for the
// given input; surfaced loudly, never patched over.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tropcurve
