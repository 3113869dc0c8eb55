#pragma once

#include <stdexcept>
#include <string>

namespace qshuffle {

/// Exact division was requested but the divisor does not divide the dividend.
struct NonDivisibleError : std::runtime_error {
    explicit NonDivisibleError(const std::string& what) : std::runtime_error(what) {}
};

/// A pole factor could not be cancelled against the collected linear
/// numerators while assembling a pairing expression.  This is an internal
/// invariant violation, never a property of valid inputs.
struct ExactCancellationFailure : std::runtime_error {
    explicit ExactCancellationFailure(const std::string& what) : std::runtime_error(what) {}
};

/// The big/small relation of the directed factors of a pairing expression
/// contains a cycle, so the geometric expansions cannot be eliminated.
struct CyclicDirectionGraph : std::runtime_error {
    explicit CyclicDirectionGraph(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qshuffle
