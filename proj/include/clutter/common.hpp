#pragma once

#include <stdexcept>
#include <string>

namespace clutter {

/// Raised when an input document or a precondition is invalid.
/// CLI maps this to exit code 2.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an enumeration would exceed a configured resource limit.
/// This is a resource refusal, not a statement about the input.
/// CLI maps this to exit code 3.
class size_guard_error : public std::runtime_error {
public:
    explicit size_guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// Default enumeration limits. All overridable per call.
struct limits {
    static constexpr int cover_enumeration_vertices = 28;
    static constexpr int shelling_search_facets = 9;
    static constexpr int matching_search_edges = 32;
    static constexpr long generated_edges = 100000;
};

} // namespace clutter
