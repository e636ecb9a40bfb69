#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace satmat {

// Input text could not be parsed.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Unknown name in the built-in catalog.
class LookupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A search gave up before establishing the exact answer. partial_bound is the
// best bound proven before the budget ran out.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, int partial_bound)
        : std::runtime_error(what), partial_bound(partial_bound) {}

    int partial_bound;
};

// A construction failed its post-verification. When the failure is an
// unexpected occurrence of the pattern, row_map/col_map carry it (1-based,
// as in diagnostics).
class VerificationError : public std::runtime_error {
public:
    VerificationError(const std::string& what, std::vector<int> row_map = {},
                      std::vector<int> col_map = {})
        : std::runtime_error(what),
          row_map(std::move(row_map)),
          col_map(std::move(col_map)) {}

    std::vector<int> row_map, col_map;
};

}  // namespace satmat
