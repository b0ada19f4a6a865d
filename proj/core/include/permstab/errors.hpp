#pragma once

#include <stdexcept>
#include <string>

namespace permstab {

// Bad input: malformed files, violated preconditions, infeasible requests.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A bound that is guaranteed by a theorem failed at runtime. Always a bug
// (in this library or in the guarantee itself), never a user error.
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

// Explicit refusal of a search whose estimated size exceeds the budget.
class budget_error : public domain_error {
public:
    explicit budget_error(const std::string& what) : domain_error(what) {}
};

class parse_error : public domain_error {
public:
    explicit parse_error(const std::string& what) : domain_error(what) {}
};

} // namespace permstab
