#pragma once

#include <stdexcept>
#include <string>

namespace steerkit {

/// Invalid input: broken invariant, dimension mismatch, malformed file.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration size exceeds the configured budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature resolution cannot certify the requested accuracy.
class quadrature_error : public std::runtime_error {
public:
    explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace steerkit
