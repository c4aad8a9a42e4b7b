#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Jet division by a divisor whose constant coefficient vanishes.
struct NonInvertible : std::domain_error {
    explicit NonInvertible(const std::string& what) : std::domain_error(what) {}
};

struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

struct NegativeValuation : std::domain_error {
    explicit NegativeValuation(const std::string& what) : std::domain_error(what) {}
};

// A p-adic value is known to fewer digits than the comparison asks for.
struct PrecisionLoss : std::domain_error {
    explicit PrecisionLoss(const std::string& what) : std::domain_error(what) {}
};

struct NotPadicInteger : std::domain_error {
    explicit NotPadicInteger(const std::string& what) : std::domain_error(what) {}
};

struct Pole : std::domain_error {
    explicit Pole(const std::string& what) : std::domain_error(what) {}
};

struct OutOfDomain : std::domain_error {
    explicit OutOfDomain(const std::string& what) : std::domain_error(what) {}
};

struct UnknownCase : std::invalid_argument {
    explicit UnknownCase(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace supercong
