#pragma once

#include <stdexcept>
#include <string>

namespace tmfops {

struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegralCoefficient : std::runtime_error {
    explicit NonIntegralCoefficient(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionNotExact : std::runtime_error {
    explicit DivisionNotExact(const std::string& what) : std::runtime_error(what) {}
};

struct BasisMismatch : std::runtime_error {
    explicit BasisMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct WeightMismatch : std::runtime_error {
    explicit WeightMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedModel : std::runtime_error {
    explicit UnsupportedModel(const std::string& what) : std::runtime_error(what) {}
};

struct NoSelfDuality : std::runtime_error {
    explicit NoSelfDuality(const std::string& what) : std::runtime_error(what) {}
};

struct WitnessNotScaled : std::runtime_error {
    explicit WitnessNotScaled(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tmfops
