#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Parameters outside the physical domain of the model (e.g. flux too close to half a quantum).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Dispersive detuning formula evaluated at ω'_eg = ω.
class SingularDetuningError : public DomainError {
public:
    using DomainError::DomainError;
};

class NoPeakError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Side { left, right };

class NoCrossingError : public std::runtime_error {
public:
    NoCrossingError(Side side, const std::string& what)
        : std::runtime_error(what), side_(side) {}
    Side side() const noexcept { return side_; }

private:
    Side side_;
};

class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ramsey
