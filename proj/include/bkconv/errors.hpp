#ifndef BKCONV_ERRORS_HPP
#define BKCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bkconv {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Gamma argument within tolerance of a nonpositive integer.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Parameter outside the admissible domain (kappa in Z_0^-, etc).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Series argument does not satisfy the a_0 = 0 (or a_1 = 1) normalization.
struct NormalizationError : Error {
    explicit NormalizationError(const std::string& msg) : Error(msg) {}
};

// p(0) does not match the disk target center.
struct CenterMismatch : Error {
    explicit CenterMismatch(const std::string& msg) : Error(msg) {}
};

// Admissibility boundary constraint Re(L e^{-i theta}) >= (k-1)kM violated.
struct ConstraintError : Error {
    explicit ConstraintError(const std::string& msg) : Error(msg) {}
};

struct DegenerateDenominator : Error {
    explicit DegenerateDenominator(const std::string& msg) : Error(msg) {}
};

// Too many grid points skipped by the denominator guard.
struct RatioGuard : Error {
    explicit RatioGuard(const std::string& msg) : Error(msg) {}
};

} // namespace bkconv

#endif
