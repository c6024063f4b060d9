#pragma once

#include <stdexcept>
#include <string>

namespace valentkit {

/// Raised when an operation's preconditions on its numeric inputs fail
/// (empty point sets, nonpositive parameters, uncertifiable circles, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

/// Raised by the argument-principle counter when a sample on the counting
/// circle is too close to a zero to certify the winding number.
class CertificationError : public DomainError {
public:
    CertificationError(const std::string &what, double sample_re, double sample_im)
        : DomainError(what), re(sample_re), im(sample_im) {}

    double re;
    double im;
};

} // namespace valentkit
