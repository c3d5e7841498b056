#ifndef STABREP_ERRORS_HPP
#define STABREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stabrep {

// Exit-code contract: precondition 2, integrity 3, resource cap 4.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data violates a structural invariant (bad relations, malformed module, ...).
struct IntegrityError : std::runtime_error {
    explicit IntegrityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap (group order, cyclotomic order scan) was exceeded.
struct ResourceCapError : std::runtime_error {
    explicit ResourceCapError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace stabrep

#endif
