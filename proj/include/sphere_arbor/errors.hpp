#ifndef SPHERE_ARBOR_ERRORS_HPP
#define SPHERE_ARBOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sphere_arbor {

/// Input that violates an operation's precondition (unknown vertex, bad
/// parameter, non-manifold where a manifold is required, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A well-formed request the operation declines to carry out: a surgery whose
/// guard fails, a size cap on an exponential search, a non-neat coloring
/// handed to a neat-only conversion.
class Refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Something that cannot happen if the implementation is right (a proper
/// 4-coloring search exhausting on a planar graph, a propagation conflict on
/// an Eulerian sphere). Always a bug or a counter-instance worth reporting.
class InternalFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_ERRORS_HPP
