#pragma once

#include <stdexcept>
#include <string>

namespace qredux {

/// Base class for all qredux errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument: out-of-domain parameter, malformed input.
class domain_error : public error {
public:
    using error::error;
};

/// Request exceeds a documented size guard (memory or cost).
class capacity_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// A user-supplied function handle failed its contract validation.
class contract_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// A numerical routine failed to reach its target accuracy.
/// Carries the best estimate obtained so far.
class accuracy_error : public error {
public:
    accuracy_error(const std::string& what, double best)
        : error(what), best_estimate(best) {}
    double best_estimate;
};

/// Relative entropy is +infinity: the support of the first state is not
/// contained in the support of the second. Distinct from numeric failure.
class infinite_divergence : public error {
public:
    using error::error;
};

} // namespace qredux
