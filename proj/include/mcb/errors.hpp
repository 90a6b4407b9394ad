#pragma once

#include <stdexcept>
#include <string>

namespace mcb {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid arguments or malformed input data.
class domain_error : public error {
public:
  explicit domain_error(const std::string& msg) : error(msg) {}
};

// A bisection bracket failed its sign preconditions; usually means the
// query is outside the region where the underlying equation has a root.
class bracket_error : public error {
public:
  explicit bracket_error(const std::string& msg) : error(msg) {}
};

// A root escaped past the representable search cap (root at infinity).
class divergence_error : public error {
public:
  explicit divergence_error(const std::string& msg) : error(msg) {}
};

// An iterative procedure stopped without meeting its tolerance.
class convergence_error : public error {
public:
  explicit convergence_error(const std::string& msg) : error(msg) {}
};

// Observed data contradicts a structural assumption (e.g. a classification
// that must be monotone along a bracket came out non-monotone).
class inconsistency_error : public error {
public:
  explicit inconsistency_error(const std::string& msg) : error(msg) {}
};

// A configured budget (table cells, vertex limits) would be exceeded.
class resource_error : public error {
public:
  explicit resource_error(const std::string& msg) : error(msg) {}
};

}  // namespace mcb
