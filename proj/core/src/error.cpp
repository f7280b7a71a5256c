#include "c2b/error.hpp"

#include <sstream>

namespace c2b {

namespace {

std::string domain_message(const std::string& variable, double value, double lo, double hi) {
    std::ostringstream os;
    os << "value " << value << " is outside the domain [" << lo << ", " << hi
       << "] of variable '" << variable << "'";
    return os.str();
}

}  // namespace

DomainError::DomainError(std::string variable, double value, double lo, double hi)
    : Error(domain_message(variable, value, lo, hi)),
      variable_(std::move(variable)),
      value_(value),
      lo_(lo),
      hi_(hi) {}

NoRuleFiredError::NoRuleFiredError(std::string variable)
    : Error("no rule fired for output '" + variable + "': aggregated curve is identically zero"),
      variable_(std::move(variable)) {}

ProfileError::ProfileError(std::string variable, const std::string& what)
    : Error(what), variable_(std::move(variable)) {}

SchemaError::SchemaError(std::string path, const std::string& what)
    : Error((path.empty() ? std::string("/") : path) + ": " + what), path_(std::move(path)) {}

}  // namespace c2b
