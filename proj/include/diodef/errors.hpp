#ifndef DIODEF_ERRORS_HPP
#define DIODEF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace diodef {

/* Error taxonomy mirrors the CLI exit codes:
 *   domain_error   -> exit 1 (math preconditions violated, unsupported input)
 *   usage_error    -> exit 2 (bad CLI invocation / malformed files)
 *   resource_error -> exit 3 (digit budgets, search caps, residue field caps)
 */
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string &m) : std::runtime_error(m) {}
};

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string &m) : std::runtime_error(m) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string &m) : std::runtime_error(m) {}
};

}  // namespace diodef

#endif
