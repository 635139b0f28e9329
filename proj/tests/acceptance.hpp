#ifndef DIODEF_TESTS_ACCEPTANCE_HPP
#define DIODEF_TESTS_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace diodef {

/* One gate criterion.  `detail` is deterministic (no timings, no pointers)
 * so reports built from it are byte-stable; wall time lives in `seconds`
 * and is reporting-only. */
struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    uint64_t seed = 42;
    int jobs = 1;
    std::vector<int> only;   /* subset of 1..10; empty = all */
    std::string golden_dir;  /* "" = $DIODEF_GOLDEN_DIR */
    std::function<void(const std::string &)> progress; /* optional live notes */
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opt);

/* "criterion N: PASS - name (detail) [1.2s]" */
std::string acceptance_line(const CriterionResult &r);

/* the fixed emission set compared byte-for-byte against tests/golden/<file>;
 * exposed so the goldens can be regenerated deliberately */
std::vector<std::pair<std::string, nlohmann::ordered_json>> golden_emissions();

}  // namespace diodef

#endif
