#ifndef QMI_EXAMPLES_HPP
#define QMI_EXAMPLES_HPP

#include "qmi/specfile.hpp"

namespace qmi {

/// One of the built-in reference problems shipped with the CLI, together
/// with the classification claimed for it in the literature. The claim is
/// reported verbatim next to the computed verdict; it is never assumed.
struct BuiltinExample {
    std::string id;
    SpecFile spec;         // k and m always set
    std::string claim;     // claimed classification
    bool claimed_verdict;  // the claim, as a boolean at (k, m)
};

const std::vector<BuiltinExample>& builtin_examples();

/// Throws std::invalid_argument for an unknown id.
const BuiltinExample& builtin_example(const std::string& id);

}  // namespace qmi

#endif
