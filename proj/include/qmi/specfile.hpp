#ifndef QMI_SPECFILE_HPP
#define QMI_SPECFILE_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "qmi/space.hpp"

namespace qmi {

struct SpecParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// On-disk problem description: the measured graph, an optional weight,
/// and optional default classification parameters.
struct SpecFile {
    MeasureSpec measure;
    std::optional<WeightSpec> weight;
    std::optional<long> k;
    std::optional<long> m;

    bool operator==(const SpecFile&) const = default;
};

/// Parses the JSON spec format. Unknown fields anywhere are an error.
SpecFile parse_spec_file(const std::string& text);

/// Deterministic serialization; parses back to an identical SpecFile.
std::string serialize_spec_file(const SpecFile& file);

}  // namespace qmi

#endif
