#ifndef QMI_REPORT_HPP
#define QMI_REPORT_HPP

#include <string>

#include "qmi/classifier.hpp"
#include "qmi/space.hpp"

namespace qmi {

enum class ReportFormat { Text, Structured };

std::string render_classification(const ClassificationReport& report,
                                  ReportFormat format);

std::string render_validation(const ValidationReport& report, ReportFormat format);

}  // namespace qmi

#endif
