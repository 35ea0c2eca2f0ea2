#pragma once

#include "blockinv/conjecture.hpp"

#include <string>
#include <vector>

namespace blockinv {

enum class ReportFormat { Json, Csv, Markdown };

/// Throws Error(InvalidArgument) on anything but json, csv, markdown.
ReportFormat parse_report_format(const std::string& name);

/// Stable field order; big integers are written as decimal strings in json.
/// Markdown groups the rows by every parameter except w and prints the
/// columns w | k^w(B) | k0(B)*k(D') | l(B)*k(D) | C1 | C2.
std::string emit_report(const std::vector<ConjectureReport>& reports, ReportFormat format);

}  // namespace blockinv
