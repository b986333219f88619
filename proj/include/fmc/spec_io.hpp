#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fmc/graded.hpp"
#include "fmc/report.hpp"

namespace fmc {

/// Parses and validates a spec document. Throws ParseError (syntax, shape,
/// literals, duplicate entries), BicharacterError, GradingError, IndexError
/// or ScalarOrderError.
AlgebraSpec parse_spec(std::string_view text);
/// Reads `path`, or standard input when path is "-".
AlgebraSpec parse_spec_file(const std::string& path);

/// Canonical text: sorted keys, entries sorted by index tuple, zero entries
/// dropped, canonical scalar literals, trailing newline.
std::string emit_spec(const AlgebraSpec& spec);

enum class ReportFormat { Human, Json };

std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format);

/// Reads a whole file, or standard input for "-". Throws MissingInput.
std::string read_text(const std::string& path);
/// Writes a whole file, or standard output for "-". Throws MissingInput.
void write_text(const std::string& path, const std::string& text);

}  // namespace fmc
