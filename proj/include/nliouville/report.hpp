#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nliouville {

/// One verification line: a computed value against its reference with the
/// tolerance applied to the stated discrepancy measure.
struct CheckRow {
    std::string name;
    double value = 0.0;
    double reference = 0.0;
    double discrepancy = 0.0;  ///< the measured error the tolerance bounds
    double tolerance = 0.0;
    bool pass = false;
};

enum class OutputFormat { table, csv, json };

/// %.17g: deterministic, round-trippable float text.
std::string format_float(double v);

/// RFC-4180 field quoting (quotes doubled, field quoted when it contains
/// a comma, a quote, or a line break).
std::string csv_escape(const std::string& field);

/// Writes named columns of equal length as a table, RFC-4180 CSV, or a JSON
/// object with "columns" and "rows" keys.
/// Throws DomainError on an empty column set or ragged columns.
void emit_profile(const std::vector<std::string>& names,
                  const std::vector<std::vector<double>>& columns, OutputFormat format,
                  std::ostream& out);

/// Same, into a file; IO failures are reported with the path in the message.
void emit_profile(const std::vector<std::string>& names,
                  const std::vector<std::vector<double>>& columns, OutputFormat format,
                  const std::string& path);

void emit_checks(const std::vector<CheckRow>& rows, OutputFormat format, std::ostream& out);
void emit_checks(const std::vector<CheckRow>& rows, OutputFormat format,
                 const std::string& path);

bool all_pass(const std::vector<CheckRow>& rows);

}  // namespace nliouville
