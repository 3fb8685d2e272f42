#include "nliouville/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "nliouville/core.hpp"

namespace nliouville {

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

void check_columns(const std::vector<std::string>& names,
                   const std::vector<std::vector<double>>& columns) {
    if (names.empty() || columns.empty())
        throw DomainError("emit_profile: empty column set");
    if (names.size() != columns.size())
        throw DomainError("emit_profile: name/column count mismatch");
    for (const auto& col : columns)
        if (col.size() != columns.front().size())
            throw DomainError("emit_profile: columns of unequal length");
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    return out;
}

}  // namespace

void emit_profile(const std::vector<std::string>& names,
                  const std::vector<std::vector<double>>& columns, OutputFormat format,
                  std::ostream& out) {
    check_columns(names, columns);
    const std::size_t rows = columns.front().size();
    switch (format) {
        case OutputFormat::csv: {
            for (std::size_t j = 0; j < names.size(); ++j)
                out << (j ? "," : "") << csv_escape(names[j]);
            out << "\r\n";
            for (std::size_t i = 0; i < rows; ++i) {
                for (std::size_t j = 0; j < columns.size(); ++j)
                    out << (j ? "," : "") << format_float(columns[j][i]);
                out << "\r\n";
            }
            break;
        }
        case OutputFormat::json: {
            nlohmann::ordered_json doc;
            doc["columns"] = names;
            auto& out_rows = doc["rows"];
            out_rows = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < rows; ++i) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (const auto& col : columns)
                    row.push_back(col[i]);
                out_rows.push_back(std::move(row));
            }
            out << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::table: {
            for (std::size_t j = 0; j < names.size(); ++j)
                out << (j ? "  " : "") << names[j];
            out << "\n";
            for (std::size_t i = 0; i < rows; ++i) {
                for (std::size_t j = 0; j < columns.size(); ++j)
                    out << (j ? "  " : "") << format_float(columns[j][i]);
                out << "\n";
            }
            break;
        }
    }
}

void emit_profile(const std::vector<std::string>& names,
                  const std::vector<std::vector<double>>& columns, OutputFormat format,
                  const std::string& path) {
    auto out = open_or_throw(path);
    emit_profile(names, columns, format, out);
    if (!out)
        throw std::runtime_error("failed while writing: " + path);
}

void emit_checks(const std::vector<CheckRow>& rows, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::csv: {
            out << "name,value,reference,discrepancy,tolerance,pass\r\n";
            for (const auto& r : rows) {
                out << csv_escape(r.name) << ',' << format_float(r.value) << ','
                    << format_float(r.reference) << ',' << format_float(r.discrepancy) << ','
                    << format_float(r.tolerance) << ',' << (r.pass ? "true" : "false")
                    << "\r\n";
            }
            break;
        }
        case OutputFormat::json: {
            nlohmann::ordered_json doc;
            auto& checks = doc["checks"];
            checks = nlohmann::ordered_json::array();
            for (const auto& r : rows) {
                nlohmann::ordered_json item;
                item["name"] = r.name;
                item["value"] = r.value;
                item["reference"] = r.reference;
                item["discrepancy"] = r.discrepancy;
                item["tolerance"] = r.tolerance;
                item["pass"] = r.pass;
                checks.push_back(std::move(item));
            }
            doc["passed"] = all_pass(rows);
            out << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::table: {
            std::size_t width = 4;
            for (const auto& r : rows)
                width = std::max(width, r.name.size());
            for (const auto& r : rows) {
                out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
                out << std::string(width - r.name.size() + 2, ' ');
                out << "value=" << format_float(r.value) << "  ref=" << format_float(r.reference)
                    << "  err=" << format_float(r.discrepancy)
                    << "  tol=" << format_float(r.tolerance) << "\n";
            }
            break;
        }
    }
}

void emit_checks(const std::vector<CheckRow>& rows, OutputFormat format,
                 const std::string& path) {
    auto out = open_or_throw(path);
    emit_checks(rows, format, out);
    if (!out)
        throw std::runtime_error("failed while writing: " + path);
}

bool all_pass(const std::vector<CheckRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

}  // namespace nliouville
