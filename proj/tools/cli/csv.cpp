#include "cli/csv.hpp"

#include <fmt/format.h>

namespace freebound::cli {

std::string format_number(double v) {
    return fmt::format("{:.10g}", v);
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string_view> columns,
                     std::initializer_list<std::string> comments)
    : CsvWriter(out, std::vector<std::string>(columns.begin(), columns.end()),
                std::vector<std::string>(comments.begin(), comments.end())) {}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& columns,
                     const std::vector<std::string>& comments)
    : out_(out) {
    out_ << kCsvVersion << '\n';
    for (const auto& c : comments) comment(c);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out_ << (i ? "," : "") << columns[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    row({}, values);
}

void CsvWriter::row(const std::vector<std::string>& labels, const std::vector<double>& values) {
    bool first = true;
    for (const auto& l : labels) {
        out_ << (first ? "" : ",") << l;
        first = false;
    }
    for (double v : values) {
        out_ << (first ? "" : ",") << format_number(v);
        first = false;
    }
    out_ << '\n';
}

void CsvWriter::comment(std::string_view text) {
    out_ << "# " << text << '\n';
}

}  // namespace freebound::cli
