#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace freebound::cli {

inline constexpr std::string_view kCsvVersion = "# freebound-csv/1";

/// Decimal with 10 significant digits ("%.10g").
std::string format_number(double v);

/// Comma-separated rows with LF endings, led by the versioned header line.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::initializer_list<std::string_view> columns,
              std::initializer_list<std::string> comments = {});
    CsvWriter(std::ostream& out, const std::vector<std::string>& columns,
              const std::vector<std::string>& comments = {});

    void row(const std::vector<double>& values);
    /// Leading text cells followed by numbers.
    void row(const std::vector<std::string>& labels, const std::vector<double>& values);
    void comment(std::string_view text);

private:
    std::ostream& out_;
};

}  // namespace freebound::cli
