#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "carlson/explorer.hpp"
#include "carlson/verifier.hpp"

namespace carlson {

enum class OutputFormat { Table, Csv, Json };

std::string_view to_string(OutputFormat f);

using Cell = std::variant<double, std::int64_t, bool, std::string>;
using Row = std::vector<Cell>;

/// Number formatting: 17 significant digits for csv (binary64 round trip),
/// 6 for human tables.
std::string format_number(double v, int significant_digits);

/// RFC-4180 field quoting (only when the field needs it).
std::string csv_escape(std::string_view field);

/// Splits RFC-4180 text into records. Accepts LF or CRLF line endings.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Streams rows under a fixed header. Table and csv rows are written as they
/// arrive; json collects rows and writes one document in finish().
class RowWriter {
public:
    virtual ~RowWriter() = default;
    virtual void begin(const std::vector<std::string>& header) = 0;
    virtual void row(const Row& cells) = 0;
    /// `extra` members are merged into the top-level json object; other
    /// formats ignore them.
    virtual void finish(const nlohmann::json& extra = nlohmann::json::object()) = 0;
};

std::unique_ptr<RowWriter> make_writer(OutputFormat format, std::ostream& out, std::string command);

std::vector<std::string> report_header();
Row report_row(const VerificationReport& r);
nlohmann::json to_json(const VerificationReport& r);

std::vector<std::string> scan_header();
Row scan_row(const ScanClassification& s);

}  // namespace carlson
