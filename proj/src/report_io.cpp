#include "carlson/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

namespace carlson {

std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Table: return "table";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
    }
    return "?";
}

std::string format_number(double v, int significant_digits) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
    return buf;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"': quoted = true; field_started = true; break;
            case ',':
                record.push_back(std::move(field));
                field.clear();
                field_started = true;
                break;
            case '\r': break;
            case '\n':
                record.push_back(std::move(field));
                field.clear();
                records.push_back(std::move(record));
                record.clear();
                field_started = false;
                break;
            default: field += c; field_started = true;
        }
    }
    if (field_started || !record.empty()) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    return records;
}

namespace {

std::string cell_text(const Cell& c, int digits) {
    return std::visit(
        [digits](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) return format_number(v, digits);
            else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return v;
        },
        c);
}

nlohmann::json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return nullptr;
            }
            return v;
        },
        c);
}

class CsvWriter final : public RowWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}
    void begin(const std::vector<std::string>& header) override {
        write(std::vector<std::string>(header.begin(), header.end()));
    }
    void row(const Row& cells) override {
        std::vector<std::string> text;
        text.reserve(cells.size());
        for (const auto& c : cells) text.push_back(cell_text(c, 17));
        write(text);
    }
    void finish(const nlohmann::json&) override { out_.flush(); }

private:
    void write(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out_ << ',';
            out_ << csv_escape(fields[i]);
        }
        out_ << '\n';
    }
    std::ostream& out_;
};

class TableWriter final : public RowWriter {
public:
    explicit TableWriter(std::ostream& out) : out_(out) {}
    void begin(const std::vector<std::string>& header) override {
        widths_.clear();
        for (const auto& h : header) widths_.push_back(std::max<std::size_t>(h.size(), 13));
        write(header);
        std::string rule;
        for (std::size_t i = 0; i < widths_.size(); ++i) {
            if (i) rule += "  ";
            rule += std::string(widths_[i], '-');
        }
        out_ << rule << '\n';
    }
    void row(const Row& cells) override {
        std::vector<std::string> text;
        for (const auto& c : cells) text.push_back(cell_text(c, 6));
        write(text);
    }
    void finish(const nlohmann::json&) override { out_.flush(); }

private:
    void write(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out_ << "  ";
            const std::size_t w = i < widths_.size() ? widths_[i] : 13;
            // Free-text last column is not padded.
            if (i + 1 == fields.size()) out_ << fields[i];
            else out_ << std::left << std::setw(static_cast<int>(w)) << fields[i];
        }
        out_ << '\n';
    }
    std::ostream& out_;
    std::vector<std::size_t> widths_;
};

class JsonWriter final : public RowWriter {
public:
    JsonWriter(std::ostream& out, std::string command) : out_(out), command_(std::move(command)) {}
    void begin(const std::vector<std::string>& header) override { header_ = header; }
    void row(const Row& cells) override {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < cells.size() && i < header_.size(); ++i) obj[header_[i]] = cell_json(cells[i]);
        rows_.push_back(std::move(obj));
    }
    void finish(const nlohmann::json& extra) override {
        nlohmann::json doc = nlohmann::json::object();
        doc["command"] = command_;
        doc["columns"] = header_;
        doc["rows"] = rows_;
        for (const auto& [k, v] : extra.items()) doc[k] = v;
        out_ << doc.dump(2) << '\n';
        out_.flush();
    }

private:
    std::ostream& out_;
    std::string command_;
    std::vector<std::string> header_;
    nlohmann::json rows_ = nlohmann::json::array();
};

}  // namespace

std::unique_ptr<RowWriter> make_writer(OutputFormat format, std::ostream& out, std::string command) {
    switch (format) {
        case OutputFormat::Csv: return std::make_unique<CsvWriter>(out);
        case OutputFormat::Json: return std::make_unique<JsonWriter>(out, std::move(command));
        case OutputFormat::Table: break;
    }
    return std::make_unique<TableWriter>(out);
}

std::vector<std::string> report_header() {
    return {"claim_id", "passed", "samples", "worst_margin", "worst_x", "tolerance", "notes"};
}

Row report_row(const VerificationReport& r) {
    return {r.claim_id, r.passed, static_cast<std::int64_t>(r.samples), r.worst_margin, r.worst_x, r.tolerance,
            r.notes};
}

nlohmann::json to_json(const VerificationReport& r) {
    return {{"claim_id", r.claim_id}, {"passed", r.passed},     {"samples", r.samples},
            {"worst_margin", r.worst_margin}, {"worst_x", r.worst_x}, {"tolerance", r.tolerance},
            {"notes", r.notes}};
}

std::vector<std::string> scan_header() {
    return {"alpha", "beta", "gamma", "verdict", "evidence_x", "margin", "note"};
}

Row scan_row(const ScanClassification& s) {
    std::string note = s.error ? "error: " + *s.error : "numerical evidence, not a proof";
    return {s.alpha, s.beta, s.gamma, std::string(s.error ? "Error" : to_string(s.verdict)), s.evidence_x,
            s.margin, note};
}

}  // namespace carlson
