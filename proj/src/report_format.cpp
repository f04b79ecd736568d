#include "tribsplit/report_format.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace tribsplit::report {

using verifier::VerdictRecord;

namespace {

const char* boolstr(bool b) { return b ? "true" : "false"; }

std::string opt_str(const std::optional<u64>& v) { return v ? std::to_string(*v) : std::string(); }

constexpr int kTableWidths[] = {12, 12, 9, 13, 11, 6, 31, 13, 10, 11};
constexpr const char* kColumns[] = {"p",         "trib_residue", "divisible", "representable", "rep_x",
                                    "rep_y",     "splitting",    "frobenius", "consistent",    "exceptional"};

std::string table_row(const std::vector<std::string>& cells) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ' ';
        os << std::left << std::setw(kTableWidths[i]) << cells[i];
    }
    std::string s = os.str();
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
}

std::vector<std::string> cells(const VerdictRecord& r) {
    return {std::to_string(r.p),
            std::to_string(r.trib_residue),
            boolstr(r.divisible),
            boolstr(r.representable),
            opt_str(r.rep_x),
            opt_str(r.rep_y),
            std::string(gfext::to_string(r.splitting)),
            std::string(gfext::to_string(r.frobenius)),
            boolstr(r.consistent),
            boolstr(r.exceptional)};
}

} // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "jsonl") return OutputFormat::JsonLines;
    return std::nullopt;
}

std::string csv_header() {
    std::string h;
    for (const char* c : kColumns) {
        if (!h.empty()) h += ',';
        h += c;
    }
    return h;
}

std::string csv_row(const VerdictRecord& r) {
    std::vector<std::string> cs = cells(r);
    std::string row = cs[0];
    for (std::size_t i = 1; i < cs.size(); ++i) row += ',' + cs[i];
    return row;
}

std::string json_line(const VerdictRecord& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["trib_residue"] = r.trib_residue;
    j["divisible"] = r.divisible;
    j["representable"] = r.representable;
    j["rep_x"] = r.rep_x ? nlohmann::ordered_json(*r.rep_x) : nlohmann::ordered_json(nullptr);
    j["rep_y"] = r.rep_y ? nlohmann::ordered_json(*r.rep_y) : nlohmann::ordered_json(nullptr);
    j["splitting"] = gfext::to_string(r.splitting);
    j["frobenius"] = gfext::to_string(r.frobenius);
    j["consistent"] = r.consistent;
    j["exceptional"] = r.exceptional;
    return j.dump();
}

void write_records(std::ostream& out, std::span<const VerdictRecord> records, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::Table:
        out << table_row(std::vector<std::string>(std::begin(kColumns), std::end(kColumns))) << '\n';
        for (const VerdictRecord& r : records) out << table_row(cells(r)) << '\n';
        break;
    case OutputFormat::Csv:
        out << csv_header() << '\n';
        for (const VerdictRecord& r : records) out << csv_row(r) << '\n';
        break;
    case OutputFormat::JsonLines:
        for (const VerdictRecord& r : records) out << json_line(r) << '\n';
        break;
    }
}

std::string summary_line(const verifier::ScanReport& report) {
    std::string s = "violations: [";
    for (std::size_t i = 0; i < report.violations.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(report.violations[i]);
    }
    return s + "]";
}

std::string describe(u64 p, const gfext::SplittingType& st) {
    std::ostringstream os;
    os << "p: " << p << '\n';
    os << "shape: " << gfext::to_string(st.shape) << '\n';
    os << "roots:";
    for (u64 r : st.roots) os << ' ' << r;
    os << '\n';
    os << "frobenius: " << gfext::to_string(st.frobenius_class) << '\n';
    return os.str();
}

} // namespace tribsplit::report
