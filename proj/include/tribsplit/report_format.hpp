#pragma once

// Serialisation of verdicts and scan summaries for the command-line tool.
//
// CSV columns, in order:
//   p,trib_residue,divisible,representable,rep_x,rep_y,splitting,frobenius,consistent,exceptional
// Booleans are lowercase true/false; an absent representation leaves rep_x and
// rep_y empty. JSON lines use the same names as keys, in the same order, with
// null for an absent representation.

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tribsplit/gfext.hpp"
#include "tribsplit/verifier.hpp"

namespace tribsplit::report {

using modmath::ModPrime;
using modmath::u64;

enum class OutputFormat { Table, Csv, JsonLines };

std::optional<OutputFormat> parse_format(std::string_view name);

std::string csv_header();
std::string csv_row(const verifier::VerdictRecord& r);
std::string json_line(const verifier::VerdictRecord& r);

/// Header (for table and CSV) followed by one line per record.
void write_records(std::ostream& out, std::span<const verifier::VerdictRecord> records, OutputFormat fmt);

/// "violations: [11, 19]"
std::string summary_line(const verifier::ScanReport& report);

/// Multi-line human description of a splitting type.
std::string describe(u64 p, const gfext::SplittingType& st);

} // namespace tribsplit::report
