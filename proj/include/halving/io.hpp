#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "halving/combinatorics.hpp"
#include "halving/orbit_arith.hpp"
#include "halving/series.hpp"

namespace halving::io {

enum class Format { csv, json };

Format parse_format(std::string_view name);

/// Headered `n,value` CSV, 1-indexed. Missing rows read as zero; the
/// horizon is the largest n present.
CountSequence read_sequence_csv(std::istream& is);
void write_sequence_csv(std::ostream& os, const CountSequence& seq);

/// Comma-separated literal such as "1,0,2".
CountSequence parse_sequence_literal(std::string_view text);

/// Reads `arg` as a CSV file when such a file exists, otherwise as a literal.
CountSequence load_sequence(const std::string& arg);

/// Three-section CSV: header `section,n,value`, sections surviving, glued
/// (pair counts) and halving (quotient length). Horizon is the largest n.
BehaviorDecomposition read_decomposition_csv(std::istream& is);
void write_decomposition_csv(std::ostream& os, const BehaviorDecomposition& dec);
BehaviorDecomposition load_decomposition(const std::string& path);

/// `degree,numerator,denominator` rows.
FormalPowerSeries read_series_csv(std::istream& is);
void write_series_csv(std::ostream& os, const FormalPowerSeries& series);
FormalPowerSeries load_series(const std::string& path);

/// JSON arrays of decimal strings (integers) or "num/den" strings.
std::string sequence_json(const CountSequence& seq);
std::string series_json(const FormalPowerSeries& series);

/// Parses "p/q" or an integer.
mpq_class parse_rational(std::string_view text);

} // namespace halving::io
