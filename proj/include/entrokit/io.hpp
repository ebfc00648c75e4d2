#pragma once

#include <string>
#include <vector>

#include "entrokit/maxent.hpp"
#include "entrokit/prob.hpp"
#include "entrokit/series.hpp"

namespace entrokit {

// Distribution files: one probability per line or comma-separated values
// on one line; `#` starts a comment.
ProbVec read_prob_file(const std::string& path);
ProbVec parse_prob_list(const std::string& text);  // "0.5,0.25,0.25"

// Series files: one real per line, or delimited columns with `column`
// selecting the 0-based field. `#` comments are ignored.
std::vector<double> read_series_file(const std::string& path, int column = 0);

// Symbol files: one integer per line.
SymbolSeq read_symbol_file(const std::string& path, int alphabet_size = 0);

// Matrices: whitespace-separated rows in files, or the inline form
// "r1c1,r1c2;r2c1,r2c2".
std::vector<std::vector<double>> read_matrix_file(const std::string& path);
std::vector<std::vector<double>> parse_matrix_inline(const std::string& text);

// MomentSpec file: header row of support points, one row per feature,
// final row of targets; all whitespace-separated.
MomentSpec read_moment_spec_file(const std::string& path);

std::vector<double> parse_number_list(const std::string& text);  // comma-separated

}  // namespace entrokit
