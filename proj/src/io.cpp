#include "entrokit/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace entrokit {

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

double parse_double(const std::string& tok, const std::string& context) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(context + ": cannot parse number '" + tok + "'");
    }
    if (used != tok.size())
        throw std::invalid_argument(context + ": trailing characters in number '" + tok + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char delim) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, delim)) out.push_back(tok);
    return out;
}

std::vector<std::string> read_data_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (!blank(line)) lines.push_back(line);
    }
    return lines;
}

std::vector<double> numbers_in_line(const std::string& line, const std::string& context) {
    // accepts comma- and/or whitespace-separated fields
    std::string normalized = line;
    for (char& c : normalized)
        if (c == ',' || c == '\t') c = ' ';
    std::istringstream in(normalized);
    std::vector<double> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_double(tok, context));
    return out;
}

}  // namespace

ProbVec parse_prob_list(const std::string& text) {
    auto vals = numbers_in_line(text, "probability list");
    if (vals.empty())
        throw std::invalid_argument("probability list: no values found");
    return ProbVec(std::move(vals));
}

ProbVec read_prob_file(const std::string& path) {
    const auto lines = read_data_lines(path);
    std::vector<double> vals;
    for (const auto& line : lines) {
        const auto nums = numbers_in_line(line, "probability file " + path);
        vals.insert(vals.end(), nums.begin(), nums.end());
    }
    if (vals.empty())
        throw std::invalid_argument("probability file " + path + ": no values found");
    return ProbVec(std::move(vals));
}

std::vector<double> read_series_file(const std::string& path, int column) {
    if (column < 0)
        throw std::invalid_argument("series file: column must be >= 0");
    const auto lines = read_data_lines(path);
    std::vector<double> vals;
    vals.reserve(lines.size());
    for (const auto& line : lines) {
        const auto nums = numbers_in_line(line, "series file " + path);
        if (static_cast<std::size_t>(column) >= nums.size())
            throw std::invalid_argument("series file " + path + ": line has no column " +
                                        std::to_string(column));
        vals.push_back(nums[static_cast<std::size_t>(column)]);
    }
    if (vals.empty())
        throw std::invalid_argument("series file " + path + ": no values found");
    return vals;
}

SymbolSeq read_symbol_file(const std::string& path, int alphabet_size) {
    const auto lines = read_data_lines(path);
    std::vector<int> syms;
    int max_sym = -1;
    for (const auto& line : lines) {
        for (double v : numbers_in_line(line, "symbol file " + path)) {
            const int s = static_cast<int>(v);
            if (static_cast<double>(s) != v || s < 0)
                throw std::invalid_argument("symbol file " + path +
                                            ": symbols must be non-negative integers");
            syms.push_back(s);
            max_sym = std::max(max_sym, s);
        }
    }
    if (syms.empty())
        throw std::invalid_argument("symbol file " + path + ": no symbols found");
    const int k = alphabet_size > 0 ? alphabet_size : max_sym + 1;
    return SymbolSeq(std::move(syms), k);
}

std::vector<std::vector<double>> read_matrix_file(const std::string& path) {
    const auto lines = read_data_lines(path);
    std::vector<std::vector<double>> rows;
    for (const auto& line : lines)
        rows.push_back(numbers_in_line(line, "matrix file " + path));
    if (rows.empty())
        throw std::invalid_argument("matrix file " + path + ": no rows found");
    return rows;
}

std::vector<std::vector<double>> parse_matrix_inline(const std::string& text) {
    std::vector<std::vector<double>> rows;
    for (const auto& row_text : split(text, ';'))
        rows.push_back(numbers_in_line(row_text, "inline matrix"));
    if (rows.empty())
        throw std::invalid_argument("inline matrix: no rows found");
    return rows;
}

MomentSpec read_moment_spec_file(const std::string& path) {
    const auto rows = read_matrix_file(path);
    if (rows.size() < 2)
        throw std::invalid_argument("moment spec " + path +
                                    ": need a support row and a target row");
    MomentSpec spec;
    spec.support = rows.front();
    spec.targets = rows.back();
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) spec.features.push_back(rows[i]);
    if (spec.targets.size() != spec.features.size())
        throw std::invalid_argument("moment spec " + path +
                                    ": final row must hold one target per feature row");
    spec.validate();
    return spec;
}

std::vector<double> parse_number_list(const std::string& text) {
    auto vals = numbers_in_line(text, "number list");
    if (vals.empty())
        throw std::invalid_argument("number list: no values found");
    return vals;
}

}  // namespace entrokit
