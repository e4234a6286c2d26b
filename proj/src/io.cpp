#include "pbf/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "pbf/errors.hpp"

namespace pbf {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

// Physical lines keep their 1-based numbers; '#' comments and blank lines
// drop out.
std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    for (std::size_t pos = 0; pos <= text.size();) {
        const std::size_t end = text.find('\n', pos);
        const bool last = end == std::string_view::npos;
        std::string_view raw = last ? text.substr(pos) : text.substr(pos, end - pos);
        ++number;
        if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            if (j > i) line.tokens.emplace_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (last) break;
        pos = end + 1;
    }
    return lines;
}

long long parse_int(const std::string& token, int line, const char* what) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw Error(Errc::parse_error,
                    std::string("expected an integer ") + what + ", got '" + token + "'",
                    line);
    return value;
}

long long parse_var_count(const std::string& token, int line) {
    const long long n = parse_int(token, line, "variable count");
    if (n < 0) throw Error(Errc::bad_args, "variable count must be >= 0", line);
    if (n > VarSet::max_index)
        throw Error(Errc::too_many_variables,
                    "at most " + std::to_string(VarSet::max_index) + " variables", line);
    return n;
}

VarSet parse_indices(const Line& line, std::size_t first_token, long long n) {
    VarSet mask;
    for (std::size_t i = first_token; i < line.tokens.size(); ++i) {
        const long long index = parse_int(line.tokens[i], line.number, "variable index");
        if (index < 1 || index > n)
            throw Error(Errc::mask_out_of_range,
                        "variable index " + std::to_string(index) + " outside 1.." +
                            std::to_string(n),
                        line.number);
        if (mask.contains(static_cast<int>(index)))
            throw Error(Errc::parse_error,
                        "variable index " + std::to_string(index) + " repeated",
                        line.number);
        mask = mask.with(static_cast<int>(index));
    }
    return mask;
}

} // namespace

FourierExpansion parse_function(std::string_view text) {
    const std::vector<Line> lines = significant_lines(text);
    if (lines.empty()) throw Error(Errc::parse_error, "missing 'n <count>' header", 1);
    const Line& header = lines.front();
    if (header.tokens.size() != 2 || header.tokens[0] != "n")
        throw Error(Errc::parse_error, "first line must be 'n <count>'", header.number);
    const long long n = parse_var_count(header.tokens[1], header.number);

    std::vector<FourierExpansion::Term> terms;
    std::unordered_map<std::uint64_t, int> term_line;
    for (std::size_t t = 1; t < lines.size(); ++t) {
        const Line& line = lines[t];
        Rational coefficient;
        try {
            coefficient = Rational::from_string(line.tokens[0]);
        } catch (const Error& inner) {
            throw Error(inner.code(), inner.what(), line.number);
        }
        if (coefficient.is_zero())
            throw Error(Errc::zero_coefficient, "coefficients must be nonzero", line.number);
        const VarSet mask = parse_indices(line, 1, n);
        const auto [where, fresh] = term_line.try_emplace(mask.bits(), line.number);
        if (!fresh)
            throw Error(Errc::duplicate_term,
                        "term repeats the index set of line " + std::to_string(where->second),
                        line.number);
        terms.emplace_back(mask, std::move(coefficient));
    }
    return FourierExpansion(static_cast<int>(n), terms);
}

EquationSystem parse_maxlin(std::string_view text) {
    const std::vector<Line> lines = significant_lines(text);
    if (lines.empty())
        throw Error(Errc::parse_error, "missing 'maxlin <n> <m> <k>' header", 1);
    const Line& header = lines.front();
    if (header.tokens.size() != 4 || header.tokens[0] != "maxlin")
        throw Error(Errc::parse_error, "first line must be 'maxlin <n> <m> <k>'",
                    header.number);
    const long long n = parse_var_count(header.tokens[1], header.number);
    const long long m = parse_int(header.tokens[2], header.number, "equation count");
    const long long k = parse_int(header.tokens[3], header.number, "parameter k");
    if (m < 0) throw Error(Errc::parse_error, "equation count must be >= 0", header.number);
    if (k < 0) throw Error(Errc::negative_k, "k must be >= 0", header.number);

    const long long given = static_cast<long long>(lines.size()) - 1;
    if (given > m)
        throw Error(Errc::parse_error,
                    "header promises " + std::to_string(m) + " equations, found more",
                    lines[static_cast<std::size_t>(m) + 1].number);
    if (given < m)
        throw Error(Errc::parse_error,
                    "header promises " + std::to_string(m) + " equations, file has " +
                        std::to_string(given),
                    header.number);

    std::vector<Equation> equations;
    equations.reserve(lines.size() - 1);
    std::unordered_map<std::uint64_t, int> lhs_line;
    for (std::size_t t = 1; t < lines.size(); ++t) {
        const Line& line = lines[t];
        if (line.tokens.size() < 2)
            throw Error(Errc::parse_error,
                        "each equation needs '<w> <b> <i1> ...'", line.number);
        const long long w = parse_int(line.tokens[0], line.number, "weight");
        if (w < 1) throw Error(Errc::nonpositive_weight, "weights must be >= 1", line.number);
        const long long b = parse_int(line.tokens[1], line.number, "right-hand side");
        if (b != 1 && b != -1)
            throw Error(Errc::bad_rhs, "right-hand side must be +1 or -1", line.number);
        if (line.tokens.size() == 2)
            throw Error(Errc::empty_lhs, "equation left-hand side must be nonempty",
                        line.number);
        const VarSet mask = parse_indices(line, 2, n);
        const auto [where, fresh] = lhs_line.try_emplace(mask.bits(), line.number);
        if (!fresh)
            throw Error(Errc::duplicate_lhs,
                        "left-hand side repeats line " + std::to_string(where->second),
                        line.number);
        equations.push_back({mask, static_cast<int>(b), w});
    }
    return EquationSystem(static_cast<int>(n), std::move(equations), k);
}

std::string format_function(const FourierExpansion& f) {
    std::string out = "n " + std::to_string(f.var_count()) + "\n";
    for (const auto& [mask, coefficient] : f.terms()) {
        out += coefficient.to_string();
        for (int i = 1; i <= f.var_count(); ++i)
            if (mask.contains(i)) out += ' ' + std::to_string(i);
        out += '\n';
    }
    return out;
}

std::string format_maxlin(const EquationSystem& system) {
    std::string out = "maxlin " + std::to_string(system.var_count()) + ' ' +
                      std::to_string(system.size()) + ' ' + std::to_string(system.k()) +
                      '\n';
    for (const Equation& eq : system.equations()) {
        out += std::to_string(eq.weight) + ' ' + std::to_string(eq.rhs);
        for (int i = 1; i <= system.var_count(); ++i)
            if (eq.lhs.contains(i)) out += ' ' + std::to_string(i);
        out += '\n';
    }
    return out;
}

} // namespace pbf
