#include "ppm/pppm_instance.hpp"

#include "ppm/error.hpp"

#include <charconv>
#include <ostream>
#include <string>

namespace ppm {

void PppmInstance::check() const {
    if (static_cast<int>(colors.size()) != text.size())
        throw InvalidArgument("coloring has " + std::to_string(colors.size()) + " entries, text has " +
                              std::to_string(text.size()));
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] < 1 || colors[i] > pattern.size())
            throw InvalidArgument("color " + std::to_string(colors[i]) + " of text entry " + std::to_string(i + 1) +
                                  " outside [1," + std::to_string(pattern.size()) + "]");
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        if (line.find_first_not_of(" \t\r,") != std::string_view::npos)
            lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::vector<int> parse_ints(std::string_view line, std::size_t line_no) {
    std::vector<int> out;
    std::size_t pos = 0;
    auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; };
    while (pos < line.size()) {
        while (pos < line.size() && is_sep(line[pos]))
            ++pos;
        if (pos >= line.size())
            break;
        auto end = pos;
        while (end < line.size() && !is_sep(line[end]))
            ++end;
        int v = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, v);
        if (ec != std::errc() || ptr != line.data() + end)
            throw ParseError("non-integer token '" + std::string(line.substr(pos, end - pos)) + "' on line " +
                                 std::to_string(line_no),
                             out.size() + 1);
        out.push_back(v);
        pos = end;
    }
    return out;
}

} // namespace

PppmInstance parse_pppm_instance(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.size() != 3)
        throw ParseError("colored instance needs 3 lines (text, colors, pattern), got " + std::to_string(lines.size()),
                         lines.size());
    PppmInstance inst;
    try {
        inst.text = parse_permutation(lines[0]);
    } catch (const ParseError &e) {
        throw ParseError(std::string("line 1: ") + e.what(), e.position());
    }
    inst.colors = parse_ints(lines[1], 2);
    try {
        inst.pattern = parse_permutation(lines[2]);
    } catch (const ParseError &e) {
        throw ParseError(std::string("line 3: ") + e.what(), e.position());
    }
    inst.check();
    return inst;
}

void write_pppm_instance(std::ostream &os, const PppmInstance &inst) {
    os << inst.text << '\n';
    for (std::size_t i = 0; i < inst.colors.size(); ++i)
        os << (i ? " " : "") << inst.colors[i];
    os << '\n' << inst.pattern << '\n';
}

} // namespace ppm
