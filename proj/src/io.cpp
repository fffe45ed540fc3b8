#include "afbd/io.hpp"

#include "afbd/error.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace afbd {

namespace {

std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// Splits on '\n'; a trailing '\r' is dropped by trim() later.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Matches `<head>(<body>).` and returns the body.
bool match_statement(std::string_view line, std::string_view head, std::string_view& body) {
    if (!line.starts_with(head)) return false;
    auto rest = trim(line.substr(head.size()));
    if (rest.empty() || rest.front() != '(') return false;
    if (!rest.ends_with('.')) return false;
    rest = trim(rest.substr(0, rest.size() - 1));
    if (rest.empty() || rest.back() != ')') return false;
    body = rest.substr(1, rest.size() - 2);
    return true;
}

void declare(FrameworkBuilder& b, std::string_view name, std::size_t line) {
    if (!is_valid_argument_name(name))
        throw ParseError(line, "invalid argument name `" + std::string(name) + "`");
    if (b.has_argument(name))
        throw ParseError(line, "duplicate argument `" + std::string(name) + "`");
    b.add_argument(std::string(name));
}

void attack(FrameworkBuilder& b, std::string_view from, std::string_view to, std::size_t line) {
    for (auto n : {from, to})
        if (!b.has_argument(n))
            throw ParseError(line, "undeclared argument `" + std::string(n) + "`");
    b.add_attack(from, to);
}

} // namespace

Framework parse_apx(std::string_view text) {
    FrameworkBuilder b;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        auto line = trim(lines[i]);
        if (line.empty() || line.front() == '%') continue;

        std::string_view body;
        if (match_statement(line, "arg", body)) {
            declare(b, trim(body), lineno);
        } else if (match_statement(line, "att", body)) {
            auto comma = body.find(',');
            if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
                throw ParseError(lineno, "expected att(<a>,<b>).");
            attack(b, trim(body.substr(0, comma)), trim(body.substr(comma + 1)), lineno);
        } else {
            throw ParseError(lineno, "malformed statement `" + std::string(line) + "`");
        }
    }
    return std::move(b).build();
}

Framework parse_tgf(std::string_view text) {
    FrameworkBuilder b;
    bool in_edges = false;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        auto line = trim(lines[i]);
        if (line.empty()) continue;
        if (!in_edges && line == "#") {
            in_edges = true;
            continue;
        }
        auto tokens = split_ws(line);
        if (!in_edges) {
            declare(b, tokens[0], lineno);
        } else {
            if (tokens.size() < 2) throw ParseError(lineno, "expected `<src> <dst>`");
            attack(b, tokens[0], tokens[1], lineno);
        }
    }
    if (!in_edges) throw ParseError(0, "tgf: missing `#` separator line");
    return std::move(b).build();
}

Framework parse_framework(std::string_view text, FileFormat format) {
    return format == FileFormat::Tgf ? parse_tgf(text) : parse_apx(text);
}

std::string serialize_apx(const Framework& f) {
    std::string out;
    for (const auto& n : f.names()) out += "arg(" + n + ").\n";
    for (const auto& [x, y] : f.attack_list()) out += "att(" + f.name(x) + "," + f.name(y) + ").\n";
    return out;
}

std::string serialize_tgf(const Framework& f) {
    std::string out;
    for (const auto& n : f.names()) out += n + "\n";
    out += "#\n";
    for (const auto& [x, y] : f.attack_list()) out += f.name(x) + " " + f.name(y) + "\n";
    return out;
}

FileFormat format_from_path(std::string_view path) {
    if (path.size() < 4) return FileFormat::Apx;
    std::string ext(path.substr(path.size() - 4));
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".tgf" ? FileFormat::Tgf : FileFormat::Apx;
}

} // namespace afbd
