#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "quadguess/compile.hpp"
#include "quadguess/equation.hpp"
#include "quadguess/rational.hpp"

namespace quadguess {

/// Prefix from text: either a JSON array of "p/q" strings (or integers), or
/// one rational per line. Blank lines and lines starting with '#' are skipped.
inline SequencePrefix parse_prefix(const std::string &text, const std::string &origin = "<input>")
{
    SequencePrefix prefix;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error &e) {
            throw Error(ErrorKind::parse_error, origin + ": invalid JSON: " + e.what());
        }
        std::size_t idx = 0;
        for (const auto &x : j) {
            try {
                if (x.is_string())
                    prefix.values.push_back(Rational::parse(x.get<std::string>()));
                else if (x.is_number_integer())
                    prefix.values.push_back(Rational::parse(x.dump()));
                else
                    throw Error(ErrorKind::parse_error, "expected a \"p/q\" string");
            } catch (const Error &e) {
                throw Error(e.kind(), origin + ": element " + std::to_string(idx) + ": " + e.what());
            }
            ++idx;
        }
        return prefix;
    }
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto body = detail::trim(line);
        if (body.empty() || body.front() == '#')
            continue;
        try {
            prefix.values.push_back(Rational::parse(body));
        } catch (const Error &e) {
            throw Error(e.kind(), origin + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return prefix;
}

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::parse_error, "cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline SequencePrefix load_prefix(const std::string &path) { return parse_prefix(read_file(path), path); }

inline QuadEquation parse_equation(const std::string &text, const std::string &origin = "<input>")
{
    try {
        return equation_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::parse_error, origin + ": " + e.what());
    } catch (const Error &e) {
        throw Error(e.kind(), origin + ": " + e.what());
    }
}

inline QuadEquation load_equation(const std::string &path) { return parse_equation(read_file(path), path); }

inline std::string format_prefix(const SequencePrefix &prefix)
{
    std::string out;
    for (const auto &v : prefix.values)
        out += v.str() + "\n";
    return out;
}

} // namespace quadguess
