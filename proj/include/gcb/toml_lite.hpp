#pragma once

// Small TOML reader covering the subset used by verification documents:
// [table] headers, dotted keys, strings, integers, booleans, arrays
// (possibly spanning lines) and inline tables. Converted straight to JSON.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "gcb/serialization.hpp"

namespace gcb::toml_lite {

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!done() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
    }
};

inline Json parse_value(Cursor& c);

inline std::string parse_string(Cursor& c) {
    ++c.i; // opening quote
    std::string out;
    while (!c.done() && c.peek() != '"') {
        if (c.peek() == '\\' && c.i + 1 < c.s.size()) {
            ++c.i;
            out.push_back(c.peek());
        } else {
            out.push_back(c.peek());
        }
        ++c.i;
    }
    if (c.done()) throw SchemaError("unterminated string in TOML input");
    ++c.i;
    return out;
}

inline Json parse_array(Cursor& c) {
    ++c.i; // '['
    Json arr = Json::array();
    c.skip_ws();
    while (!c.done() && c.peek() != ']') {
        arr.push_back(parse_value(c));
        c.skip_ws();
        if (!c.done() && c.peek() == ',') {
            ++c.i;
            c.skip_ws();
        }
    }
    if (c.done()) throw SchemaError("unterminated array in TOML input");
    ++c.i;
    return arr;
}

inline Json parse_inline_table(Cursor& c) {
    ++c.i; // '{'
    Json obj = Json::object();
    c.skip_ws();
    while (!c.done() && c.peek() != '}') {
        std::string key;
        while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_')) {
            key.push_back(c.peek());
            ++c.i;
        }
        c.skip_ws();
        if (c.done() || c.peek() != '=') throw SchemaError("expected '=' in inline table");
        ++c.i;
        c.skip_ws();
        obj[key] = parse_value(c);
        c.skip_ws();
        if (!c.done() && c.peek() == ',') {
            ++c.i;
            c.skip_ws();
        }
    }
    if (c.done()) throw SchemaError("unterminated inline table in TOML input");
    ++c.i;
    return obj;
}

inline Json parse_value(Cursor& c) {
    c.skip_ws();
    if (c.done()) throw SchemaError("missing value in TOML input");
    const char ch = c.peek();
    if (ch == '"') return Json(parse_string(c));
    if (ch == '[') return parse_array(c);
    if (ch == '{') return parse_inline_table(c);
    std::string tok;
    while (!c.done() && c.peek() != ',' && c.peek() != ']' && c.peek() != '}' && c.peek() != '\n' &&
           c.peek() != '#') {
        tok.push_back(c.peek());
        ++c.i;
    }
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r')) tok.pop_back();
    if (tok == "true") return Json(true);
    if (tok == "false") return Json(false);
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used == tok.size()) return Json(v);
    } catch (...) {
    }
    throw SchemaError("unsupported TOML value '" + tok + "'");
}

inline std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_string = !in_string;
        if (line[i] == '#' && !in_string) return line.substr(0, i);
    }
    return line;
}

inline std::vector<std::string> split_path(const std::string& dotted) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : dotted) {
        if (ch == '.') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace detail

inline Json parse(const std::string& text) {
    Json root = Json::object();
    std::vector<std::string> table;

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = detail::strip_comment(raw);
        // join continuation lines of an open array
        auto balance = [](const std::string& s) {
            int b = 0;
            for (char ch : s) {
                if (ch == '[') ++b;
                if (ch == ']') --b;
            }
            return b;
        };
        while (balance(line) > 0) {
            std::string next;
            if (!std::getline(in, next)) throw SchemaError("unterminated array in TOML input");
            line += "\n" + detail::strip_comment(next);
        }

        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '[') {
            std::size_t close = line.find(']', first);
            if (close == std::string::npos) throw SchemaError("unterminated table header");
            table = detail::split_path(line.substr(first + 1, close - first - 1));
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw SchemaError("expected 'key = value' in TOML input");
        auto path = detail::split_path(line.substr(0, eq));
        detail::Cursor c{line, eq + 1};
        Json value = detail::parse_value(c);

        Json* node = &root;
        for (const auto& part : table) node = &(*node)[part];
        for (std::size_t i = 0; i + 1 < path.size(); ++i) node = &(*node)[path[i]];
        (*node)[path.back()] = std::move(value);
    }
    return root;
}

} // namespace gcb::toml_lite
