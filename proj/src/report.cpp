#include "circpoly/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace circpoly {

std::string fmt17(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    if (res.ec != std::errc())
        throw std::runtime_error("fmt17: conversion failed");
    return std::string(buf, res.ptr);
}

Cell num_cell(double x) { return Cell{fmt17(x), false}; }

Cell int_cell(long long k) { return Cell{std::to_string(k), false}; }

Cell text_cell(std::string s) { return Cell{std::move(s), true}; }

Cell bool_cell(bool b) { return Cell{b ? "true" : "false", false}; }

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string json_value(const Cell& c) {
    if (c.quoted) return "\"" + json_escape(c.text) + "\"";
    return c.text.empty() ? "null" : c.text;
}

} // namespace

std::string render_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_field(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_field(row[i].text);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Table& t,
                        const std::vector<std::pair<std::string, Cell>>& meta) {
    std::string out = "{\n";
    for (const auto& [key, cell] : meta)
        out += "  \"" + json_escape(key) + "\": " + json_value(cell) + ",\n";
    out += "  \"columns\": [";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + json_escape(t.columns[i]) + "\"";
    }
    out += "],\n  \"rows\": [";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += r ? ",\n    {" : "\n    {";
        const auto& row = t.rows[r];
        for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
            if (i) out += ", ";
            out += "\"" + json_escape(t.columns[i]) + "\": " + json_value(row[i]);
        }
        out += "}";
    }
    out += t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace circpoly
