#pragma once

// Deterministic table rendering.  All floating-point values are printed with
// std::to_chars in shortest round-trip form, so equal doubles always produce
// identical bytes and every printed value parses back to the same binary64.
// CSV and JSON renderers share one Table structure; JSON objects keep the
// column order, so repeated runs emit identical files.

#include <string>
#include <utility>
#include <vector>

#include "circpoly/laurent.hpp"

namespace circpoly {

std::string fmt17(double x);

struct Cell {
    std::string text;
    bool quoted = false;  // JSON: emit as string; CSV: quote if needed anyway
};

Cell num_cell(double x);
Cell int_cell(long long k);
Cell text_cell(std::string s);
Cell bool_cell(bool b);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// RFC-4180-style CSV: header row, "\n" endings, fields quoted only when they
// contain a comma, quote, or newline.
std::string render_csv(const Table& t);

// {"<meta>...,"columns":[...],"rows":[{col:val,...},...]} with two-space
// indentation and a trailing newline.
std::string render_json(const Table& t,
                        const std::vector<std::pair<std::string, Cell>>& meta = {});

void write_text_file(const std::string& path, const std::string& content);

} // namespace circpoly
