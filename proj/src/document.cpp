#include "tabcomp/document.hpp"

#include <charconv>
#include <optional>
#include <vector>

#include "tabcomp/error.hpp"

namespace tabcomp {

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

struct Line {
    std::size_t number; // 1-based
    std::string_view text; // comment stripped
};

std::vector<Token> tokenize(std::string_view text, std::size_t column_base = 0) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r')
            ++i;
        if (i > start)
            tokens.push_back({text.substr(start, i - start), column_base + start + 1});
    }
    return tokens;
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!tokenize(line).empty())
            lines.push_back({number, line});
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return lines;
}

std::uint32_t parse_number(const Token& token, std::size_t line, const char* what) {
    std::uint32_t value = 0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line, token.column,
                         std::string("expected ") + what + ", got '" + std::string(token.text) + "'");
    return value;
}

std::string rest_of_line(std::string_view text, const Token& after) {
    std::size_t start = after.column - 1 + after.text.size();
    std::string_view rest = text.substr(start);
    while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t'))
        rest.remove_prefix(1);
    while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r'))
        rest.remove_suffix(1);
    return std::string(rest);
}

void parse_label(const Line& line, const TableShape& shape, TableDocument& doc) {
    const auto tokens = tokenize(line.text);
    const bool is_arg = tokens[0].text == "arg";
    if (!is_arg && tokens[0].text != "val")
        throw ParseError(line.number, tokens[0].column,
                         "unexpected '" + std::string(tokens[0].text) + "' after table payload");
    if (tokens.size() < 3)
        throw ParseError(line.number, tokens[0].column + tokens[0].text.size(),
                         "label line needs a position and a name");
    const std::uint32_t position = parse_number(tokens[1], line.number, "a position");
    const std::uint32_t limit = is_arg ? shape.n() : shape.m();
    if (position == 0 || position > limit)
        throw ParseError(line.number, tokens[1].column,
                         "label position " + std::to_string(position) + " outside 1.." +
                             std::to_string(limit));
    auto& labels = is_arg ? doc.argument_labels : doc.value_labels;
    if (!labels.emplace(position, rest_of_line(line.text, tokens[1])).second)
        throw ParseError(line.number, tokens[1].column, "duplicate label");
}

FunctionIndex parse_function_payload(const Line& line, const TableShape& shape) {
    const auto tokens = tokenize(line.text);
    if (tokens.size() != shape.n()) {
        const std::size_t column = tokens.size() > shape.n() ? tokens[shape.n()].column
                                                             : line.text.size() + 1;
        throw ParseError(line.number, column,
                         "expected " + std::to_string(shape.n()) + " digits, got " +
                             std::to_string(tokens.size()));
    }
    std::vector<Digit> digits;
    digits.reserve(tokens.size());
    for (const auto& token : tokens) {
        const std::uint32_t d = parse_number(token, line.number, "a digit");
        if (d > shape.m())
            throw ParseError(line.number, token.column,
                             "digit " + std::to_string(d) + " exceeds m = " +
                                 std::to_string(shape.m()));
        digits.push_back(d);
    }
    return FunctionIndex(shape, std::move(digits));
}

void parse_relation_column(const Line& line, Column expected, RelationTable& relation) {
    const auto colon = line.text.find(':');
    const auto head = tokenize(line.text.substr(0, colon == std::string_view::npos ? line.text.size() : colon));
    if (head.empty() || head[0].text != "col")
        throw ParseError(line.number, head.empty() ? 1 : head[0].column,
                         "expected 'col " + std::to_string(expected) + ":'");
    if (colon == std::string_view::npos)
        throw ParseError(line.number, line.text.size() + 1, "missing ':' after column number");
    if (head.size() != 2)
        throw ParseError(line.number, head.size() < 2 ? colon + 1 : head[2].column,
                         "expected 'col <i>:'");
    const std::uint32_t column = parse_number(head[1], line.number, "a column number");
    if (column != expected)
        throw ParseError(line.number, head[1].column,
                         "expected column " + std::to_string(expected) + ", got " +
                             std::to_string(column));

    const TableShape& shape = relation.shape();
    Row previous = 0;
    for (const auto& token : tokenize(line.text.substr(colon + 1), colon + 1)) {
        const std::uint32_t row = parse_number(token, line.number, "a row");
        if (row == 0 || row > shape.m())
            throw ParseError(line.number, token.column,
                             "row " + std::to_string(row) + " outside 1.." +
                                 std::to_string(shape.m()));
        if (row <= previous)
            throw ParseError(line.number, token.column, "rows must be strictly ascending");
        relation.mark(column, row);
        previous = row;
    }
}

} // namespace

const TableShape& TableDocument::shape() const {
    return std::visit([](const auto& p) -> const TableShape& { return p.shape(); }, payload);
}

TableKind TableDocument::kind() const {
    return std::holds_alternative<FunctionIndex>(payload) ? TableKind::function
                                                          : TableKind::relation;
}

RelationTable TableDocument::as_relation() const {
    if (const auto* f = std::get_if<FunctionIndex>(&payload))
        return RelationTable(*f);
    return std::get<RelationTable>(payload);
}

TableDocument parse_table_document(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(1, 1, "empty document; expected 'table <n> <m> <function|relation>'");

    const Line& header = lines.front();
    const auto tokens = tokenize(header.text);
    if (tokens[0].text != "table")
        throw ParseError(header.number, tokens[0].column, "expected 'table'");
    if (tokens.size() != 4)
        throw ParseError(header.number, tokens.size() > 4 ? tokens[4].column : header.text.size() + 1,
                         "header is 'table <n> <m> <function|relation>'");
    const std::uint32_t n = parse_number(tokens[1], header.number, "n");
    const std::uint32_t m = parse_number(tokens[2], header.number, "m");
    if (n == 0)
        throw ParseError(header.number, tokens[1].column, "n must be >= 1");
    if (m == 0)
        throw ParseError(header.number, tokens[2].column, "m must be >= 1");
    const TableShape shape(n, m);

    std::size_t next = 1;
    auto require_line = [&](const char* what) -> const Line& {
        if (next >= lines.size()) {
            const Line& last = lines.back();
            throw ParseError(last.number + 1, 1, std::string("missing ") + what);
        }
        return lines[next++];
    };

    std::optional<TableDocument> doc;
    if (tokens[3].text == "function") {
        doc = TableDocument{parse_function_payload(require_line("digit line"), shape), {}, {}};
    } else if (tokens[3].text == "relation") {
        RelationTable relation(shape);
        for (Column c = 1; c <= n; ++c)
            parse_relation_column(require_line("column line"), c, relation);
        doc = TableDocument{std::move(relation), {}, {}};
    } else {
        throw ParseError(header.number, tokens[3].column,
                         "kind must be 'function' or 'relation', got '" +
                             std::string(tokens[3].text) + "'");
    }

    for (; next < lines.size(); ++next)
        parse_label(lines[next], shape, *doc);
    return std::move(*doc);
}

std::string serialize(const TableDocument& document) {
    const TableShape& shape = document.shape();
    std::string out = "table " + std::to_string(shape.n()) + ' ' + std::to_string(shape.m()) + ' ';
    if (const auto* f = std::get_if<FunctionIndex>(&document.payload)) {
        out += "function\n" + f->to_string() + '\n';
    } else {
        const auto& relation = std::get<RelationTable>(document.payload);
        out += "relation\n";
        for (Column c = 1; c <= shape.n(); ++c) {
            out += "col " + std::to_string(c) + ':';
            for (Row r : relation.column_rows(c))
                out += ' ' + std::to_string(r);
            out += '\n';
        }
    }
    for (const auto& [position, name] : document.argument_labels)
        out += "arg " + std::to_string(position) + ' ' + name + '\n';
    for (const auto& [position, name] : document.value_labels)
        out += "val " + std::to_string(position) + ' ' + name + '\n';
    return out;
}

} // namespace tabcomp
