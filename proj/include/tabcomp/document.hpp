#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "tabcomp/function_index.hpp"
#include "tabcomp/relation.hpp"

// Line-oriented text format for tables:
//
//   table <n> <m> function
//   <k_1> <k_2> ... <k_n>
//
//   table <n> <m> relation
//   col 1: <rows ascending>
//   ...
//   col n: <rows ascending>
//
// Blank lines and '#' comments are ignored. Optional label lines name the
// positions:  "arg <i> <name>"  and  "val <j> <name>".
namespace tabcomp {

enum class TableKind { function, relation };

struct TableDocument {
    std::variant<FunctionIndex, RelationTable> payload;
    std::map<Column, std::string> argument_labels;
    std::map<Row, std::string> value_labels;

    const TableShape& shape() const;
    TableKind kind() const;

    // Relation view of either payload.
    RelationTable as_relation() const;

    bool operator==(const TableDocument&) const = default;
};

// Throws ParseError with the 1-based line and column of the first violation.
TableDocument parse_table_document(std::string_view text);
std::string serialize(const TableDocument& document);

} // namespace tabcomp
