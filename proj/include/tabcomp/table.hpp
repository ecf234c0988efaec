#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tabcomp/function_index.hpp"
#include "tabcomp/shape.hpp"

namespace tabcomp {

// Counts cells read by an evaluation. Tests use it to check that forward
// evaluation touches one column and inverse evaluation one row.
struct InspectionProbe {
    std::uint64_t cells = 0;
};

using Row = std::uint32_t;
using Column = std::uint32_t;

// Extensional finite discrete function: each column has at most one marked row.
// Stored as one row number per column, 0 meaning unmarked; the n x m grid is a view.
class FunctionTable {
public:
    explicit FunctionTable(TableShape shape);

    const TableShape& shape() const noexcept { return shape_; }

    // Marks `row` in `column`, replacing any previous mark. Both 1-based.
    FunctionTable& mark(Column column, Row row);
    FunctionTable& unmark(Column column);

    // Marked row of the column, 0 when unmarked.
    Row marked_row(Column column) const;

    // Grid view: true iff cell (column, row) is marked.
    bool cell(Column column, Row row) const;

    bool operator==(const FunctionTable&) const = default;

private:
    TableShape shape_;
    std::vector<Row> rows_;
};

FunctionIndex encode(const FunctionTable& table);
FunctionTable decode(const FunctionIndex& index);

// Value of the function at `argument`, or nullopt where it is partial.
// Throws DomainError if argument is outside 1..n.
std::optional<Row> evaluate(const FunctionTable& table, Column argument,
                            InspectionProbe* probe = nullptr);

// All arguments mapped to `value`, ascending. Throws DomainError if value is
// outside 1..m.
std::vector<Column> inverse_evaluate(const FunctionTable& table, Row value,
                                     InspectionProbe* probe = nullptr);

} // namespace tabcomp
