#include "tabcomp/table.hpp"

#include "tabcomp/error.hpp"

namespace tabcomp {

namespace {

void check_argument(const TableShape& shape, Column argument) {
    if (argument == 0 || argument > shape.n())
        throw DomainError("argument " + std::to_string(argument) + " outside 1.." +
                          std::to_string(shape.n()));
}

void check_value(const TableShape& shape, Row value) {
    if (value == 0 || value > shape.m())
        throw DomainError("value " + std::to_string(value) + " outside 1.." +
                          std::to_string(shape.m()));
}

} // namespace

FunctionTable::FunctionTable(TableShape shape) : shape_(shape), rows_(shape.n(), 0) {}

FunctionTable& FunctionTable::mark(Column column, Row row) {
    check_argument(shape_, column);
    check_value(shape_, row);
    rows_[column - 1] = row;
    return *this;
}

FunctionTable& FunctionTable::unmark(Column column) {
    check_argument(shape_, column);
    rows_[column - 1] = 0;
    return *this;
}

Row FunctionTable::marked_row(Column column) const {
    check_argument(shape_, column);
    return rows_[column - 1];
}

bool FunctionTable::cell(Column column, Row row) const {
    check_value(shape_, row);
    return marked_row(column) == row;
}

FunctionIndex encode(const FunctionTable& table) {
    std::vector<Digit> digits(table.shape().n());
    for (Column c = 1; c <= table.shape().n(); ++c)
        digits[c - 1] = table.marked_row(c);
    return FunctionIndex(table.shape(), std::move(digits));
}

FunctionTable decode(const FunctionIndex& index) {
    FunctionTable table(index.shape());
    for (Column c = 1; c <= index.shape().n(); ++c) {
        if (Digit d = index.digits()[c - 1]; d != 0)
            table.mark(c, d);
    }
    return table;
}

std::optional<Row> evaluate(const FunctionTable& table, Column argument, InspectionProbe* probe) {
    check_argument(table.shape(), argument);
    // The column's single slot holds the marked row, if any.
    if (probe)
        ++probe->cells;
    const Row row = table.marked_row(argument);
    if (row == 0)
        return std::nullopt;
    return row;
}

std::vector<Column> inverse_evaluate(const FunctionTable& table, Row value, InspectionProbe* probe) {
    check_value(table.shape(), value);
    std::vector<Column> columns;
    for (Column c = 1; c <= table.shape().n(); ++c) {
        if (probe)
            ++probe->cells;
        if (table.marked_row(c) == value)
            columns.push_back(c);
    }
    return columns;
}

} // namespace tabcomp
