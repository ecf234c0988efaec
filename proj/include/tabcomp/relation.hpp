#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tabcomp/function_index.hpp"
#include "tabcomp/random.hpp"
#include "tabcomp/shape.hpp"
#include "tabcomp/table.hpp"

namespace tabcomp {

// n x m boolean grid with arbitrary marks.
//
// Each column is a fixed-width run of 64-bit words; bit (row - 1) of column c
// is cell (c, row). Whole-table operations (union, containment) work a word at
// a time over the flat storage.
class RelationTable {
public:
    using Word = std::uint64_t;
    static constexpr std::uint32_t word_bits = 64;

    explicit RelationTable(TableShape shape);
    // Relation with exactly the function's marks.
    explicit RelationTable(const FunctionTable& function);
    explicit RelationTable(const FunctionIndex& function);

    const TableShape& shape() const noexcept { return shape_; }

    RelationTable& mark(Column column, Row row);
    RelationTable& unmark(Column column, Row row);
    bool cell(Column column, Row row) const;

    // v_i: number of marks in the column.
    std::uint32_t marks_in_column(Column column) const;
    // Marked rows of the column, ascending.
    std::vector<Row> column_rows(Column column) const;

    // True when every column has at most one mark.
    bool is_function() const;
    // Throws DomainError unless is_function().
    FunctionTable to_function() const;

    // Cell-wise subset test against another relation of the same shape.
    bool subset_of(const RelationTable& other) const;

    std::span<const Word> column_words(Column column) const;
    std::uint32_t words_per_column() const noexcept { return words_per_column_; }

    bool operator==(const RelationTable&) const = default;

private:
    friend RelationTable superpose(const RelationTable& base, const RelationTable& addition);

    std::size_t word_offset(Column column) const;
    void check_cell(Column column, Row row) const;

    TableShape shape_;
    std::uint32_t words_per_column_;
    std::vector<Word> words_;
};

// Computational entropy in bits per argument: (1/n) * sum of log2(v_i) over
// columns with v_i >= 1. Zero for functions and partial functions.
double entropy(const RelationTable& relation);

// One marked row of the column chosen uniformly, or nullopt for an empty column.
// Throws DomainError if argument is outside 1..n.
std::optional<Row> random_evaluate(const RelationTable& relation, Column argument, Random& random);

// Applies random_evaluate to each column in order 1..n.
FunctionTable sample_function(const RelationTable& relation, Random& random);

// Cell-wise union. Throws ShapeMismatch on differing shapes.
RelationTable superpose(const RelationTable& base, const RelationTable& addition);
RelationTable superpose(const RelationTable& base, const FunctionTable& addition);

// True iff every marked cell of the function is marked in the relation.
bool contains(const RelationTable& relation, const FunctionTable& function);
bool contains(const RelationTable& relation, const FunctionIndex& function);

enum class CountMode {
    // One value per non-empty column; empty columns stay undefined.
    total_on_support,
    // Every contained function, partial ones and f_0 included.
    including_partial,
};

Natural count_contained(const RelationTable& relation, CountMode mode);

// Columns whose cell at `value` is marked, ascending. Throws DomainError if
// value is outside 1..m.
std::vector<Column> inverse_evaluate_relation(const RelationTable& relation, Row value);

// Probability that sample_function returns exactly `function`: the product of
// 1/v_i over defined columns when the function is contained and its undefined
// columns are exactly the relation's empty ones, otherwise 0.
double sample_probability(const RelationTable& relation, const FunctionIndex& function);

} // namespace tabcomp
