#include "tabcomp/relation.hpp"

#include <bit>
#include <cmath>

#include "tabcomp/error.hpp"

namespace tabcomp {

namespace {

void require_same_shape(const TableShape& a, const TableShape& b) {
    if (a != b)
        throw ShapeMismatch("shape " + a.to_string() + " does not match " + b.to_string());
}

// Row (1-based) of the `rank`-th set bit (0-based) of a column.
Row select_set_bit(std::span<const RelationTable::Word> words, std::uint32_t rank) {
    for (std::size_t w = 0; w < words.size(); ++w) {
        RelationTable::Word word = words[w];
        const auto count = static_cast<std::uint32_t>(std::popcount(word));
        if (rank >= count) {
            rank -= count;
            continue;
        }
        for (; rank > 0; --rank)
            word &= word - 1;
        return static_cast<Row>(w * RelationTable::word_bits + std::countr_zero(word) + 1);
    }
    return 0;
}

} // namespace

RelationTable::RelationTable(TableShape shape)
    : shape_(shape),
      words_per_column_((shape.m() + word_bits - 1) / word_bits),
      words_(std::size_t{shape.n()} * words_per_column_, 0) {}

RelationTable::RelationTable(const FunctionTable& function) : RelationTable(function.shape()) {
    for (Column c = 1; c <= shape_.n(); ++c) {
        if (Row r = function.marked_row(c); r != 0)
            mark(c, r);
    }
}

RelationTable::RelationTable(const FunctionIndex& function) : RelationTable(decode(function)) {}

std::size_t RelationTable::word_offset(Column column) const {
    return std::size_t{column - 1} * words_per_column_;
}

void RelationTable::check_cell(Column column, Row row) const {
    if (column == 0 || column > shape_.n())
        throw DomainError("argument " + std::to_string(column) + " outside 1.." +
                          std::to_string(shape_.n()));
    if (row == 0 || row > shape_.m())
        throw DomainError("value " + std::to_string(row) + " outside 1.." +
                          std::to_string(shape_.m()));
}

RelationTable& RelationTable::mark(Column column, Row row) {
    check_cell(column, row);
    words_[word_offset(column) + (row - 1) / word_bits] |= Word{1} << ((row - 1) % word_bits);
    return *this;
}

RelationTable& RelationTable::unmark(Column column, Row row) {
    check_cell(column, row);
    words_[word_offset(column) + (row - 1) / word_bits] &= ~(Word{1} << ((row - 1) % word_bits));
    return *this;
}

bool RelationTable::cell(Column column, Row row) const {
    check_cell(column, row);
    return (words_[word_offset(column) + (row - 1) / word_bits] >> ((row - 1) % word_bits)) & 1;
}

std::span<const RelationTable::Word> RelationTable::column_words(Column column) const {
    if (column == 0 || column > shape_.n())
        throw DomainError("argument " + std::to_string(column) + " outside 1.." +
                          std::to_string(shape_.n()));
    return {words_.data() + word_offset(column), words_per_column_};
}

std::uint32_t RelationTable::marks_in_column(Column column) const {
    std::uint32_t count = 0;
    for (Word w : column_words(column))
        count += static_cast<std::uint32_t>(std::popcount(w));
    return count;
}

std::vector<Row> RelationTable::column_rows(Column column) const {
    std::vector<Row> rows;
    const auto words = column_words(column);
    for (std::size_t w = 0; w < words.size(); ++w) {
        for (Word word = words[w]; word != 0; word &= word - 1)
            rows.push_back(static_cast<Row>(w * word_bits + std::countr_zero(word) + 1));
    }
    return rows;
}

bool RelationTable::is_function() const {
    for (Column c = 1; c <= shape_.n(); ++c) {
        if (marks_in_column(c) > 1)
            return false;
    }
    return true;
}

FunctionTable RelationTable::to_function() const {
    FunctionTable function(shape_);
    for (Column c = 1; c <= shape_.n(); ++c) {
        const auto rows = column_rows(c);
        if (rows.size() > 1)
            throw DomainError("column " + std::to_string(c) + " has " +
                              std::to_string(rows.size()) + " marks; not a function");
        if (!rows.empty())
            function.mark(c, rows.front());
    }
    return function;
}

bool RelationTable::subset_of(const RelationTable& other) const {
    require_same_shape(shape_, other.shape_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i])
            return false;
    }
    return true;
}

double entropy(const RelationTable& relation) {
    double sum = 0.0;
    for (Column c = 1; c <= relation.shape().n(); ++c) {
        // v_i = 0 is taken as x_i = 1, contributing nothing.
        if (std::uint32_t v = relation.marks_in_column(c); v > 1)
            sum += std::log2(static_cast<double>(v));
    }
    return sum / relation.shape().n();
}

std::optional<Row> random_evaluate(const RelationTable& relation, Column argument, Random& random) {
    const auto words = relation.column_words(argument);
    const std::uint32_t v = relation.marks_in_column(argument);
    if (v == 0)
        return std::nullopt;
    return select_set_bit(words, static_cast<std::uint32_t>(random.uniform_below(v)));
}

FunctionTable sample_function(const RelationTable& relation, Random& random) {
    FunctionTable function(relation.shape());
    for (Column c = 1; c <= relation.shape().n(); ++c) {
        if (auto row = random_evaluate(relation, c, random))
            function.mark(c, *row);
    }
    return function;
}

RelationTable superpose(const RelationTable& base, const RelationTable& addition) {
    require_same_shape(base.shape(), addition.shape());
    RelationTable result = base;
    for (std::size_t i = 0; i < result.words_.size(); ++i)
        result.words_[i] |= addition.words_[i];
    return result;
}

RelationTable superpose(const RelationTable& base, const FunctionTable& addition) {
    return superpose(base, RelationTable(addition));
}

bool contains(const RelationTable& relation, const FunctionTable& function) {
    require_same_shape(relation.shape(), function.shape());
    for (Column c = 1; c <= function.shape().n(); ++c) {
        if (Row r = function.marked_row(c); r != 0 && !relation.cell(c, r))
            return false;
    }
    return true;
}

bool contains(const RelationTable& relation, const FunctionIndex& function) {
    return contains(relation, decode(function));
}

Natural count_contained(const RelationTable& relation, CountMode mode) {
    Natural count = 1;
    for (Column c = 1; c <= relation.shape().n(); ++c) {
        const std::uint32_t v = relation.marks_in_column(c);
        if (mode == CountMode::including_partial)
            count *= Natural(v) + 1;
        else if (v > 0)
            count *= v;
    }
    return count;
}

std::vector<Column> inverse_evaluate_relation(const RelationTable& relation, Row value) {
    if (value == 0 || value > relation.shape().m())
        throw DomainError("value " + std::to_string(value) + " outside 1.." +
                          std::to_string(relation.shape().m()));
    std::vector<Column> columns;
    for (Column c = 1; c <= relation.shape().n(); ++c) {
        if (relation.cell(c, value))
            columns.push_back(c);
    }
    return columns;
}

double sample_probability(const RelationTable& relation, const FunctionIndex& function) {
    require_same_shape(relation.shape(), function.shape());
    double probability = 1.0;
    for (Column c = 1; c <= relation.shape().n(); ++c) {
        const std::uint32_t v = relation.marks_in_column(c);
        const Digit d = function.digits()[c - 1];
        if (v == 0) {
            if (d != 0)
                return 0.0;
            continue;
        }
        if (d == 0 || !relation.cell(c, d))
            return 0.0;
        probability /= v;
    }
    return probability;
}

} // namespace tabcomp
