#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "tabcomp/function_index.hpp"
#include "tabcomp/shape.hpp"

// Diagonal ordering of table shapes and the global numbering of every finite
// discrete function.
//
// Shapes are laid out on a grid and visited along anti-diagonals of constant
// n + m - 1. Within diagonal j the tables run from (j, 1) to (1, j), so the
// i-th table has m(i) = i - max_fn(diag(i) - 1) and n(i) = diag(i) - m(i) + 1.
// Functions are numbered from 1 by walking the tables in that order and, inside
// a table, counting indices 0...0 to m...m in base m + 1.
namespace tabcomp {

// Number of the last table on diagonal j (the j-th triangular number).
std::uint64_t max_fn(std::uint64_t j);

// The diagonal holding table i: the unique j with max_fn(j-1) < i <= max_fn(j).
// diagonal_of_table(0) == 0.
std::uint64_t diagonal_of_table(std::uint64_t i);

// Shape of the i-th table, i >= 1. Throws DomainError for i == 0.
TableShape table_shape(std::uint64_t i);

// Position of a shape in the diagonal order, 1-based.
std::uint64_t table_number(const TableShape& shape);

// (m+1)^n: all total and partial functions of the shape, f_0 included.
Natural count_functions(const TableShape& shape);

// Sum of count_functions over the tables numbered 1 .. table - 1.
Natural functions_before_table(std::uint64_t table);

// Global number of the function, >= 1.
Natural function_number(const FunctionIndex& index);

// Inverse of function_number. Throws DomainError for N == 0.
FunctionIndex function_from_number(const Natural& number);

// Next index of the same shape in base-(m+1) counting order, or nullopt after m...m.
std::optional<FunctionIndex> successor(const FunctionIndex& index);

// Given n functions of shape (n, m), builds g whose i-th digit is the smallest
// value in 0..m different from the i-th digit of the i-th function, so g differs
// from every listed function. Throws ArityError if the list size is not n and
// ShapeMismatch if any function has a different shape.
FunctionIndex anti_diagonal(std::span<const FunctionIndex> functions);

} // namespace tabcomp
