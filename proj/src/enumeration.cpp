#include "tabcomp/enumeration.hpp"

#include <cmath>

#include "tabcomp/error.hpp"

namespace tabcomp {

std::uint64_t max_fn(std::uint64_t j) {
    return j % 2 == 0 ? (j / 2) * (j + 1) : j * ((j + 1) / 2);
}

std::uint64_t diagonal_of_table(std::uint64_t i) {
    if (i == 0)
        return 0;
    // Estimate from the inverse of j(j+1)/2, then settle on the exact j.
    auto j = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(i) + 1.0) - 1.0) / 2.0);
    while (max_fn(j) < i)
        ++j;
    while (j > 0 && max_fn(j - 1) >= i)
        --j;
    return j;
}

TableShape table_shape(std::uint64_t i) {
    if (i == 0)
        throw DomainError("tables are numbered from 1");
    const std::uint64_t diag = diagonal_of_table(i);
    const std::uint64_t m = i - max_fn(diag - 1);
    const std::uint64_t n = diag - m + 1;
    return TableShape(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m));
}

std::uint64_t table_number(const TableShape& shape) {
    return max_fn(shape.diagonal() - 1) + shape.m();
}

Natural count_functions(const TableShape& shape) {
    return boost::multiprecision::pow(Natural(shape.m()) + 1, shape.n());
}

Natural functions_before_table(std::uint64_t table) {
    Natural total = 0;
    for (std::uint64_t i = 1; i < table; ++i)
        total += count_functions(table_shape(i));
    return total;
}

Natural function_number(const FunctionIndex& index) {
    return functions_before_table(table_number(index.shape())) + index.value() + 1;
}

FunctionIndex function_from_number(const Natural& number) {
    if (number < 1)
        throw DomainError("function numbers start at 1");
    Natural offset = 0;
    for (std::uint64_t i = 1;; ++i) {
        const TableShape shape = table_shape(i);
        const Natural count = count_functions(shape);
        if (number <= offset + count)
            return FunctionIndex::from_value(shape, number - offset - 1);
        offset += count;
    }
}

std::optional<FunctionIndex> successor(const FunctionIndex& index) {
    const Digit top = index.shape().m();
    std::vector<Digit> digits(index.digits().begin(), index.digits().end());
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] < top) {
            ++digits[i];
            return FunctionIndex(index.shape(), std::move(digits));
        }
        digits[i] = 0;
    }
    return std::nullopt;
}

FunctionIndex anti_diagonal(std::span<const FunctionIndex> functions) {
    if (functions.empty())
        throw ArityError("anti-diagonal needs n functions, got none");
    const TableShape shape = functions.front().shape();
    if (functions.size() != shape.n())
        throw ArityError("anti-diagonal over shape " + shape.to_string() + " needs " +
                         std::to_string(shape.n()) + " functions, got " +
                         std::to_string(functions.size()));
    std::vector<Digit> digits(shape.n());
    for (std::size_t i = 0; i < functions.size(); ++i) {
        if (functions[i].shape() != shape)
            throw ShapeMismatch("function " + std::to_string(i + 1) + " has shape " +
                                functions[i].shape().to_string() + ", expected " +
                                shape.to_string());
        digits[i] = functions[i].digits()[i] == 0 ? 1 : 0;
    }
    return FunctionIndex(shape, std::move(digits));
}

} // namespace tabcomp
