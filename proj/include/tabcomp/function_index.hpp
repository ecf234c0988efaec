#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tabcomp/shape.hpp"

namespace tabcomp {

using Digit = std::uint32_t;

// The index k = k_1 ... k_n of one finite discrete function of a given shape.
// Digit i is the row marked in column i, or 0 when the function is undefined there.
// k_1 is the most significant digit when the index is read as a base-(m+1) natural.
class FunctionIndex {
public:
    // Throws InvalidIndex unless digits.size() == n and every digit is <= m.
    FunctionIndex(TableShape shape, std::vector<Digit> digits);

    // f_0: undefined everywhere.
    static FunctionIndex empty(TableShape shape);

    const TableShape& shape() const noexcept { return shape_; }
    std::span<const Digit> digits() const noexcept { return digits_; }

    // 1-based argument position.
    Digit digit(std::uint32_t argument) const;

    bool is_total() const noexcept;

    // (k)_{10}: the digits read as a base-(m+1) natural.
    Natural value() const;

    // Inverse of value(); left-pads with zeros to n digits. Throws InvalidIndex if
    // value >= (m+1)^n.
    static FunctionIndex from_value(TableShape shape, const Natural& value);

    // Space separated digits, "1 2 4 7".
    std::string to_string() const;
    // Concatenated digits ("1247") when m <= 9, otherwise the same as to_string().
    std::string to_compact_string() const;

    bool operator==(const FunctionIndex&) const = default;
    auto operator<=>(const FunctionIndex&) const = default;

private:
    TableShape shape_;
    std::vector<Digit> digits_;
};

} // namespace tabcomp
