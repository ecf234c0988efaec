#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tabcomp {

// Arbitrary-precision natural number used for function counts and global numbers.
using Natural = boost::multiprecision::cpp_int;

// Shape of a table: n arguments (columns) by m values (rows). Both are >= 1.
class TableShape {
public:
    TableShape(std::uint32_t n, std::uint32_t m);

    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t m() const noexcept { return m_; }

    // Anti-diagonal of the shape grid this table lies on: n + m - 1.
    std::uint64_t diagonal() const noexcept { return std::uint64_t{n_} + m_ - 1; }

    auto operator<=>(const TableShape&) const = default;

    // "NxM"
    std::string to_string() const;

    // Parses "NxM"; throws ParseError (column-positioned, line 1) on malformed text.
    static TableShape parse(const std::string& text);

private:
    std::uint32_t n_;
    std::uint32_t m_;
};

} // namespace tabcomp
