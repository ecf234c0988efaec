#include "tabcomp/shape.hpp"

#include <charconv>
#include <limits>

#include "tabcomp/error.hpp"

namespace tabcomp {

TableShape::TableShape(std::uint32_t n, std::uint32_t m) : n_(n), m_(m) {
    if (n == 0 || m == 0)
        throw DomainError("table shape needs n >= 1 and m >= 1, got " + std::to_string(n) + "x" +
                          std::to_string(m));
}

std::string TableShape::to_string() const {
    return std::to_string(n_) + "x" + std::to_string(m_);
}

namespace {

std::uint32_t parse_dimension(const std::string& text, std::size_t begin, std::size_t end) {
    std::uint32_t value = 0;
    const char* first = text.data() + begin;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (begin == end || ec != std::errc{} || ptr != last)
        throw ParseError(1, begin + 1, "expected a positive decimal dimension in '" + text + "'");
    if (value == 0)
        throw ParseError(1, begin + 1, "table dimensions must be >= 1");
    return value;
}

} // namespace

TableShape TableShape::parse(const std::string& text) {
    auto x = text.find_first_of("xX");
    if (x == std::string::npos)
        throw ParseError(1, 1, "expected NxM, got '" + text + "'");
    return TableShape(parse_dimension(text, 0, x), parse_dimension(text, x + 1, text.size()));
}

} // namespace tabcomp
