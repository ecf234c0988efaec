#include "tabcomp/function_index.hpp"

#include <algorithm>

#include "tabcomp/error.hpp"

namespace tabcomp {

FunctionIndex::FunctionIndex(TableShape shape, std::vector<Digit> digits)
    : shape_(shape), digits_(std::move(digits)) {
    if (digits_.size() != shape_.n())
        throw InvalidIndex("index of shape " + shape_.to_string() + " needs " +
                           std::to_string(shape_.n()) + " digits, got " +
                           std::to_string(digits_.size()));
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] > shape_.m())
            throw InvalidIndex("digit " + std::to_string(i + 1) + " is " +
                               std::to_string(digits_[i]) + ", above m = " +
                               std::to_string(shape_.m()));
    }
}

FunctionIndex FunctionIndex::empty(TableShape shape) {
    return FunctionIndex(shape, std::vector<Digit>(shape.n(), 0));
}

Digit FunctionIndex::digit(std::uint32_t argument) const {
    if (argument == 0 || argument > shape_.n())
        throw DomainError("argument " + std::to_string(argument) + " outside 1.." +
                          std::to_string(shape_.n()));
    return digits_[argument - 1];
}

bool FunctionIndex::is_total() const noexcept {
    return std::none_of(digits_.begin(), digits_.end(), [](Digit d) { return d == 0; });
}

Natural FunctionIndex::value() const {
    const Natural base = Natural(shape_.m()) + 1;
    Natural result = 0;
    for (Digit d : digits_)
        result = result * base + d;
    return result;
}

FunctionIndex FunctionIndex::from_value(TableShape shape, const Natural& value) {
    if (value < 0)
        throw InvalidIndex("negative index value");
    const Natural base = Natural(shape.m()) + 1;
    std::vector<Digit> digits(shape.n(), 0);
    Natural rest = value;
    for (std::size_t i = digits.size(); i-- > 0 && rest != 0;) {
        digits[i] = static_cast<Digit>(rest % base);
        rest /= base;
    }
    if (rest != 0)
        throw InvalidIndex("index value " + value.str() + " does not fit shape " + shape.to_string());
    return FunctionIndex(shape, std::move(digits));
}

std::string FunctionIndex::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(digits_[i]);
    }
    return out;
}

std::string FunctionIndex::to_compact_string() const {
    if (shape_.m() > 9)
        return to_string();
    std::string out;
    for (Digit d : digits_)
        out += static_cast<char>('0' + d);
    return out;
}

} // namespace tabcomp
