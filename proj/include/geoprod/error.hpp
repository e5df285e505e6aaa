#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace geoprod {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
};

/// A term subscript below 1 was supplied.
class invalid_index : public error {
public:
    explicit invalid_index(std::int64_t index)
        : error("invalid index " + std::to_string(index) + " (indices start at 1)"), index_(index) {}

    std::int64_t index() const noexcept { return index_; }

private:
    std::int64_t index_;
};

class invalid_shift : public error {
public:
    using error::error;
};

class no_solution : public error {
public:
    using error::error;
};

/// A query or configuration violated its stated preconditions.
class invalid_argument : public error {
public:
    using error::error;
};

/// Evaluation referenced a term beyond the sequence length.
class index_out_of_range : public error {
public:
    index_out_of_range(std::int64_t index, std::int64_t max_index)
        : error("index " + std::to_string(index) + " exceeds max index " + std::to_string(max_index)) {}
};

class overflow : public error {
public:
    using error::error;
};

/// Syntax or lexical failure in the product/identity DSL.
class parse_error : public error {
public:
    enum class reason { syntax, invalid_index, zero_denominator };

    parse_error(std::size_t position, std::string expected, std::string found, reason why = reason::syntax)
        : error(describe(position, expected, found)),
          position_(position),
          expected_(std::move(expected)),
          found_(std::move(found)),
          reason_(why) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }
    reason why() const noexcept { return reason_; }

private:
    static std::string describe(std::size_t position, const std::string& expected, const std::string& found) {
        return "at offset " + std::to_string(position) + ": expected " + expected + ", found " + found;
    }

    std::size_t position_;
    std::string expected_;
    std::string found_;
    reason reason_;
};

} // namespace geoprod
