#pragma once

#include <stdexcept>
#include <string>

namespace loops {

struct loop_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_square : loop_error {
    not_square() : loop_error("table is not square") {}
};

struct entry_out_of_range : loop_error {
    entry_out_of_range(int row, int col, int value)
        : loop_error("entry out of range at row " + std::to_string(row) + ", col " +
                     std::to_string(col) + ": " + std::to_string(value)) {}
};

struct latin_row_violation : loop_error {
    explicit latin_row_violation(int row)
        : loop_error("row " + std::to_string(row + 1) + " is not a permutation"), row(row) {}
    int row;
};

struct latin_col_violation : loop_error {
    explicit latin_col_violation(int col)
        : loop_error("column " + std::to_string(col + 1) + " is not a permutation"), col(col) {}
    int col;
};

struct no_identity : loop_error {
    no_identity() : loop_error("element 1 is not a two-sided identity") {}
};

struct index_out_of_range : loop_error {
    explicit index_out_of_range(int x)
        : loop_error("element index out of range: " + std::to_string(x)) {}
};

struct no_two_sided_inverse : loop_error {
    explicit no_two_sided_inverse(int x)
        : loop_error("element " + std::to_string(x + 1) + " has no two-sided inverse"), element(x) {}
    int element;
};

struct degree_mismatch : loop_error {
    degree_mismatch() : loop_error("permutation degrees do not match") {}
};

struct size_limit_exceeded : loop_error {
    explicit size_limit_exceeded(std::size_t limit)
        : loop_error("group closure exceeded size cap " + std::to_string(limit)), limit(limit) {}
    std::size_t limit;
};

struct not_flexible : loop_error {
    not_flexible() : loop_error("loop is not flexible; xyx is ambiguous") {}
};

struct not_ip : loop_error {
    not_ip() : loop_error("loop does not have the inverse property") {}
};

struct order_mismatch : loop_error {
    order_mismatch() : loop_error("loop orders do not match") {}
};

struct search_budget_exceeded : loop_error {
    explicit search_budget_exceeded(std::uint64_t cap)
        : loop_error("isomorphism search exceeded node cap " + std::to_string(cap)) {}
};

struct invalid_triple_system : loop_error {
    invalid_triple_system(int p, int q)
        : loop_error("point pair {" + std::to_string(p + 1) + "," + std::to_string(q + 1) +
                     "} is not in exactly one triple") {}
};

struct invalid_spec : loop_error {
    explicit invalid_spec(const std::string& report)
        : loop_error("doubling spec failed validation: " + report) {}
};

struct precondition_failed : loop_error {
    explicit precondition_failed(const std::string& clause)
        : loop_error("precondition failed: " + clause) {}
};

struct parse_error : loop_error {
    using loop_error::loop_error;
};

} // namespace loops
