#ifndef FIXWORD_ERROR_HPP
#define FIXWORD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fixword {

// Base class for every failure raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured size limit (see Caps) would be exceeded.
class cap_exceeded : public error {
public:
    cap_exceeded(const std::string& what_cap, long long limit, long long requested)
        : error(what_cap + " cap exceeded: requested " + std::to_string(requested) +
                ", limit " + std::to_string(limit)),
          cap_(what_cap), limit_(limit), requested_(requested) {}

    const std::string& cap() const noexcept { return cap_; }
    long long limit() const noexcept { return limit_; }
    long long requested() const noexcept { return requested_; }

private:
    std::string cap_;
    long long limit_;
    long long requested_;
};

// Precondition violations on arguments: wrong sizes, non-permutations,
// graphs without the required shape, and so on.
class invalid_input : public error {
public:
    using error::error;
};

class not_fixable : public error {
public:
    not_fixable() : error("network is not fixable") {}
};

class not_acyclic : public invalid_input {
public:
    not_acyclic() : invalid_input("graph is not acyclic") {}
};

class not_strong : public invalid_input {
public:
    not_strong() : invalid_input("graph is not strongly connected") {}
};

// Syntax error in one of the text formats; line and column are 1-based.
class parse_error : public error {
public:
    parse_error(int line, int column, const std::string& message)
        : error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
          line_(line), column_(column), message_(message) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

} // namespace fixword

#endif
