#ifndef ORDALEX_ERRORS_HPP
#define ORDALEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordalex
{

// Malformed presentation, system or map text.
class parse_error : public std::runtime_error
{
public:
    parse_error(const std::string &msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column)
    {
    }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// Input is well formed but inconsistent (class does not vanish on a relator,
// system does not respect the relators, ...).
class invalid_input : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// The input is outside what the engine can compute (e.g. a metabelian
// quotient whose commutator part is not finitely generated).
class unsupported : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed. Always a bug.
class invariant_violation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace ordalex

#endif
