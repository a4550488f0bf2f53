#pragma once

#include <stdexcept>
#include <string>

namespace hcca {

// Malformed input text (trace files, config files). Carries a line number
// when one is known; line == 0 means "not line-specific".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          line_(line)
    {
    }

    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

// Semantically invalid values (violated invariants, bad parameters).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A stream failed the admission budget while building a scenario.
class AdmissionError : public std::runtime_error {
public:
    AdmissionError(std::string message, std::size_t stream_index, double load, double budget)
        : std::runtime_error(std::move(message)),
          stream_index_(stream_index),
          load_(load),
          budget_(budget)
    {
    }

    std::size_t stream_index() const { return stream_index_; }
    double load() const { return load_; }
    double budget() const { return budget_; }

private:
    std::size_t stream_index_ = 0;
    double load_ = 0.0;
    double budget_ = 0.0;
};

// The event loop hit an unrecoverable scheduling condition (e.g. a CAP that
// cannot fit inside its service interval). Message includes a short timeline.
class SimulationFault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hcca
