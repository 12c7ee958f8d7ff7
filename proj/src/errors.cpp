#include "varextropy/errors.hpp"

#include <sstream>

namespace varextropy {

namespace {

std::string tie_message(std::size_t index, double value) {
    std::ostringstream os;
    os.precision(17);
    os << "zero-width spacing window at order statistic " << index << " (value " << value
       << "); the sample has ties, retry with tie policy jitter";
    return os.str();
}

}  // namespace

TieError::TieError(std::size_t index, double value)
    : DataError(tie_message(index, value)), index_(index), value_(value) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace varextropy
