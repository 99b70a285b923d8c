#include "gis/errors.hpp"

namespace gis {

namespace {
std::string located(std::size_t line, std::size_t column, std::string const& message) {
  std::string out = "parse error at line " + std::to_string(line);
  if (column != 0) out += ", column " + std::to_string(column);
  return out + ": " + message;
}
}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string const& message)
    : Error(located(line, column, message)), line_(line), column_(column), message_(message) {}

UnknownVertex::UnknownVertex(std::string const& name)
    : ValidationError("unknown vertex '" + name + "'") {}

}  // namespace gis
