#ifndef SCANFILTER_ERROR_HPP
#define SCANFILTER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace scanfilter {

enum class Errc {
  EMPTY_SCAN,
  BAD_GEOMETRY,
  TOO_FEW_POINTS,
  DEGENERATE_RANGE,
  BAD_PARAMS,
  PARSE_ERROR,
  IO_ERROR,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EMPTY_SCAN: return "EMPTY_SCAN";
    case Errc::BAD_GEOMETRY: return "BAD_GEOMETRY";
    case Errc::TOO_FEW_POINTS: return "TOO_FEW_POINTS";
    case Errc::DEGENERATE_RANGE: return "DEGENERATE_RANGE";
    case Errc::BAD_PARAMS: return "BAD_PARAMS";
    case Errc::PARSE_ERROR: return "PARSE_ERROR";
    case Errc::IO_ERROR: return "IO_ERROR";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  // PARSE_ERROR carries the 1-based line number of the offending record.
  Error(Errc code, long line, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + " at line " +
                           std::to_string(line) + ": " + message),
        code_(code),
        line_(line) {}

  Errc code() const noexcept { return code_; }
  long line() const noexcept { return line_; }

private:
  Errc code_;
  long line_ = -1;
};

}  // namespace scanfilter

#endif  // SCANFILTER_ERROR_HPP
