// xlam -- cross-lingual argument mining toolkit
//
// Error types shared by all modules.
#ifndef XLAM_CORE_ERROR_H_
#define XLAM_CORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace xlam {

// Base class for everything xlam throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed input file (CoNLL, Pharaoh, embedding text, model container).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string &msg) : Error(msg) {}
  ParseError(const std::string &msg, long line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  long line() const { return line_; }

 private:
  long line_ = -1;
};

// Well-formed input that violates a documented invariant (BIO structure,
// index bounds, mismatched sentence counts, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string &msg) : Error(msg) {}
};

// A requested key (word, document id) is not present.
class LookupError : public Error {
 public:
  explicit LookupError(const std::string &msg) : Error(msg) {}
};

// Filesystem-level failure.
class IoError : public Error {
 public:
  explicit IoError(const std::string &msg) : Error(msg) {}
};

}  // namespace xlam

#endif  // XLAM_CORE_ERROR_H_
