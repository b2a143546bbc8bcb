#ifndef LOGICWB_ERROR_H_
#define LOGICWB_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logicwb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Formula text that does not match its grammar. `position` is a byte offset
// into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A structure document or builder call that violates a structure invariant
// (malformed JSON, undeclared ids, arity clashes, empty domains).
class StructureError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exhaustive searches refuse inputs beyond their combinatorial budget.
class BudgetError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace logicwb

#endif  // LOGICWB_ERROR_H_
