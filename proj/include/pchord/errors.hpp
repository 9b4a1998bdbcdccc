#ifndef PCHORD_ERRORS_HPP
#define PCHORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pchord
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's documented domain.
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// Arithmetic result does not fit the 64-bit integer width.
class RangeError : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  using Error::Error;
};

/// Group enumeration would exceed the configured order cap.
class CapExceeded : public Error
{
public:
  using Error::Error;
};

/// A structural hypothesis of the requested procedure does not hold.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

/// An in-band validation failed. Always indicates a bug, never bad input.
class InternalError : public Error
{
public:
  using Error::Error;
};

} // namespace pchord

#endif // PCHORD_ERRORS_HPP
