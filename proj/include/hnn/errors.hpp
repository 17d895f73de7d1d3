#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hnn {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed word text. `position` is the byte offset of the offending
  // character.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // A generator outside the permitted alphabet (e.g. t in a word of H).
  class AlphabetError : public Error {
   public:
    using Error::Error;
  };

  // 64-bit exponent arithmetic overflowed.
  class OverflowError : public Error {
   public:
    using Error::Error;
  };

  // A configured resource limit (syllables, exponent size, lift depth) was
  // exceeded.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  // A documented precondition was violated by the caller.
  class ContractError : public Error {
   public:
    using Error::Error;
  };

  // A configuration document that does not follow the schema.
  class ConfigError : public Error {
   public:
    using Error::Error;
  };

}  // namespace hnn
