#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pairinfo {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside an operation's domain (zero where a positive value is
/// required, invalid sampling spec, malformed decimal string, ...).
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what) {}
};

/// Expression text rejected by the candidate parser. Carries the byte
/// offset of the offending token.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Polynomial evaluation produced a value outside the naturals, or the
/// point had the wrong arity. The witness names the offending point.
class eval_error : public error {
 public:
  enum class kind { non_integral, negative, arity_mismatch };

  eval_error(kind k, const std::string& what, std::string witness)
      : error(what), kind_(k), witness_(std::move(witness)) {}

  kind reason() const { return kind_; }
  const std::string& witness() const { return witness_; }

 private:
  kind kind_;
  std::string witness_;
};

/// Malformed or truncated codec bit stream.
class codec_error : public error {
 public:
  explicit codec_error(const std::string& what) : error(what) {}
};

}  // namespace pairinfo
