#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "pairinfo/nat.hpp"

namespace pairinfo {

/// Reals are serialized with 12 significant digits everywhere reports
/// are printed (JSON and CSV alike).
inline std::string format_real(Real value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", value);
  return buf;
}

/// Minimal streaming JSON writer with deterministic field order (the
/// order of the calls). Naturals and rationals are emitted as decimal
/// strings so consumers never lose precision to double parsing.
class JsonWriter {
 public:
  std::string take() && { return std::move(out_); }
  const std::string& text() const { return out_; }

  JsonWriter& begin_object() { open("{"); return *this; }
  JsonWriter& end_object() { close("}"); return *this; }
  JsonWriter& begin_array() { open("["); return *this; }
  JsonWriter& end_array() { close("]"); return *this; }

  JsonWriter& key(const std::string& name) {
    separate();
    out_ += '"';
    escape(name);
    out_ += "\":";
    pending_value_ = true;
    return *this;
  }

  JsonWriter& string(const std::string& value) {
    separate();
    out_ += '"';
    escape(value);
    out_ += '"';
    return *this;
  }

  JsonWriter& boolean(bool value) {
    separate();
    out_ += value ? "true" : "false";
    return *this;
  }

  JsonWriter& real(Real value) {
    separate();
    out_ += format_real(value);
    return *this;
  }

  JsonWriter& integer(long long value) {
    separate();
    out_ += std::to_string(value);
    return *this;
  }

  JsonWriter& null() {
    separate();
    out_ += "null";
    return *this;
  }

  JsonWriter& nat(const Nat& value) { return string(to_decimal(value)); }
  JsonWriter& rational(const Rational& value) {
    return string(rational_to_string(value));
  }

 private:
  void open(const char* bracket) {
    separate();
    out_ += bracket;
    need_comma_.push_back(false);
  }

  void close(const char* bracket) {
    out_ += bracket;
    need_comma_.pop_back();
    if (!need_comma_.empty()) need_comma_.back() = true;
  }

  // Insert a comma before a sibling; a value right after key() is not a
  // sibling, it completes the pair.
  void separate() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!need_comma_.empty()) {
      if (need_comma_.back()) out_ += ',';
      need_comma_.back() = true;
    }
  }

  void escape(const std::string& s) {
    for (char ch : s) {
      switch (ch) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", ch);
            out_ += buf;
          } else {
            out_ += ch;
          }
      }
    }
  }

  std::string out_;
  std::vector<bool> need_comma_;
  bool pending_value_ = false;
};

/// Comma-separated rows with a header line; cells must not contain
/// commas (ours never do: decimals, fractions and enum names).
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) {
    append_row(header);
  }

  void append_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ += ',';
      out_ += cells[i];
    }
    out_ += '\n';
  }

  std::string take() && { return std::move(out_); }

 private:
  std::string out_;
};

}  // namespace pairinfo
