#ifndef NCWHEEL_JSONIO_HPP
#define NCWHEEL_JSONIO_HPP

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

// Minimal deterministic JSON emission. Numbers are rendered with
// std::to_chars at 10 significant digits, locale-independent, so identical
// inputs always serialize to identical bytes.

namespace ncwheel::jsonio {

inline std::string format_double(double v) {
  if (v == 0.0) return "0";  // normalizes -0
  if (!std::isfinite(v)) return "null";
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 10);
  return std::string(buf, res.ptr);
}

inline std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

class JsonWriter {
 public:
  JsonWriter& begin_object() {
    separate();
    out_ += '{';
    stack_.push_back(true);
    return *this;
  }
  JsonWriter& end_object() {
    out_ += '}';
    stack_.pop_back();
    return *this;
  }
  JsonWriter& begin_array() {
    separate();
    out_ += '[';
    stack_.push_back(true);
    return *this;
  }
  JsonWriter& end_array() {
    out_ += ']';
    stack_.pop_back();
    return *this;
  }
  JsonWriter& key(std::string_view k) {
    separate();
    out_ += '"';
    out_ += escape(k);
    out_ += "\":";
    after_key_ = true;
    return *this;
  }
  JsonWriter& value(double v) { return raw(format_double(v)); }
  JsonWriter& value(int v) { return raw(std::to_string(v)); }
  JsonWriter& value(bool v) { return raw(v ? "true" : "false"); }
  JsonWriter& value(std::string_view v) { return raw('"' + escape(v) + '"'); }
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& null() { return raw("null"); }

  const std::string& str() const { return out_; }

 private:
  JsonWriter& raw(const std::string& text) {
    separate();
    out_ += text;
    return *this;
  }
  void separate() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!stack_.empty()) {
      if (stack_.back())
        stack_.back() = false;
      else
        out_ += ',';
    }
  }

  std::string out_;
  std::vector<bool> stack_;  // true while the current container is still empty
  bool after_key_ = false;
};

}  // namespace ncwheel::jsonio

#endif
