#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "zxr/diagram.hpp"

namespace zxr {

struct ParseError : std::runtime_error {
  int line;
  int column;
  std::string reason;
  ParseError(int l, int c, std::string r);
};

Diagram parse_zxd(std::string_view text);
std::string serialize_zxd(const Diagram& d);
std::string normalize_text(std::string_view text);  // serialize(parse(text))
std::string to_dot(const Diagram& d);
std::string phase_label(const Phase& p);  // "π/2", "3π/2", "" for 0

Diagram read_zxd_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace zxr
