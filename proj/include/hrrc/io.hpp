#pragma once

#include <string>
#include <string_view>

#include "hrrc/model.hpp"

namespace hrrc {

/// Malformed document. The message names the line (for syntax errors) or the
/// offending field path (for schema errors).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Instance document:
//   {"residents": [{"id": str, "prefs": [str...]}...],
//    "hospitals": [{"id": str, "capacity": int, "prefs": [str...]}...],
//    "regions":   [{"hospitals": [str...], "cap": int}...]}   (optional)
// Regions with identical hospital sets and equal caps are merged on load.
// Throws ParseError for malformed input and PreconditionError when the
// document parses but describes an invalid instance.
Instance load_instance(std::string_view text);
std::string save_instance(const Instance& instance);

// Matching document: {"pairs": [[resident id, hospital id]...]}
Assignment load_matching(const Instance& instance, std::string_view text);
std::string save_matching(const Instance& instance, const Assignment& matching);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hrrc
