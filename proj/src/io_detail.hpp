#pragma once

#include <stdexcept>
#include <string>

#include "pdisk/io.hpp"

namespace pdisk::io::detail {

inline const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where, std::string("missing field \"") + key + "\"");
  return *it;
}

inline int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<int>();
}

inline std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

inline const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  return j;
}

inline std::string at(const std::string& where, const std::string& key) { return where + "." + key; }
inline std::string at(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

// Runs `fn`, converting library validation errors into ParseError at `where`.
template <class Fn>
auto guarded(const std::string& where, Fn fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(where, e.what());
  } catch (const std::domain_error& e) {
    throw ParseError(where, e.what());
  } catch (const TriangulationError& e) {
    throw ParseError(where, e.what());
  } catch (const FieldError& e) {
    throw ParseError(where, e.what());
  }
}

}  // namespace pdisk::io::detail
