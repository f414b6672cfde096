// Error codes shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace sombor {

enum class errc {
  empty_input,
  non_positive_entry,
  not_realizable,
  internal_entry_too_small,
  infeasible_internal,
  label_out_of_range,
  bad_format,
  not_a_tree,
  edges_share_vertex,
  not_a_tree_after_switch,
  asymmetric_function,
  cap_exceeded,
  invalid_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_input: return "empty_input";
    case errc::non_positive_entry: return "non_positive_entry";
    case errc::not_realizable: return "not_realizable";
    case errc::internal_entry_too_small: return "internal_entry_too_small";
    case errc::infeasible_internal: return "infeasible_internal";
    case errc::label_out_of_range: return "label_out_of_range";
    case errc::bad_format: return "bad_format";
    case errc::not_a_tree: return "not_a_tree";
    case errc::edges_share_vertex: return "edges_share_vertex";
    case errc::not_a_tree_after_switch: return "not_a_tree_after_switch";
    case errc::asymmetric_function: return "asymmetric_function";
    case errc::cap_exceeded: return "cap_exceeded";
    case errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Enumeration larger than the configured cap; carries the computed size.
class CapExceeded : public Error {
 public:
  CapExceeded(unsigned long long count, unsigned long long cap)
      : Error(errc::cap_exceeded, "enumeration of " + std::to_string(count) +
                                      " labeled trees exceeds cap " + std::to_string(cap)),
        count_(count),
        cap_(cap) {}

  unsigned long long count() const noexcept { return count_; }
  unsigned long long cap() const noexcept { return cap_; }

 private:
  unsigned long long count_;
  unsigned long long cap_;
};

}  // namespace sombor
