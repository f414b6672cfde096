// Tree degree sequences and their internal-degree subsequences.
//
// A sequence of positive integers is realizable by a tree on n >= 2 vertices
// iff it sums to 2(n-1). The lone vertex is the special sequence [0].
#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sombor/error.hpp"

namespace sombor {

namespace detail {

// Accepts whitespace- or comma-separated integers, optionally bracketed.
inline std::vector<int> parse_int_list(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',' || c == '[' || c == ']' || c == '(' || c == ')') c = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error(errc::bad_format, "not an integer: '" + token + "'");
    }
    if (used != token.size())
      throw Error(errc::bad_format, "not an integer: '" + token + "'");
    values.push_back(v);
  }
  return values;
}

inline std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace detail

// Validated degree sequence of a tree, stored sorted non-increasing.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw Error(errc::empty_input, "degree sequence is empty");
    if (degrees_.size() == 1) {
      if (degrees_[0] < 0)
        throw Error(errc::non_positive_entry, "degree must be non-negative");
      if (degrees_[0] != 0)
        throw Error(errc::not_realizable, "a single vertex has degree 0");
    } else {
      long long sum = 0;
      for (int d : degrees_) {
        if (d < 1)
          throw Error(errc::non_positive_entry,
                      "degree " + std::to_string(d) + " is not positive");
        sum += d;
      }
      const long long expected = 2LL * (static_cast<long long>(degrees_.size()) - 1);
      if (sum != expected)
        throw Error(errc::not_realizable, "degree sum " + std::to_string(sum) +
                                              " != 2(n-1) = " + std::to_string(expected));
    }
    std::sort(degrees_.begin(), degrees_.end(), std::greater<int>());
  }

  static DegreeSequence parse(const std::string& text) {
    return DegreeSequence(detail::parse_int_list(text));
  }

  int vertex_count() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }

  // Canonical serialization: space-separated, non-increasing, no brackets.
  std::string str() const { return detail::join_ints(degrees_); }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

// The entries of a degree sequence that exceed one, sorted non-increasing.
// May be empty (single edge or single vertex).
class InternalDegreeSequence {
 public:
  InternalDegreeSequence() = default;

  explicit InternalDegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    for (int d : degrees_) {
      if (d < 2)
        throw Error(errc::internal_entry_too_small,
                    "internal degree " + std::to_string(d) + " is below 2");
    }
    std::sort(degrees_.begin(), degrees_.end(), std::greater<int>());
  }

  static InternalDegreeSequence parse(const std::string& text) {
    return InternalDegreeSequence(detail::parse_int_list(text));
  }

  int size() const { return static_cast<int>(degrees_.size()); }
  bool empty() const { return degrees_.empty(); }
  const std::vector<int>& degrees() const { return degrees_; }
  std::string str() const { return detail::join_ints(degrees_); }

  friend bool operator==(const InternalDegreeSequence&, const InternalDegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

inline DegreeSequence parse_degree_sequence(const std::string& text) {
  return DegreeSequence::parse(text);
}

inline InternalDegreeSequence internal_degrees(const DegreeSequence& d) {
  std::vector<int> internal;
  for (int deg : d.degrees())
    if (deg > 1) internal.push_back(deg);
  return InternalDegreeSequence(std::move(internal));
}

// Appends the number of leaves forced by the handshake identity. The empty
// internal sequence completes to the single edge [1,1].
inline DegreeSequence complete_internal(const InternalDegreeSequence& internal) {
  const long long m = internal.size();
  const long long sum = std::accumulate(internal.degrees().begin(), internal.degrees().end(), 0LL);
  const long long leaves = sum - 2 * m + 2;
  if (leaves < 0)
    throw Error(errc::infeasible_internal,
                "internal sequence needs " + std::to_string(leaves) + " leaves");
  std::vector<int> degrees = internal.degrees();
  degrees.insert(degrees.end(), static_cast<std::size_t>(leaves), 1);
  return DegreeSequence(std::move(degrees));
}

}  // namespace sombor
