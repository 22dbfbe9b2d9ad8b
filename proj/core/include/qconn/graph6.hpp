#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qconn/graph.hpp"

namespace qconn {

inline constexpr int kGraph6MaxOrder = 258047;

/// Malformed graph6 input. offset() is the 0-based byte position of the fault.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 line. A trailing newline and an optional ">>graph6<<"
/// header are accepted.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding without a trailing newline.
std::string write_graph6(const Graph& g);

}  // namespace qconn
