#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mop/graph.hpp"

namespace mop {

class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// Standard graph6 encoding (no ">>graph6<<" header, no trailing newline).
std::string graph6_encode(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing whitespace.
/// Throws ParseError with the offending byte offset.
Graph graph6_decode(std::string_view text);

}  // namespace mop
