#pragma once

// Text formats for instances and certificates.
//
// Instance file, one directive per line, `#` starts a comment:
//   grid R C
//   remove_vertex (r,c)
//   remove_edge (r,c) (r,c)
//   contract (r,c) (r,c)          merge the first vertex's node into the second's
//   forbid_edge (r,c) (r,c)
//   demand pair (r,c) (r,c)
//   demand escape (r,c) -> {(r,c), ...} [group N]
// `grid` comes first; the other directives apply in order.
//
// Certificate file: `path K: (r,c) (r,c) ...` for K = 0, 1, ... in demand
// order, or the single line `infeasible`.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gridlink/routing.hpp"

namespace gridlink {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& inst);

// std::nullopt stands for an `infeasible` certificate.
std::optional<PathSystem> parse_certificate(std::string_view text);
std::string write_certificate(const std::optional<PathSystem>& cert);

}  // namespace gridlink
