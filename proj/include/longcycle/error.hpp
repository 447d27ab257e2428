#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace longcycle {

enum class Errc {
  empty_graph,
  invalid_vertex,
  self_loop,
  duplicate_edge,
  repeated_vertex,
  missing_edge,
  too_short,
  too_small,
  same_vertex,
  not_two_connected,
  too_few_vertices,
  bad_params,
  non_canonical_params,
  not_hamiltonian,
  not_alternating,
  too_large,
  mindeg_zero,
  unknown_name,
  parse_error,
};

const char* errc_name(Errc code);

/// Domain error. `position` is set where the contract names an offending
/// position (1-indexed into the input sequence or file line).
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message,
        std::optional<int> position = std::nullopt)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        position_(position) {}

  Errc code() const { return code_; }
  std::optional<int> position() const { return position_; }

private:
  Errc code_;
  std::optional<int> position_;
};

}  // namespace longcycle
