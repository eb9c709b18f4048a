#pragma once

#include <stdexcept>
#include <string>

namespace topoinf {

// Error categories surfaced through the CLI exit codes and tested per kind.
enum class errc {
  self_loop,
  vertex_out_of_range,
  zero_weight,
  empty_graph,
  invalid_argument,
  infeasible,
  disconnected,
  degree_too_low,
  weighted_input,
  budget_exceeded,
  stuck_walker,
  no_convergence,
  identity_degenerate,
  inconsistency,
  degenerate_data,
  unreliable,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::self_loop: return "self_loop";
    case errc::vertex_out_of_range: return "vertex_out_of_range";
    case errc::zero_weight: return "zero_weight";
    case errc::empty_graph: return "empty_graph";
    case errc::invalid_argument: return "invalid_argument";
    case errc::infeasible: return "infeasible";
    case errc::disconnected: return "disconnected";
    case errc::degree_too_low: return "degree_too_low";
    case errc::weighted_input: return "weighted_input";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::stuck_walker: return "stuck_walker";
    case errc::no_convergence: return "no_convergence";
    case errc::identity_degenerate: return "identity_degenerate";
    case errc::inconsistency: return "inconsistency";
    case errc::degenerate_data: return "degenerate_data";
    case errc::unreliable: return "unreliable";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace topoinf
