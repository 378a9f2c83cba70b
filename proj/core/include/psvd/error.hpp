// Copyright 2026 The psvd Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PSVD_ERROR_HPP
#define PSVD_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psvd {

enum class errc {
  invalid_input,
  invalid_rank,
  invalid_config,
  degenerate_allocation,
  infeasible_rate,
  decode_error,
  io_error,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

// Raised when an archive byte stream fails validation. Carries the byte
// offset at which the problem was detected.
class DecodeError : public Error {
public:
  DecodeError(std::size_t offset, const std::string& what)
      : Error(errc::decode_error, what + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace psvd

#endif
