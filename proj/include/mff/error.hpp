// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mff {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  parse,
  io,
  degenerate,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed PGM stream; offset is the byte position where decoding stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::parse, "byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace mff
