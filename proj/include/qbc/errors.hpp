#pragma once

#include <stdexcept>
#include <string>

namespace qbc {

// Authentication-key counter ran past 2^m; no further key material can be derived.
class KeyExhaustionError : public std::runtime_error {
 public:
  explicit KeyExhaustionError(const std::string& what) : std::runtime_error(what) {}
};

// A published announcement is inconsistent with any honest protocol execution.
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qbc
