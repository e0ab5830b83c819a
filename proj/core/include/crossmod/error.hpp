#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossmod {

// Elements of a finite group are dense indices 0..order-1.
using Elem = std::uint32_t;

enum class Errc {
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotABijection,
  ClosureTooLarge,
  NotAHomomorphism,
  NotNormal,
  NotAbelian,
  NotAutomorphism,
  HomCheckFailed,
  HypothesisFailed,
  SearchSpaceTooLarge,
  RestrictionEscapesKernel,
  ComponentNotNormal,
  TruncationTooShallow,
  ClosedFormMismatch,
  RoundTripFailed,
  ParseError,
  UnknownEntry,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail, std::vector<Elem> witness = {});

  Errc code() const noexcept { return code_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<Elem> witness_;
};

}  // namespace crossmod
