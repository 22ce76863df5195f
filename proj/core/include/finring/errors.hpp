#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace finring {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ring axioms that the table validator can report as violated.
enum class RingAxiom {
  entry_range,
  additive_identity,
  additive_commutativity,
  additive_inverse,
  additive_associativity,
  multiplicative_identity,
  multiplicative_associativity,
  left_distributivity,
  right_distributivity,
  zero_one_distinct,
};

std::string to_string(RingAxiom axiom);

/// A concrete witness for a failed ring axiom.  Unused slots of the
/// triple are set to the ring order (an invalid index).
struct AxiomWitness {
  RingAxiom axiom;
  std::array<std::size_t, 3> triple;
  std::string detail;
};

class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(AxiomWitness w);
  const AxiomWitness& witness() const { return witness_; }

 private:
  AxiomWitness witness_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ElementOutOfRange : public Error {
 public:
  using Error::Error;
};

class SizeExceeded : public Error {
 public:
  using Error::Error;
};

class NotCentral : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotAGroupRing : public Error {
 public:
  using Error::Error;
};

class GroupAxiomViolation : public Error {
 public:
  using Error::Error;
};

class UnknownGroup : public Error {
 public:
  using Error::Error;
};

class EmptyCatalog : public Error {
 public:
  using Error::Error;
};

/// Thrown when an internally computed structure fails its own sanity
/// check (e.g. the Jacobson radical set is not a two-sided ideal).
/// Indicates a bug or a deliberately corrupted table.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Parse failure for the construction DSL: byte offset into the input
/// and the set of tokens that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& found);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace finring
