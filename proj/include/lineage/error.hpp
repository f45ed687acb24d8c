#pragma once

#include <stdexcept>
#include <string>

namespace lineage {

enum class ErrorKind {
  // digest
  FileTooSmall,
  InsufficientFeatures,
  IoFailure,
  EmptyDigest,
  MalformedDigestLine,
  // graph
  TooFewNodes,
  DuplicateNodeIdentity,
  MissingDescriptor,
  UnknownNode,
  IsolatedNode,
  ThresholdOutOfRange,
  MissingDatasetId,
  MissingSimInd,
  WrongStage,
  // stats
  SampleTooSmall,
  NonFiniteInput,
  POutOfRange,
  MissingPercentile,
  BadBinWidth,
  // blockmodel
  GraphTooSmall,
  BadBlockRange,
  PartitionGraphMismatch,
  // synth
  BadSpec,
  NodeSetMismatch,
  // pipeline / cli
  BadConfig,
  OutputExists,
};

const char* error_kind_name(ErrorKind kind);

/// Single exception type for the whole toolkit; `kind()` carries the
/// machine-readable error class that the CLI surfaces as JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace lineage
