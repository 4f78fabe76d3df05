#pragma once

#include <stdexcept>
#include <string>

namespace bbadapt {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Caller violated a precondition (bad shape, bad range, bad config).
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// Input is structurally fine but numerically unusable (e.g. zero norm).
class DegenerateInput : public Error {
 public:
  explicit DegenerateInput(const std::string& what) : Error(what) {}
};

/// Synthetic benchmark generation could not satisfy its constraints.
class GenerationError : public Error {
 public:
  explicit GenerationError(const std::string& what) : Error(what) {}
};

/// Optimization diverged or otherwise cannot continue.
class TrainingError : public Error {
 public:
  explicit TrainingError(const std::string& what) : Error(what) {}
};

/// Network-level failure talking to a remote predictor.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int attempts)
      : Error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

/// The remote side answered, but not with a valid protocol response.
class ProtocolError : public Error {
 public:
  explicit ProtocolError(const std::string& what) : Error(what) {}
};

/// Prediction-cache misuse (overwrite of a filled entry, read before fill).
class CacheError : public Error {
 public:
  explicit CacheError(const std::string& what) : Error(what) {}
};

/// File I/O or parse failure.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace bbadapt
