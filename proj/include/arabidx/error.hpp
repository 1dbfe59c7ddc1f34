#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arabidx {

// Failure categories. Values double as CLI exit statuses.
enum class ErrorKind : int {
  config = 2,
  input = 3,
  empty_result = 4,
  duplicate = 5,
  conflict = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

// Invalid UTF-8. offset is the byte position of the offending sequence.
class DecodeError : public InputError {
 public:
  explicit DecodeError(std::size_t offset)
      : InputError("invalid UTF-8 sequence at byte offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A persisted file could not be parsed; offset is a byte position when known.
class LoadError : public InputError {
 public:
  LoadError(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class IdentityError : public InputError {
 public:
  IdentityError(const std::string& expected, const std::string& actual)
      : InputError("document id mismatch: expected '" + expected + "', got '" + actual + "'") {}
};

class IncompatibleProfileError : public ConfigError {
 public:
  IncompatibleProfileError(int lhs_n, int rhs_n)
      : ConfigError("incompatible profiles: n=" + std::to_string(lhs_n) +
                    " vs n=" + std::to_string(rhs_n)) {}
};

class UndefinedSimilarityError : public InputError {
 public:
  UndefinedSimilarityError() : InputError("dice similarity undefined for two empty profiles") {}
};

class NoModelError : public InputError {
 public:
  NoModelError() : InputError("no class models available for classification") {}
};

class UnsupportedVariantError : public ConfigError {
 public:
  explicit UnsupportedVariantError(const std::string& what) : ConfigError(what) {}
};

class EmptyIndexError : public Error {
 public:
  explicit EmptyIndexError(const std::string& what) : Error(ErrorKind::empty_result, what) {}
};

class EmptyAggregateError : public Error {
 public:
  EmptyAggregateError() : Error(ErrorKind::empty_result, "cannot aggregate zero reports") {}
};

class DuplicateDocumentError : public Error {
 public:
  DuplicateDocumentError(const std::string& doc_id, const std::string& existing_id)
      : Error(ErrorKind::duplicate,
              doc_id == existing_id
                  ? "document '" + doc_id + "' is already indexed"
                  : "document '" + doc_id + "' duplicates the content of '" + existing_id + "'"),
        doc_id_(doc_id),
        existing_id_(existing_id) {}

  const std::string& doc_id() const noexcept { return doc_id_; }
  const std::string& existing_id() const noexcept { return existing_id_; }

 private:
  std::string doc_id_;
  std::string existing_id_;
};

class StoreConflictError : public Error {
 public:
  explicit StoreConflictError(const std::string& label)
      : Error(ErrorKind::conflict, "class '" + label + "' already exists in the profile store") {}
};

}  // namespace arabidx
