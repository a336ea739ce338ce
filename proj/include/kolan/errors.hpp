#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kolan {

// Error families map onto the CLI exit-code contract:
//   Validation -> 1, Io -> 2, Provider -> 3.
enum class ErrorKind { Validation = 1, Io = 2, Provider = 3 };

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    int exit_code() const { return static_cast<int>(kind_); }

  private:
    ErrorKind kind_;
};

class ParseError : public Error {
  public:
    ParseError(std::size_t row, std::size_t column, const std::string& cause)
        : Error(ErrorKind::Validation,
                "parse error at row " + std::to_string(row) + ", column " +
                    std::to_string(column) + ": " + cause),
          row_(row), column_(column) {}
    std::size_t row() const { return row_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t row_;
    std::size_t column_;
};

class ValidationError : public Error {
  public:
    ValidationError(const std::string& entity_id, const std::string& invariant)
        : Error(ErrorKind::Validation,
                entity_id.empty() ? invariant : entity_id + ": " + invariant),
          entity_id_(entity_id) {}
    const std::string& entity_id() const { return entity_id_; }

  private:
    std::string entity_id_;
};

class DanglingReference : public Error {
  public:
    explicit DanglingReference(const std::string& kol_id)
        : Error(ErrorKind::Validation, "corpus references unknown kol_id \"" + kol_id + "\""),
          kol_id_(kol_id) {}
    const std::string& kol_id() const { return kol_id_; }

  private:
    std::string kol_id_;
};

class BelowNano : public Error {
  public:
    explicit BelowNano(long long count)
        : Error(ErrorKind::Validation,
                "follower count " + std::to_string(count) + " is below the Nano band (>= 1000)") {}
};

class ZeroBaseline : public Error {
  public:
    explicit ZeroBaseline(const std::string& what)
        : Error(ErrorKind::Validation, "non-positive baseline: " + what) {}
};

class ZeroVariance : public Error {
  public:
    explicit ZeroVariance(const std::string& column)
        : Error(ErrorKind::Validation, "column \"" + column + "\" has zero variance"),
          column_(column) {}
    const std::string& column() const { return column_; }

  private:
    std::string column_;
};

class NotSymmetric : public Error {
  public:
    NotSymmetric() : Error(ErrorKind::Validation, "matrix is not symmetric") {}
};

class NoConvergence : public Error {
  public:
    explicit NoConvergence(int sweeps)
        : Error(ErrorKind::Validation,
                "eigensolver did not converge within " + std::to_string(sweeps) + " sweeps") {}
};

class KTooLarge : public Error {
  public:
    KTooLarge(std::size_t k, std::size_t n)
        : Error(ErrorKind::Validation, "k=" + std::to_string(k) + " exceeds the number of points " +
                                           std::to_string(n)) {}
};

class StageError : public Error {
  public:
    explicit StageError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

class BadCategory : public Error {
  public:
    explicit BadCategory(const std::string& name)
        : Error(ErrorKind::Validation, "unknown sentiment category \"" + name + "\""), name_(name) {}
    const std::string& name() const { return name_; }

  private:
    std::string name_;
};

class MissingStoplist : public Error {
  public:
    explicit MissingStoplist(const std::string& path)
        : Error(ErrorKind::Io, "stopword list not readable: " + path) {}
};

class IoError : public Error {
  public:
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

class CacheIOError : public Error {
  public:
    explicit CacheIOError(const std::string& what)
        : Error(ErrorKind::Io, "translation cache: " + what) {}
};

class ProviderUnavailable : public Error {
  public:
    explicit ProviderUnavailable(const std::string& what)
        : Error(ErrorKind::Provider, "translation provider unavailable: " + what) {}
};

}  // namespace kolan
