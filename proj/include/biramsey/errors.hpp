#ifndef BIRAMSEY_ERRORS_HPP
#define BIRAMSEY_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace biramsey {

/// Refusal to start a computation whose host exceeds the desk-scale limits.
/// Every entry point that raises this offers an explicit override flag.
class ScaleGuardError : public std::runtime_error {
 public:
  explicit ScaleGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed witness file or assignment input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Why a red graph is not a good coloring: an explicit complete bipartite
/// subgraph in the offending color, named by its row and column indices.
struct Rejection {
  enum class Kind { red_k22, blue_k33 };
  Kind kind;
  std::vector<int> rows;  // 0-based
  std::vector<int> cols;  // 0-based

  std::string describe() const {
    std::string s = kind == Kind::red_k22 ? "red K_{2,2} at rows {" : "blue K_{3,3} at rows {";
    for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? "," : "") + std::to_string(rows[i]);
    s += "} columns {";
    for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? "," : "") + std::to_string(cols[i]);
    s += "}";
    return s;
  }
};

/// Thrown when a claimed good coloring fails verification. Carries the
/// certificate so callers can report the exact violating subgraph.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(Rejection r)
      : std::runtime_error(r.describe()), rejection_(std::move(r)) {}

  const Rejection& rejection() const { return rejection_; }

 private:
  Rejection rejection_;
};

/// A satisfying assignment decoded to a graph that fails verification.
/// This cannot happen unless the encoder emitted a wrong clause set.
class EncoderIntegrityError : public std::runtime_error {
 public:
  explicit EncoderIntegrityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace biramsey

#endif
