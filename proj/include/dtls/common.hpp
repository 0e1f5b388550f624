#ifndef DTLS_COMMON_HPP
#define DTLS_COMMON_HPP

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace dtls {

/// Binary class label. Blue is the canonical first class: tie-breaks in
/// majority relabeling and first-seen label mapping both resolve to blue.
enum class Label : uint8_t { Blue = 0, Red = 1 };

inline const char* label_name(Label l) { return l == Label::Blue ? "blue" : "red"; }
inline Label other(Label l) { return l == Label::Blue ? Label::Red : Label::Blue; }

using NodeId = int32_t;
constexpr NodeId kNoNode = -1;

/// Sentinel threshold that compares below every finite value; serialized
/// as the token "-inf".
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

enum class Errc {
  Parse,        // malformed input file
  Schema,       // structurally invalid document
  Validation,   // inputs violate a contract
  Unsupported,  // recognized but unsupported construct
  InvalidEdit,  // edit script cannot be applied
  Capacity,     // enumeration size exceeds the configured cap
  Timeout,      // deadline exceeded
  Mismatch,     // verification failed
  Internal,     // broken invariant inside a solver
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

/// Optional wall-clock deadline checked inside long-running solvers.
struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;

  static Deadline none() { return {}; }
  static Deadline after_seconds(double s) {
    Deadline d;
    d.at = std::chrono::steady_clock::now() +
           std::chrono::microseconds(static_cast<int64_t>(s * 1e6));
    return d;
  }
  bool expired() const {
    return at.has_value() && std::chrono::steady_clock::now() > *at;
  }
  void check() const {
    if (expired()) throw Error(Errc::Timeout, "time limit exceeded");
  }
};

}  // namespace dtls

#endif
