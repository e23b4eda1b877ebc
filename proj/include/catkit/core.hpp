#ifndef CATKIT_CORE_HPP
#define CATKIT_CORE_HPP

#include <cstdlib>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace catkit {

enum class errc {
  malformed_input,
  not_composable,
  unknown_node,
  not_parallel,
  not_groupoidal,
  boundary_mismatch,
  not_an_adjunction,
  not_a_monad,
  invalid_input,
  size_limit_exceeded,
  usage_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed_input: return "MalformedInput";
    case errc::not_composable: return "NotComposable";
    case errc::unknown_node: return "UnknownNode";
    case errc::not_parallel: return "NotParallel";
    case errc::not_groupoidal: return "NotGroupoidal";
    case errc::boundary_mismatch: return "BoundaryMismatch";
    case errc::not_an_adjunction: return "NotAnAdjunction";
    case errc::not_a_monad: return "NotAMonad";
    case errc::invalid_input: return "InvalidInput";
    case errc::size_limit_exceeded: return "SizeLimitExceeded";
    case errc::usage_error: return "UsageError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
};

// Size guard for enumerative constructions.  CATKIT_BUDGET scales both caps.
struct Budget {
  int max_objects = 64;
  int max_morphisms = 4096;

  static Budget from_env() {
    Budget b;
    if (const char* s = std::getenv("CATKIT_BUDGET")) {
      long v = std::strtol(s, nullptr, 10);
      if (v > 0) b = scaled(static_cast<int>(v));
    }
    return b;
  }

  static Budget scaled(int base) {
    Budget b;
    b.max_objects = base;
    b.max_morphisms = base * 64;
    return b;
  }

  void check_objects(std::size_t n, const std::string& where) const {
    if (n > static_cast<std::size_t>(max_objects))
      throw Error(errc::size_limit_exceeded, where + ": " + std::to_string(n) + " objects exceed budget " +
                                                 std::to_string(max_objects));
  }
  void check_morphisms(std::size_t n, const std::string& where) const {
    if (n > static_cast<std::size_t>(max_morphisms))
      throw Error(errc::size_limit_exceeded, where + ": " + std::to_string(n) + " morphisms exceed budget " +
                                                 std::to_string(max_morphisms));
  }
};

using Id = std::string;

// Injective, deterministic tuple encoding used for ids of synthesized cells
// (descent pairs, pullback elements, comma objects).
inline std::string escape_id(const Id& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\' || c == ',' || c == '(' || c == ')') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline Id combine_ids(std::initializer_list<Id> parts) {
  std::string out = "(";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out.push_back(',');
    out += escape_id(p);
    first = false;
  }
  out.push_back(')');
  return out;
}

}  // namespace catkit

#endif
