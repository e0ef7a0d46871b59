#ifndef WRED_RATIONAL_HPP
#define WRED_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace wred {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Error taxonomy mirrored by the CLI exit codes: parse_error -> 2,
/// math_error -> 3, resource_error -> 4.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Serialize exactly, always as "num/den" for non-integers, plain "num" otherwise.
inline std::string rat_str(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Accepts "3", "-3", "3/4", "-3/4".
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw parse_error("bad rational literal '" + s + "'");
  }
}

inline Int rat_floor(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

using QVec = std::vector<Rat>;

inline std::vector<std::string> qvec_str(const QVec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(rat_str(x));
  return out;
}

}  // namespace wred

#endif
