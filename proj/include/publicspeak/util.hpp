// util.hpp: small shared helpers (strings, time parsing, portable rng, parallel loop).
#ifndef PUBLICSPEAK_UTIL_HPP
#define PUBLICSPEAK_UTIL_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace publicspeak {

std::string to_lower(std::string s);
std::string trim(const std::string& s);

// Whitespace-token count after trimming; "" -> 0.
int word_count(const std::string& text);

// ISO-8601 "YYYY-MM-DD[THH:MM[:SS]][Z|+hh:mm|-hh:mm]" -> seconds since the
// Unix epoch (UTC). Throws ParseError on anything else.
std::int64_t parse_iso8601(const std::string& s);

// splitmix64-based generator. Deterministic across platforms, unlike the
// standard distributions, which the synthetic corpus relies on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double real01();                       // [0, 1)
  int uniform_int(int lo, int hi);       // inclusive bounds
  bool bernoulli(double p);
  std::size_t index(std::size_t n);      // [0, n)
  Rng fork(std::uint64_t salt) const;    // independent stream

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[index(v.size())];
  }

 private:
  std::uint64_t state_;
};

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Callers index into
// preallocated output slots, so results are placement-deterministic.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace publicspeak

#endif
