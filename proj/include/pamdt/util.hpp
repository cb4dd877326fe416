#ifndef PAMDT_UTIL_HPP
#define PAMDT_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pamdt {

// 64-bit FNV-1a over raw bytes; used for content hashes in interchange
// metadata and run reports.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v);

// Error raised by the text-format parsers; carries a 1-based line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
};

// Worker count for the few parallel sections (per-degree Smith forms).
// Controlled by the PAMDT_THREADS environment variable; defaults to 1.
int thread_count();

}  // namespace pamdt

#endif
