#include "pamdt/util.hpp"

#include <cstdio>
#include <cstdlib>

namespace pamdt {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

int thread_count() {
  const char* env = std::getenv("PAMDT_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n > 0 ? n : 1;
}

}  // namespace pamdt
