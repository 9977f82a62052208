#include "latmod/parallel.hpp"

#include <cstdlib>
#include <string>

namespace latmod {

std::size_t default_jobs() {
  const char* env = std::getenv("LATMOD_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const long value = std::stol(env);
    return value > 0 ? static_cast<std::size_t>(value) : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace latmod
