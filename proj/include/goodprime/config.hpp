#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "goodprime/errors.hpp"

namespace goodprime {

/// Resource caps. Exceeding one raises a budget error rather than running on.
struct Budgets {
  std::size_t group = 60000;     // elements of W
  std::size_t syzygy = 20000;    // dimension of a syzygy module
  std::size_t rows = 2000000;    // rows of a [J(n)] matrix

  /// Defaults overridden by GOODPRIME_BUDGET_{GROUP,SYZYGY,ROWS}.
  static Budgets from_environment() {
    Budgets b;
    read_env("GOODPRIME_BUDGET_GROUP", b.group);
    read_env("GOODPRIME_BUDGET_SYZYGY", b.syzygy);
    read_env("GOODPRIME_BUDGET_ROWS", b.rows);
    return b;
  }

 private:
  static void read_env(const char* name, std::size_t& slot) {
    const char* v = std::getenv(name);
    if (!v || !*v) return;
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v, &end, 10);
    if (*end != '\0' || x == 0) fail(ErrorCode::InvalidArgument, std::string(name) + " must be a positive integer");
    slot = static_cast<std::size_t>(x);
  }
};

}  // namespace goodprime
