#pragma once

#include <chrono>
#include <string>
#include <utility>

#include "finloc/error.hpp"
#include "finloc/harness.hpp"

namespace finloc::detail {

class Tally {
 public:
  Tally(std::string suite, std::string name) : start_(std::chrono::steady_clock::now()) {
    r_.suite = std::move(suite);
    r_.name = std::move(name);
  }

  void ok() { ++r_.cases; }

  void bad(Json instance) {
    ++r_.cases;
    ++r_.failures;
    r_.passed = false;
    if (!r_.counterexample) r_.counterexample = std::move(instance);
  }

  template <class MakeInstance>
  void check(bool cond, MakeInstance&& instance) {
    if (cond) {
      ok();
    } else {
      bad(instance());
    }
  }

  void note(const std::string& s) {
    if (!r_.note.empty()) r_.note += "; ";
    r_.note += s;
  }

  std::uint64_t cases() const noexcept { return r_.cases; }

  /// Fails the property when fewer than `required` cases were checked.
  PropertyResult done(std::uint64_t required = 0) {
    if (r_.cases < required) {
      r_.passed = false;
      note("only " + std::to_string(r_.cases) + " of " + std::to_string(required) +
           " required cases were nonvacuous");
    }
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(r_);
  }

 private:
  PropertyResult r_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace finloc::detail
