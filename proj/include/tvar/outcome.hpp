#pragma once

#include <optional>
#include <string>
#include <utility>

namespace tvar {

// Value-or-diagnostic result for operations whose failure is a verdict
// (not-Cartier, not-Gorenstein, ...) rather than a programming error.
template <class T>
struct Outcome {
  std::optional<T> value;
  std::string error;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }

  static Outcome success(T v) { return {std::move(v), {}}; }
  static Outcome fail(std::string e) { return {std::nullopt, std::move(e)}; }
};

}  // namespace tvar
