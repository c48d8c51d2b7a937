#pragma once

#include <exception>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>

namespace ramsey::detail {

// Deeply nested lazy streams (chains of chains at higher arities) recurse
// through every layer on a cache miss, which can exceed the default thread
// stack. Entry points run on a dedicated worker thread with a large stack;
// nested calls stay on it.
bool on_big_stack();
void run_on_big_stack(const std::function<void()>& body);

template <typename Fn>
auto with_big_stack(Fn&& fn) -> std::invoke_result_t<Fn&> {
  using R = std::invoke_result_t<Fn&>;
  if (on_big_stack()) return fn();
  if constexpr (std::is_void_v<R>) {
    run_on_big_stack([&] { fn(); });
  } else {
    std::optional<R> result;
    run_on_big_stack([&] { result.emplace(fn()); });
    return std::move(*result);
  }
}

}  // namespace ramsey::detail
