#include "ramsey/big_stack.hpp"

#include <pthread.h>

#include <stdexcept>

namespace ramsey::detail {

namespace {

thread_local bool g_on_big_stack = false;

constexpr std::size_t kStackBytes = std::size_t(512) << 20;  // virtual, commits lazily

struct Trampoline {
  const std::function<void()>* body;
  std::exception_ptr error;
};

void* trampoline(void* raw) {
  auto* t = static_cast<Trampoline*>(raw);
  g_on_big_stack = true;
  try {
    (*t->body)();
  } catch (...) {
    t->error = std::current_exception();
  }
  return nullptr;
}

}  // namespace

bool on_big_stack() { return g_on_big_stack; }

void run_on_big_stack(const std::function<void()>& body) {
  pthread_attr_t attr;
  if (pthread_attr_init(&attr) != 0)
    throw std::runtime_error("pthread_attr_init failed");
  pthread_attr_setstacksize(&attr, kStackBytes);
  Trampoline t{&body, nullptr};
  pthread_t thread;
  if (pthread_create(&thread, &attr, trampoline, &t) != 0) {
    pthread_attr_destroy(&attr);
    throw std::runtime_error("cannot start the worker thread");
  }
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  if (t.error) std::rethrow_exception(t.error);
}

}  // namespace ramsey::detail
