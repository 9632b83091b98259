#pragma once

#include <coroutine>
#include <exception>
#include <iterator>
#include <optional>
#include <utility>

namespace primetree {

// Single-pass, single-consumer coroutine sequence.
template <class T>
class Lazy {
public:
    struct promise_type {
        std::optional<T> current;
        std::exception_ptr error;

        Lazy get_return_object() { return Lazy{std::coroutine_handle<promise_type>::from_promise(*this)}; }
        std::suspend_always initial_suspend() noexcept { return {}; }
        std::suspend_always final_suspend() noexcept { return {}; }
        std::suspend_always yield_value(T value) {
            current = std::move(value);
            return {};
        }
        void return_void() noexcept {}
        void unhandled_exception() noexcept { error = std::current_exception(); }
    };

    using handle_type = std::coroutine_handle<promise_type>;

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = T;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(handle_type h) : h_(h) { advance(); }

        const T& operator*() const { return *h_.promise().current; }
        const T* operator->() const { return &*h_.promise().current; }
        iterator& operator++() {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.h_ || it.h_.done(); }

    private:
        void advance() {
            h_.promise().current.reset();
            h_.resume();
            if (h_.promise().error) std::rethrow_exception(h_.promise().error);
        }

        handle_type h_{};
    };

    Lazy(Lazy&& other) noexcept : h_(std::exchange(other.h_, {})) {}
    Lazy& operator=(Lazy&& other) noexcept {
        if (this != &other) {
            if (h_) h_.destroy();
            h_ = std::exchange(other.h_, {});
        }
        return *this;
    }
    Lazy(const Lazy&) = delete;
    Lazy& operator=(const Lazy&) = delete;
    ~Lazy() {
        if (h_) h_.destroy();
    }

    iterator begin() { return iterator{h_}; }
    std::default_sentinel_t end() const noexcept { return {}; }

    // Pull interface: the next element, or nullopt once exhausted.
    std::optional<T> next() {
        if (!h_ || h_.done()) return std::nullopt;
        h_.promise().current.reset();
        h_.resume();
        if (h_.promise().error) std::rethrow_exception(h_.promise().error);
        if (h_.done()) return std::nullopt;
        return std::move(h_.promise().current);
    }

private:
    explicit Lazy(handle_type h) : h_(h) {}

    handle_type h_;
};

}  // namespace primetree
