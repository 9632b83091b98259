#include "primetree/primes.hpp"

#include "primetree/error.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace primetree {

namespace {

// Largest prime usable as a label. Indices of bigger primes would need a
// prime-counting routine rather than a table.
constexpr std::uint64_t kMaxTablePrime = 100'000'000;

class PrimeTable {
public:
    std::uint64_t at(std::uint32_t index) {
        {
            std::shared_lock lock(mutex_);
            if (index < primes_.size()) return primes_[index];
        }
        std::unique_lock lock(mutex_);
        while (index >= primes_.size()) {
            if (limit_ >= kMaxTablePrime)
                throw Error(ErrorKind::SizeOverBudget, "prime index " + std::to_string(index) + " is beyond the prime table");
            grow(std::min<std::uint64_t>(limit_ * 2, kMaxTablePrime));
        }
        return primes_[index];
    }

    std::optional<std::uint32_t> index_of(std::uint64_t p) {
        if (p > kMaxTablePrime) {
            if (is_prime(p))
                throw Error(ErrorKind::SizeOverBudget, "prime " + std::to_string(p) + " is beyond the prime table");
            return std::nullopt;
        }
        {
            std::shared_lock lock(mutex_);
            if (p <= limit_) return lookup(p);
        }
        std::unique_lock lock(mutex_);
        if (p > limit_) grow(std::min<std::uint64_t>(std::max(limit_ * 2, p), kMaxTablePrime));
        return lookup(p);
    }

    std::uint32_t pi(std::uint64_t n) {
        if (n > kMaxTablePrime)
            throw Error(ErrorKind::SizeOverBudget, "prime count above " + std::to_string(kMaxTablePrime));
        index_of(n);
        std::shared_lock lock(mutex_);
        return static_cast<std::uint32_t>(std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
    }

private:
    std::optional<std::uint32_t> lookup(std::uint64_t p) const {
        auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
        if (it == primes_.end() || *it != p) return std::nullopt;
        return static_cast<std::uint32_t>(it - primes_.begin());
    }

    // Caller holds the unique lock.
    void grow(std::uint64_t limit) {
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> primes;
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            primes.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
        }
        primes_ = std::move(primes);
        limit_ = limit;
    }

    std::shared_mutex mutex_;
    std::vector<std::uint32_t> primes_{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    std::uint64_t limit_ = 100;
};

PrimeTable& table() {
    static PrimeTable t;
    return t;
}

}  // namespace

std::uint64_t prime_at(std::uint32_t index) { return table().at(index); }

std::optional<std::uint32_t> prime_index_of(std::uint64_t p) { return table().index_of(p); }

std::uint32_t prime_pi(std::uint64_t n) { return table().pi(n); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

}  // namespace primetree
