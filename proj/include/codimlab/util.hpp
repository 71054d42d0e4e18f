#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

namespace codimlab {

// Deterministic splitmix64 stream; used by the property-style tests and by
// anything that needs reproducible pseudo-randomness.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

std::uint64_t fnv1a64(const std::string& data);

// "p/q" (or just "p" when q == 1), canonical form.
std::string rational_to_string(const mpq_class& value);
mpq_class rational_from_string(const std::string& text);

// Parses decimal literals like "2.5" or "1e-4" into an exact rational.
mpq_class rational_from_decimal(const std::string& text);

std::string csv_quote(const std::string& field);

// Runs fn(i) for i in [begin, end) on up to `threads` workers. Falls back to a
// plain loop when threads <= 1 or the range is small.
void parallel_for(std::size_t begin, std::size_t end, int threads,
                  const std::function<void(std::size_t)>& fn);

int hardware_threads_default();

} // namespace codimlab
