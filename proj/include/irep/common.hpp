// Copyright 2026 the irep authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace irep {

/// A signal is a real vector of fixed dimension.  All library entry points
/// treat signals as immutable values.
using Signal = std::vector<double>;

inline double plain_dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Sums a buffer after sorting it ascending.  The result depends only on the
/// multiset of values, not on their order, which makes averages of
/// group-permuted data bitwise reproducible.
inline double stable_sum(std::vector<double>& buf) {
  std::sort(buf.begin(), buf.end());
  double s = 0.0;
  for (double v : buf) s += v;
  return s;
}

/// Inner product whose rounding is invariant under simultaneous permutation
/// of both operands: the elementwise products are sorted before summation,
/// so <gI, ht> and <I, g^-1 h t> evaluate to the same double.
inline double canonical_dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  thread_local std::vector<double> buf;
  buf.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) buf[i] = a[i] * b[i];
  return stable_sum(buf);
}

/// Selects how projection inner products are accumulated.  `canonical` is the
/// default and is required wherever exact invariance under the group action
/// is asserted; `plain` is faster and used by bulk benchmarks.
enum class DotMode { canonical, plain };

inline double dot(std::span<const double> a, std::span<const double> b, DotMode mode) {
  return mode == DotMode::canonical ? canonical_dot(a, b) : plain_dot(a, b);
}

inline double norm(const Signal& s) {
  double q = 0.0;
  for (double v : s) q += v * v;
  return std::sqrt(q);
}

/// Returns s scaled to unit Euclidean norm.  Throws on (near-)zero input.
inline Signal normalized(const Signal& s) {
  double n = norm(s);
  if (!(n > 0.0)) throw std::invalid_argument("normalized: zero-norm signal");
  Signal out(s);
  for (double& v : out) v /= n;
  return out;
}

/// Rounds to `digits` significant decimal digits (used when serializing
/// report values).
inline double round_sig(double x, int digits = 12) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Derives an independent named seed stream from a base seed.  Streams with
/// distinct tags or indices are decorrelated, so trial loops can run in
/// parallel without changing results.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t index = 0) {
  return splitmix64(splitmix64(base ^ fnv1a64(tag)) + index);
}

/// Deterministic random source: a fully specified engine plus explicit
/// Box-Muller Gaussians, so sampled values do not depend on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  /// Uniform integer in [0, bound), rejection-sampled to avoid modulo bias.
  std::uint64_t integer(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::integer: zero bound");
    const std::uint64_t q = UINT64_MAX / bound;
    const std::uint64_t limit = q * bound;
    std::uint64_t x = eng_();
    while (x >= limit) x = eng_();
    return x % bound;
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline Signal random_unit_signal(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("random_unit_signal: dim must be >= 1");
  Signal s(static_cast<std::size_t>(dim));
  for (;;) {
    for (double& v : s) v = rng.gaussian();
    if (norm(s) > 1e-12) break;
  }
  return normalized(s);
}

/// Worker-thread cap: IREP_THREADS when set, hardware concurrency otherwise.
inline unsigned thread_budget() {
  static const unsigned cached = [] {
    if (const char* env = std::getenv("IREP_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 1024));
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }();
  return cached;
}

/// Runs fn(chunk_index, begin, end) over [0, count) split into fixed-size
/// chunks.  Chunk boundaries depend only on count and chunk_size, never on
/// the thread budget, so per-chunk partial results can be combined in chunk
/// order to give answers independent of parallelism.
template <typename Fn>
void parallel_chunks(std::size_t count, std::size_t chunk_size, Fn&& fn) {
  if (count == 0) return;
  chunk_size = std::max<std::size_t>(1, chunk_size);
  const std::size_t n_chunks = (count + chunk_size - 1) / chunk_size;
  const std::size_t workers = std::min<std::size_t>(std::min<std::size_t>(thread_budget(), n_chunks), 64);
  auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = c * chunk_size;
    const std::size_t end = std::min(count, begin + chunk_size);
    fn(c, begin, end);
  };
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks || failed.load()) return;
      try {
        run_chunk(c);
      } catch (...) {
        std::scoped_lock lock(error_mu);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 0; t + 1 < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

/// Convenience: fn(i) for i in [0, count), parallelized.  Only safe when
/// iterations write disjoint outputs.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t chunk = std::max<std::size_t>(1, count / (std::size_t{thread_budget()} * 8 + 1));
  parallel_chunks(count, chunk, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
  });
}

}  // namespace irep
