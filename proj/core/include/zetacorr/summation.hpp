// Copyright 2026 The zetacorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZETACORR_SUMMATION_HPP_
#define ZETACORR_SUMMATION_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zetacorr {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays
/// accurate when an addend is larger in magnitude than the running sum.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  void Add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  /// Folds another partial in, keeping its compensation term.
  void Merge(const CompensatedSum& other) {
    Add(other.sum_);
    Add(other.compensation_);
  }

  CompensatedSum& operator+=(double x) {
    Add(x);
    return *this;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void Add(std::complex<double> z) {
    re_.Add(z.real());
    im_.Add(z.imag());
  }
  void Add(double re, double im) {
    re_.Add(re);
    im_.Add(im);
  }
  void Merge(const CompensatedComplexSum& other) {
    re_.Merge(other.re_);
    im_.Merge(other.im_);
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// Splits [0, count) into fixed-size chunks and evaluates `fn(begin, end)` for
/// each, using up to `threads` workers. Results come back indexed by chunk, so
/// reducing them in order gives the same floating-point answer for any thread
/// count.
template <class Partial, class Fn>
std::vector<Partial> MapChunks(std::size_t count, std::size_t chunk_size,
                               unsigned threads, Fn&& fn) {
  chunk_size = std::max<std::size_t>(chunk_size, 1);
  const std::size_t chunks = (count + chunk_size - 1) / chunk_size;
  std::vector<Partial> partials(chunks);
  auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = c * chunk_size;
    const std::size_t end = std::min(count, begin + chunk_size);
    partials[c] = fn(begin, end);
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    return partials;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t c = next.fetch_add(1); c < chunks;
               c = next.fetch_add(1)) {
            run_chunk(c);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(chunks);
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return partials;
}

}  // namespace zetacorr

#endif  // ZETACORR_SUMMATION_HPP_
