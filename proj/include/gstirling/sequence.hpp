#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gstirling/errors.hpp"
#include "gstirling/rational.hpp"

namespace gstirling {

/// The finite sequences a = (a_1..a_n) and e = (e_1..e_n) that define S^{a,e}.
///
/// Element accessors taking an index are 1-based to line up with the usual
/// combinatorial notation; the vector accessors expose 0-based storage.
class SequencePair {
 public:
  SequencePair() = default;

  SequencePair(std::vector<Rational> a, std::vector<Rational> e) : a_(std::move(a)), e_(std::move(e)) {
    if (a_.size() != e_.size()) {
      throw PreconditionError("sequence lengths differ: |a| = " + std::to_string(a_.size()) +
                              ", |e| = " + std::to_string(e_.size()));
    }
    a_nondecreasing_ = std::is_sorted(a_.begin(), a_.end());
  }

  std::size_t size() const noexcept { return a_.size(); }
  bool empty() const noexcept { return a_.empty(); }

  const std::vector<Rational>& a() const noexcept { return a_; }
  const std::vector<Rational>& e() const noexcept { return e_; }
  const Rational& a(std::size_t i) const { return a_.at(i - 1); }
  const Rational& e(std::size_t i) const { return e_.at(i - 1); }

  bool a_nondecreasing() const noexcept { return a_nondecreasing_; }

  /// The pair (e, a): its Stirling matrix is the inverse of this one's.
  SequencePair swapped() const { return SequencePair(e_, a_); }

  /// Leading length-`n` truncation.
  SequencePair prefix(std::size_t n) const {
    if (n > size()) throw PreconditionError("prefix longer than the sequences");
    return SequencePair({a_.begin(), a_.begin() + static_cast<std::ptrdiff_t>(n)},
                        {e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(n)});
  }

  friend bool operator==(const SequencePair& x, const SequencePair& y) {
    return x.a_ == y.a_ && x.e_ == y.e_;
  }

 private:
  std::vector<Rational> a_;
  std::vector<Rational> e_;
  bool a_nondecreasing_ = true;
};

/// Convenience for integer-valued sequences.
inline std::vector<Rational> to_rationals(const std::vector<long>& values) {
  return {values.begin(), values.end()};
}

}  // namespace gstirling
