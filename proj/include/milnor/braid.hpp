#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace milnor {

struct BraidError : std::runtime_error {
  enum class Kind { Syntax, IndexOutOfRange };
  BraidError(Kind k, const std::string& message) : std::runtime_error(message), kind(k) {}
  Kind kind;
};

/// Word in the braid group B_n: signed generator indices, +i for s_i and
/// -i for s_i^-1, each index in 1..n-1.
struct BraidWord {
  int n = 1;
  std::vector<int> letters;
};

/// `B<n>: s1 s2^-1 ...` with whitespace-separated letters.
BraidWord parse_braid(const std::string& text);

/// Sum of letter signs.
int exponent_sum(const BraidWord& b);

/// Bennequin number n - e(b) + 1: the enhancement of the fibered link built
/// from the closed braid, its axis, and an oppositely-oriented longitude for
/// each closed-braid component.
int hirasawa_lambda(const BraidWord& b);

/// Cycle count of the underlying permutation (sign-independent), i.e. the
/// number of components of the closed braid.
int closed_braid_components(const BraidWord& b);

}  // namespace milnor
