#pragma once

// Parameter sets for the coefficient fields. Each tag fixes the number of
// parameters and their display names; the (q,t) field carries the quantum
// polynomials, q alone receives the t = q^r substitution, and r carries the
// classical limit.

#include <array>
#include <cstddef>
#include <string_view>

namespace capelli {

struct QT {
  static constexpr std::size_t kSize = 2;
  static constexpr std::array<std::string_view, 2> kNames{"q", "t"};
  static constexpr std::string_view kTag = "qt";
};

struct Q {
  static constexpr std::size_t kSize = 1;
  static constexpr std::array<std::string_view, 1> kNames{"q"};
  static constexpr std::string_view kTag = "q";
};

struct R {
  static constexpr std::size_t kSize = 1;
  static constexpr std::array<std::string_view, 1> kNames{"r"};
  static constexpr std::string_view kTag = "r";
};

template <class P>
concept ParameterSet = requires {
  { P::kSize } -> std::convertible_to<std::size_t>;
  P::kNames;
  P::kTag;
} && (P::kSize == 1 || P::kSize == 2);

}  // namespace capelli
